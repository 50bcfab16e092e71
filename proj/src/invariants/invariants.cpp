#include "wittlink/invariants/invariants.hpp"

#include "wittlink/forms/real_part.hpp"

namespace wittlink {

namespace {

Zp specialize(const PrimeField& F, const FpT::Elem& x, const Zp& u0) {
    const Zp d = x.den().eval(u0);
    if (F.is_zero(d)) throw DegenerateError("u0 = " + u0.to_string() + " is a pole of a Burau entry");
    return x.num().eval(u0) / d;
}

Mat<PrimeField> specialize(const PrimeField& F, const Mat<FpT>& m, const Zp& u0) {
    Mat<PrimeField> out = zeros(F, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = specialize(F, m(i, j), u0);
    }
    return out;
}

}  // namespace

SpecializedBurau specialized_burau(std::uint64_t p, std::uint64_t u0, int n, const BraidWord* w) {
    const PrimeField F(p);
    const Zp u(static_cast<std::int64_t>(u0 % p), p);
    if (F.is_zero(u)) throw DegenerateError("u0 must be nonzero mod p");
    const auto b = burau_fpt(p);
    const RealPart<PrimeField> rp(b.ctx);
    for (int m = n; m <= 2 * n + 2; ++m) {
        const auto v = burau_space(b, m);
        if (!v->nondegenerate()) continue;
        const auto s = rp.space(*v);
        auto sp = FormSpace<PrimeField>::make(F, -1, specialize(F, s->gram, u));
        if (!sp->nondegenerate()) continue;
        SpecializedBurau out{sp, m, {}};
        if (w) {
            for (const auto& l : w->letters) {
                auto key = std::make_pair(l.index, l.sign);
                if (out.letters.count(key)) continue;
                out.letters.emplace(key, specialize(F, rp.matrix(sigma_matrix(b, l.index, m, l.sign)), u));
            }
        }
        return out;
    }
    throw DegenerateError("the real-part Burau form over F_" + std::to_string(p) + " is degenerate at u0 = " +
                          std::to_string(u0) + " for every strand count from " + std::to_string(n) + " to " +
                          std::to_string(2 * n + 2));
}

Accumulation<PrimeField> special_accumulate(std::uint64_t p, std::uint64_t u0, const BraidWord& w) {
    const auto sb = specialized_burau(p, u0, w.n, &w);
    std::vector<Mat<PrimeField>> letters;
    for (const auto& l : w.letters) letters.push_back(sb.letters.at({l.index, l.sign}));
    return accumulate(*sb.space, letters);
}

AnyWitt markov_f(const BraidWord& w, const FieldConfig& cfg) {
    switch (cfg.tag) {
        case FieldTag::QT:
            return markov_accumulate(burau_qt(), w).value;
        case FieldTag::Q_MINUS1:
            return markov_accumulate(burau_q(), w).value;
        case FieldTag::FP_MINUS1:
            return markov_accumulate(burau_fp(cfg.p), w).value;
        case FieldTag::FPT:
            return markov_accumulate(burau_fpt(cfg.p), w).value;
        case FieldTag::FP_SPECIAL:
            return special_accumulate(cfg.p, cfg.u0, w).value;
    }
    throw DomainError("unknown field configuration");
}

AnyWitt theta_invariant(const BraidWord& w, const FieldConfig& cfg) { return markov_f(w, cfg); }

WittClass<QT> theta_qt(const BraidWord& w) { return markov_accumulate(burau_qt(), w).value; }
WittClass<RationalField> theta_q(const BraidWord& w) { return markov_accumulate(burau_q(), w).value; }
WittClass<PrimeField> theta_fp(const BraidWord& w, std::uint64_t p) {
    return markov_accumulate(burau_fp(p), w).value;
}
WittClass<FpT> theta_fpt(const BraidWord& w, std::uint64_t p) { return markov_accumulate(burau_fpt(p), w).value; }

Palindromic<Rational> signed_det_invariant(const BraidWord& w) {
    return minimal_palindromic(signed_determinant(theta_qt(w)));
}

SignatureStepFunction signature_function(const BraidWord& w) { return signature_function(theta_qt(w)); }

int theta_signature(const BraidWord& w, const Rational& r, Limit limit) {
    return evaluate(signature_function(w), u_of_angle(r), limit);
}

FiniteWitt fq_invariant(const BraidWord& w, std::uint64_t p, std::uint64_t u0) {
    return canonical_fp(special_accumulate(p, u0, w).value);
}

WeilTraceValue weil_trace_value(const BraidWord& w) {
    return {signature(theta_q(w)), knot_determinant(w), exponent_sum(w)};
}

namespace {

// sum_{j >= 2} tau(l, M_{j-1} l, M_j l) over the prefixes M_j of the word.
WittClass<RationalField> prefix_mu(const BurauContext<RationalField>& b, const SpacePtr<RationalField>& v, int m,
                                   const Mat<RationalField>& l, const BraidWord& w) {
    const RationalField K;
    WittClass<RationalField> acc{K, {}};
    Mat<RationalField> g = eye(K, static_cast<std::size_t>(m));
    for (std::size_t j = 0; j < w.letters.size(); ++j) {
        const auto s = sigma_matrix(b, w.letters[j].index, m, w.letters[j].sign);
        if (j > 0) {
            acc = add(acc, maslov_index(Lagrangian<RationalField>::trusted(v, l), Lagrangian<RationalField>::make(v, g * l),
                                        Lagrangian<RationalField>::make(v, g * s * l)));
        }
        g = g * s;
    }
    return acc;
}

}  // namespace

AltMeyer alt_meyer_w(const BraidWord& w, const Mat<RationalField>& l) {
    const auto b = burau_q();
    const int m = effective_n(b, w.n);
    if (l.rows() != static_cast<std::size_t>(m)) {
        throw DomainError("lagrangian has " + std::to_string(l.rows()) + " rows, the Burau space has dimension " +
                          std::to_string(m));
    }
    const auto v = burau_space(b, m);
    const RationalField K;
    (void)Lagrangian<RationalField>::make(v, l);  // validates l

    // Unlike f, w is not conjugation invariant, so w(sigma_i) = a_i may depend on i. The prefix
    // sum p satisfies w = p + sum_i a_i e_i (e_i the exponent sum of sigma_i); evaluating on the
    // braid relator s_i s_{i+1} s_i s_{i+1}^-1 s_i^-1 s_{i+1}^-1 gives a_{i+1} = a_i + p(relator).
    // We take a_1 = 0; a common shift only moves k.
    std::vector<long> a(static_cast<std::size_t>(m), 0);
    for (int i = 1; i + 1 < m; ++i) {
        BraidWord rel{m, {{i, 1}, {i + 1, 1}, {i, 1}, {i + 1, -1}, {i, -1}, {i + 1, -1}}};
        a[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i - 1)] + signature(prefix_mu(b, v, m, l, rel));
    }
    AltMeyer out{prefix_mu(b, v, m, l, include(w, m)), WittClass<RationalField>{K, {}}, 0, exponent_sum(w)};
    WittClass<RationalField> shift{K, {}};
    for (const auto& x : w.letters) {
        const long c = a[static_cast<std::size_t>(x.index - 1)] * x.sign;
        for (long k = 0; k < std::abs(c); ++k) shift.entries.emplace_back(c > 0 ? 1 : -1);
    }
    out.w = add(out.w, shift);

    Mat<RationalField> g = burau_eval(b, w, m);
    const auto vhat = doubled_space(*v);
    out.correction = reduce(maslov_index(graph_lagrangian(*v, vhat, g), graph_lagrangian(*v, vhat, eye(K, g.rows())),
                                         sum_lagrangian(vhat, l, l)));
    out.residual = signature(markov_accumulate(b, w).value) - signature(out.w) - signature(out.correction);
    return out;
}

}  // namespace wittlink
