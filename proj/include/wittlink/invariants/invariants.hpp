#pragma once

#include <map>
#include <variant>

#include "wittlink/burau/burau.hpp"
#include "wittlink/witt/battery.hpp"

// The Markov function is accumulated over prefixes: with M_j = r(s_1 ... s_j),
//   f(s_1 ... s_L) = sum_{j >= 2} c(M_{j-1}, r(s_j)),   c(g, h) = tau(G_1, G_g, G_gh).
// This is the Meyer-additive function normalized by f(sigma_i) = 0: the identity
// f(gh) = f(g) + f(h) + c(g, h) unrolls to the sum above once f(sigma_i^-1) = 0 too, and
// f(sigma_i^-1) = -f(sigma_i) - c(sigma_i, sigma_i^-1) where c(g, g^-1) = tau(G_1, G_g, G_1) = 0.

namespace wittlink {

template <class Ctx>
struct Accumulation {
    WittClass<Ctx> value;
    std::size_t raw_rank = 0;  // total rank of the cocycle forms before any cancellation
    int strands = 0;           // the m the word was evaluated in
};

/// Prefix Meyer accumulation for the letter matrices of a word in a non-degenerate space.
template <class Ctx>
Accumulation<Ctx> accumulate(const FormSpace<Ctx>& v, const std::vector<Mat<Ctx>>& letters) {
    if (!v.nondegenerate()) throw DegenerateError("the Burau form is degenerate");
    const auto vhat = doubled_space(v);
    Accumulation<Ctx> acc{WittClass<Ctx>{v.ctx, {}}, 0, static_cast<int>(v.dim())};
    Mat<Ctx> m = eye(v.ctx, v.dim());
    for (std::size_t j = 0; j < letters.size(); ++j) {
        if (j > 0) {
            auto c = meyer_cocycle(v, vhat, m, letters[j], false);
            acc.raw_rank += c.rank();
            acc.value = add(acc.value, c);
        }
        m = m * letters[j];
    }
    return acc;
}

template <class Ctx>
Accumulation<Ctx> markov_accumulate(const BurauContext<Ctx>& b, const BraidWord& w) {
    const int m = effective_n(b, w.n);
    std::vector<Mat<Ctx>> letters;
    letters.reserve(w.length());
    std::map<std::pair<int, int>, Mat<Ctx>> cache;
    for (const auto& l : w.letters) {
        auto key = std::make_pair(l.index, l.sign);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, sigma_matrix(b, l.index, m, l.sign)).first;
        letters.push_back(it->second);
    }
    return accumulate(*burau_space(b, m), letters);
}

/// Burau space over F_p(t) restricted to F_p(u) and specialized at u = u0. Returns the
/// specialized space and letter matrices for B_m; throws DegenerateError if the
/// specialization is degenerate for every admissible m.
struct SpecializedBurau {
    SpacePtr<PrimeField> space;
    int strands = 0;
    std::map<std::pair<int, int>, Mat<PrimeField>> letters;
};
SpecializedBurau specialized_burau(std::uint64_t p, std::uint64_t u0, int n, const BraidWord* w = nullptr);

Accumulation<PrimeField> special_accumulate(std::uint64_t p, std::uint64_t u0, const BraidWord& w);

using AnyWitt = std::variant<WittClass<QT>, WittClass<RationalField>, WittClass<PrimeField>, WittClass<FpT>>;

/// Theta_K of the closure of w for the configured field.
AnyWitt markov_f(const BraidWord& w, const FieldConfig& cfg);
AnyWitt theta_invariant(const BraidWord& w, const FieldConfig& cfg);

WittClass<QT> theta_qt(const BraidWord& w);
WittClass<RationalField> theta_q(const BraidWord& w);
WittClass<PrimeField> theta_fp(const BraidWord& w, std::uint64_t p);
WittClass<FpT> theta_fpt(const BraidWord& w, std::uint64_t p);

/// Minimal palindromic form of the signed determinant of Theta_{Q(t)}.
Palindromic<Rational> signed_det_invariant(const BraidWord& w);

SignatureStepFunction signature_function(const BraidWord& w);
/// Signature at theta = r pi, right limit at a jump unless told otherwise.
int theta_signature(const BraidWord& w, const Rational& r, Limit limit = Limit::Right);

FiniteWitt fq_invariant(const BraidWord& w, std::uint64_t p, std::uint64_t u0);

/// e^{-i pi signature/4} sqrt(radicand), reported with the exponent sum of the word.
struct WeilTraceValue {
    int signature = 0;
    Rational radicand;
    long exponent_sum = 0;
    friend bool operator==(const WeilTraceValue& a, const WeilTraceValue& b) {
        return a.signature == b.signature && a.radicand == b.radicand;
    }
};
WeilTraceValue weil_trace_value(const BraidWord& w);

/// Alternative Meyer-additive function built from a lagrangian l of V (not of the doubled
/// space) over Q at t = -1: w has coboundary mu(g, h) = tau(l, g l, gh l) and w(sigma_1) = 0.
/// residual = sig f - sig w - sig tau(G_beta, G_1, l + l).
struct AltMeyer {
    WittClass<RationalField> w;
    WittClass<RationalField> correction;
    long residual = 0;
    long exponent_sum = 0;
};
AltMeyer alt_meyer_w(const BraidWord& w, const Mat<RationalField>& l);

/// Some lagrangian of a non-degenerate symplectic space (trivial involution, epsilon = -1).
template <class Ctx>
Mat<Ctx> find_lagrangian(const FormSpace<Ctx>& v) {
    if (v.epsilon != -1 || v.ctx.involutive() || !v.nondegenerate()) {
        throw DomainError("only non-degenerate symplectic spaces are hyperbolic here");
    }
    const auto& K = v.ctx;
    Mat<Ctx> l = zeros(K, v.dim(), 0);
    while (2 * l.cols() < v.dim()) {
        // Vectors orthogonal to l; every vector is isotropic for a symplectic form.
        Mat<Ctx> perp = l.cols() == 0 ? eye(K, v.dim()) : null_space(K, (v.gram.transpose() * l).transpose());
        for (std::size_t j = 0; j < perp.cols(); ++j) {
            Mat<Ctx> cand = Mat<Ctx>::hstack(l, perp.column(j));
            if (rank(K, cand) == cand.cols()) {
                l = std::move(cand);
                break;
            }
        }
    }
    return l;
}

}  // namespace wittlink
