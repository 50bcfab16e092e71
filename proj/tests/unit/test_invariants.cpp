#include <doctest.h>

#include "support.hpp"
#include "wittlink/forms/real_part.hpp"
#include "wittlink/invariants/invariants.hpp"

using namespace wittlink;
using testsupport::qpoly;

namespace {

QT::Elem over_t(const QT& K, std::initializer_list<long> c, std::size_t d) {
    return K.from_poly(qpoly(c)) / K.from_poly(Poly<Rational>::monomial(Rational(1), d));
}

WittClass<QT> trefoil_class() {
    QT K = make_qt();
    return {K, {over_t(K, {-2, 2, -2}, 1), K.from_int(2)}};
}

const BraidWord kTrefoil = parse_braid("1 1 1");
const BraidWord kFourBraid = parse_braid("s1^3 s2^-1 s1^2 s3 s2^3 s3");

// Invariants of a symmetric class over Q(u) that vanish on hyperbolic forms.
bool qu_trivial(const WittClass<QT>& a0) {
    const auto a = reduce(a0);
    if (a.rank() % 2 != 0) return false;
    if (!(signed_determinant(a) == a.ctx.one())) return false;
    for (const auto& [k, r] : residues_qu(a)) {
        if (!r.trivial()) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("generators have zero invariant") {
    for (const auto& cfg : {FieldConfig::qt(), FieldConfig::q(), FieldConfig::fp(5), FieldConfig::fpt(3),
                            FieldConfig::fq(7, 3)}) {
        for (const char* w : {"1", "-1", "", "2"}) {
            auto v = theta_invariant(parse_braid(w), cfg);
            std::visit([](const auto& c) { CHECK(c.empty()); }, v);
        }
    }
    // c(g, g^-1) = tau(G_1, G_g, G_1) vanishes by the Thomas criterion.
    auto b = burau_qt();
    const auto v = burau_space(b, 2);
    const auto vhat = doubled_space(*v);
    const auto g = sigma_matrix(b, 1, 2);
    const auto one = graph_lagrangian(*v, vhat, eye(b.ctx, 2));
    CHECK(thomas_vanishes(one, graph_lagrangian(*v, vhat, g), one));
}

TEST_CASE("trefoil over Q(t)") {
    auto acc = markov_accumulate(burau_qt(), kTrefoil);
    CHECK(acc.raw_rank == 6);
    CHECK(acc.strands == 2);
    CHECK(battery(acc.value) == battery(trefoil_class()));
    CHECK(reduce(acc.value).entries.size() == 2);
    // c(s1, s1) + c(s1, s1^2) equals the prefix sum c(s1, s1) + c(s1^2, s1).
    auto b = burau_qt();
    const auto v = burau_space(b, 2);
    const auto s = sigma_matrix(b, 1, 2);
    auto suffix_order = add(meyer_cocycle(*v, s, s), meyer_cocycle(*v, s, s * s));
    CHECK(battery(suffix_order) == battery(acc.value));
    auto d = signed_det_invariant(kTrefoil);
    CHECK(d.D == qpoly({1, -1, 1}));
    CHECK(d.d == 1);
    CHECK(signed_det_invariant(parse_braid("1")) == Palindromic<Rational>{qpoly({1}), 0});
}

TEST_CASE("trefoil over Q and finite fields") {
    auto q = theta_q(kTrefoil);
    CHECK(signature(q) == 2);
    CHECK(invariants_q(q) == invariants_q(WittClass<RationalField>{RationalField{}, {Rational(6), Rational(2)}}));
    // Every nonzero u0 mod 3 is +-2, where t^2 - u0 t + 1 has a double root.
    CHECK_THROWS_AS(fq_invariant(kTrefoil, 3, 1), DegenerateError);
    CHECK_THROWS_AS(fq_invariant(kTrefoil, 3, 2), DegenerateError);
    auto e = fq_invariant(kTrefoil, 5, 1);
    CHECK(fq_invariant(invert(kTrefoil), 5, 1) == neg(e));
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        CHECK(fq_invariant(random_markov_pair(kTrefoil, seed, 6), 5, 1) == e);
    }
    CHECK(fq_invariant(parse_braid(""), 5, 1).is_zero());
    CHECK_THROWS_AS(fq_invariant(kTrefoil, 5, 2), DegenerateError);
    CHECK_THROWS_AS(fq_invariant(kTrefoil, 5, 3), DegenerateError);  // 3 = -2 mod 5
}

TEST_CASE("signature step functions") {
    auto s = signature_function(kTrefoil);
    REQUIRE(s.breakpoints.size() == 1);
    CHECK(s.breakpoints[0].poly == qpoly({-1, 1}));
    CHECK(s.values == std::vector<int>{0, 2});
    CHECK(theta_signature(kTrefoil, Rational(Integer(1), Integer(2))) == 2);
    CHECK(theta_signature(kTrefoil, Rational(Integer(1), Integer(6))) == 0);
    CHECK(theta_signature(kTrefoil, Rational(Integer(1), Integer(3))) == 2);
    CHECK(theta_signature(kTrefoil, Rational(Integer(1), Integer(3)), Limit::Left) == 0);
    CHECK(signature_function(parse_braid("1")).values == std::vector<int>{0});
    // The right limit at pi matches the signature at t = -1.
    CHECK(theta_signature(kTrefoil, Rational(1)) == signature(theta_q(kTrefoil)));
}

TEST_CASE("the 4-braid example") {
    auto d = signed_det_invariant(kFourBraid);
    CHECK(d.D == qpoly({3, -9, 15, -17, 15, -9, 3}));
    CHECK(d.d == 3);
    for (int v : signature_function(kFourBraid).values) CHECK((v == 0 || v == 2 || v == 4 || v == 6));
}

TEST_CASE("Weil trace values") {
    CHECK(weil_trace_value(parse_braid("1")) == WeilTraceValue{0, Rational(1), 1});
    CHECK(weil_trace_value(kTrefoil) == WeilTraceValue{2, Rational(3), 3});
    CHECK(weil_trace_value(invert(kTrefoil)) == WeilTraceValue{-2, Rational(3), -3});
    CHECK(weil_trace_value(kTrefoil).exponent_sum == 3);
}

TEST_CASE("Markov moves, relators and mirrors over Q(t)") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 6; ++i) {
        auto w = random_word(2 + static_cast<int>(rng() % 3), 1 + rng() % 6, rng);
        const auto bw = battery(theta_qt(w));
        CHECK(battery(theta_qt(random_markov_pair(w, rng(), 4))) == bw);
        CHECK(battery(theta_qt(invert(w))) == battery(neg(theta_qt(w))));
        // Both braid relators, inserted at the end.
        if (w.n >= 3) {
            auto r = concat(w, parse_braid("1 2 1 -2 -1 -2", w.n));
            CHECK(battery(theta_qt(r)) == bw);
        }
        auto r4 = concat(include(w, 4), parse_braid("1 3 -1 -3"));
        CHECK(battery(theta_qt(r4)) == bw);
        auto g = random_word(w.n, 3, rng);
        CHECK(battery(theta_qt(concat(w, g))) == battery(theta_qt(concat(g, w))));
    }
}

TEST_CASE("exact fields agree across Markov moves") {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 30; ++i) {
        auto w = random_word(2 + static_cast<int>(rng() % 4), 1 + rng() % 10, rng);
        auto v = random_markov_pair(w, rng(), 8);
        for (std::uint64_t p : {3ULL, 5ULL, 7ULL}) CHECK(canonical_fp(theta_fp(w, p)) == canonical_fp(theta_fp(v, p)));
        CHECK(invariants_q(theta_q(w)) == invariants_q(theta_q(v)));
        CHECK(battery(theta_fpt(w, 5)) == battery(theta_fpt(v, 5)));
        CHECK(fq_invariant(w, 7, 3) == fq_invariant(v, 7, 3));
    }
}

TEST_CASE("stabilization cocycle vanishes") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 10; ++i) {
        const int n = 2 + static_cast<int>(rng() % 3);
        auto w = random_word(n, 1 + rng() % 5, rng);
        auto b = burau_qt();
        const auto v = burau_space(b, n + 1);
        const auto vhat = doubled_space(*v);
        const auto g = burau_eval(b, w, n + 1);
        for (int s : {1, -1}) {
            const auto h = sigma_matrix(b, n, n + 1, s);
            const auto one = graph_lagrangian(*v, vhat, eye(b.ctx, n + 1));
            CHECK(thomas_vanishes(one, graph_lagrangian(*v, vhat, g), graph_lagrangian(*v, vhat, g * h)));
            CHECK(reduce(meyer_cocycle(*v, vhat, g, h, true)).empty());
        }
    }
}

TEST_CASE("rank parity matches the signature function") {
    std::mt19937_64 rng(24);
    for (int i = 0; i < 8; ++i) {
        auto w = random_word(3, 1 + rng() % 6, rng);
        auto th = theta_qt(w);
        for (int v : signature_function(th).values) CHECK((v - static_cast<int>(th.rank())) % 2 == 0);
    }
}

TEST_CASE("transfer to the fixed field commutes with the Maslov index") {
    std::mt19937_64 rng(25);
    auto b = burau_qt();
    const RealPart<RationalField> rp(b.ctx);
    for (int i = 0; i < 4; ++i) {
        const int n = 2 + static_cast<int>(rng() % 2);
        const auto v = burau_space(b, n);
        const auto vhat = doubled_space(*v);
        const auto target = rp.space(*vhat);
        const auto g = burau_eval(b, random_word(n, 2, rng));
        const auto h = burau_eval(b, random_word(n, 2, rng));
        const auto l1 = graph_lagrangian(*v, vhat, eye(b.ctx, n));
        const auto l2 = graph_lagrangian(*v, vhat, g);
        const auto l3 = graph_lagrangian(*v, vhat, g * h);
        auto big = transfer_class(maslov_index(l1, l2, l3));
        auto small = maslov_index(rp.lagrangian(target, l1), rp.lagrangian(target, l2), rp.lagrangian(target, l3));
        WittClass<QT> diff{big.ctx, big.entries};
        for (const auto& x : small.entries) diff.entries.push_back(-x);
        CHECK(qu_trivial(diff));
    }
}

TEST_CASE("alternative Meyer function") {
    auto q = burau_q();
    const auto v = burau_space(q, 4);
    const auto l = find_lagrangian(*v);
    CHECK(l.cols() == 2);
    CHECK(alt_meyer_w(parse_braid("", 4), l).residual == 0);
    CHECK(signature(alt_meyer_w(parse_braid("1 2 1", 4), l).w) == signature(alt_meyer_w(parse_braid("2 1 2", 4), l).w));
    CHECK(signature(alt_meyer_w(parse_braid("2 3 2", 4), l).w) == signature(alt_meyer_w(parse_braid("3 2 3", 4), l).w));
    std::mt19937_64 rng(26);
    std::optional<long> k;
    for (int i = 0; i < 10; ++i) {
        auto a = random_word(4, 1 + rng() % 5, rng), c = random_word(4, 1 + rng() % 5, rng);
        auto ra = alt_meyer_w(a, l), rc = alt_meyer_w(c, l), rac = alt_meyer_w(concat(a, c), l);
        CHECK(rac.residual == ra.residual + rc.residual);
        for (const auto& r : {ra, rc}) {
            if (r.exponent_sum == 0) {
                CHECK(r.residual == 0);
                continue;
            }
            CHECK(r.residual % r.exponent_sum == 0);
            if (!k) k = r.residual / r.exponent_sum;
            CHECK(r.residual == *k * r.exponent_sum);
        }
    }
    CHECK_THROWS_AS(alt_meyer_w(parse_braid("1", 4), eye(RationalField{}, 4).block(0, 0, 4, 2)), DomainError);
}
