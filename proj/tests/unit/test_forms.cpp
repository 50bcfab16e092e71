#include <doctest.h>

#include "support.hpp"
#include "wittlink/forms/form_space.hpp"
#include "wittlink/forms/real_part.hpp"

using namespace wittlink;

namespace {

using Q = RationalField;
using QM = Mat<Q>;

QM qmat(std::size_t r, std::size_t c, std::initializer_list<long> v) {
    QM m(r, c, Rational(0));
    std::size_t k = 0;
    for (long x : v) {
        m(k / c, k % c) = Rational(x);
        ++k;
    }
    return m;
}

// Signature of a list of rationals.
int signature(const std::vector<Rational>& d) {
    int s = 0;
    for (const auto& x : d) s += x.sign();
    return s;
}

QM random_invertible(std::mt19937_64& rng, std::size_t n) {
    Q ctx;
    for (;;) {
        QM m(n, n, Rational(0));
        std::uniform_int_distribution<int> c(-3, 3);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(c(rng));
        }
        if (rank(ctx, m) == n) return m;
    }
}

// H_2 over Q(t) and the block [[1-t, 1], [t, 0]], written out by hand.
struct Burau2 {
    QT K = make_qt();
    Mat<QT> h, sigma;
    Burau2() : h(2, 2, K.zero()), sigma(2, 2, K.zero()) {
        auto t = K.gen();
        // Omega = [[1, 0], [1 - t, 1]]; H = Omega - adjoint(Omega).
        h(0, 1) = -(K.one() - K.conj(t));
        h(1, 0) = K.one() - t;
        sigma(0, 0) = K.one() - t;
        sigma(0, 1) = K.one();
        sigma(1, 0) = t;
    }
};

}  // namespace

TEST_CASE("linear algebra basics") {
    Q ctx;
    QM a = qmat(2, 2, {1, 2, 3, 4});
    CHECK(det(ctx, a) == Rational(-2));
    CHECK(a * inverse(ctx, a) == eye(ctx, 2));
    QM b = qmat(2, 3, {1, 2, 3, 2, 4, 6});
    CHECK(rank(ctx, b) == 1);
    QM k = null_space(ctx, b);
    CHECK(k.cols() == 2);
    CHECK(is_zero_matrix(ctx, b * k));
    CHECK_THROWS_AS(inverse(ctx, qmat(2, 2, {1, 2, 2, 4})), DivisionByZero);
    // Column echelon form is a canonical representative of the span.
    QM c1 = qmat(3, 2, {1, 0, 2, 1, 0, 5});
    QM c2 = c1 * qmat(2, 2, {2, 1, 1, 1});
    CHECK(column_echelon(ctx, c1) == column_echelon(ctx, c2));
}

TEST_CASE("form spaces validate symmetry") {
    Q ctx;
    CHECK_NOTHROW(FormSpace<Q>::make(ctx, -1, qmat(2, 2, {0, 1, -1, 0})));
    CHECK_THROWS_AS(FormSpace<Q>::make(ctx, -1, qmat(2, 2, {0, 1, 1, 0})), DomainError);
    CHECK_THROWS_AS(FormSpace<Q>::make(ctx, 1, qmat(2, 2, {0, 1, -1, 0})), DomainError);
}

TEST_CASE("graph lagrangians") {
    Q ctx;
    auto v = FormSpace<Q>::make(ctx, -1, qmat(2, 2, {0, 1, -1, 0}));
    auto vhat = doubled_space(*v);
    auto g1 = graph_lagrangian(*v, vhat, eye(ctx, 2));
    auto gm1 = graph_lagrangian(*v, vhat, -eye(ctx, 2));
    CHECK(g1.basis() == QM::vstack(eye(ctx, 2), eye(ctx, 2)));
    CHECK(is_zero_matrix(ctx, vhat->pairing(g1.basis(), g1.basis())));
    CHECK(rank(ctx, QM::hstack(g1.basis(), gm1.basis())) == 4);
    CHECK(intersection_dim(g1, gm1) == 0);
    CHECK(intersection_dim(g1, g1) == 2);
    CHECK_THROWS_AS(graph_lagrangian(*v, vhat, qmat(2, 2, {2, 0, 0, 1})), DomainError);
    // A shear fixes a line: Gamma_1 ∩ Gamma_g = ker(g - 1).
    QM shear = qmat(2, 2, {1, 1, 0, 1});
    auto gs = graph_lagrangian(*v, vhat, shear);
    CHECK(intersection_dim(g1, gs) == 1);
    CHECK(Lagrangian<Q>::make(vhat, gs.basis() * qmat(2, 2, {3, 1, 1, 1})).basis() == gs.basis());
}

TEST_CASE("graph of the Burau block over Q(t)") {
    Burau2 b;
    auto v = FormSpace<QT>::make(b.K, -1, b.h);
    CHECK(v->preserves(b.sigma));
    auto vhat = doubled_space(*v);
    auto l = graph_lagrangian(*v, vhat, b.sigma);
    CHECK(l.basis().rows() == 4);
    CHECK(l.basis().cols() == 2);
    CHECK(is_zero_matrix(b.K, vhat->pairing(l.basis(), l.basis())));
    // Gamma_1 ∩ Gamma_sigma = ker(sigma - 1), which is spanned by (1, t).
    auto one = graph_lagrangian(*v, vhat, eye(b.K, 2));
    CHECK(intersection_dim(one, l) == 1);
}

TEST_CASE("hermitian diagonalization examples") {
    Q ctx;
    auto d = diagonalize_hermitian(ctx, qmat(2, 2, {0, 1, 1, 0}));
    CHECK(d.kernel_dim == 0);
    REQUIRE(d.entries.size() == 2);
    CHECK(d.entries[0] == Rational(2));
    CHECK(d.entries[1] == Rational(Integer(-1), Integer(2)));

    auto z = diagonalize_hermitian(ctx, QM(3, 3, Rational(0)));
    CHECK(z.kernel_dim == 3);
    CHECK(z.entries.empty());

    auto a = diagonalize_hermitian(ctx, qmat(2, 2, {5, 0, 0, 0}));
    CHECK(a.kernel_dim == 1);
    REQUIRE(a.entries.size() == 1);
    CHECK(a.entries[0] == Rational(5));
    CHECK_THROWS_AS(diagonalize_hermitian(ctx, qmat(2, 2, {0, 1, 2, 0})), DomainError);
}

TEST_CASE("hermitian diagonalization over Q(t) with a purely imaginary pivot") {
    QT K = make_qt();
    auto t = K.gen();
    // G = [[0, t - 1/t], [1/t - t, 0]] is hermitian with Re G_12 = 0.
    Mat<QT> g(2, 2, K.zero());
    g(0, 1) = t - t.inv();
    g(1, 0) = t.inv() - t;
    auto d = diagonalize_hermitian(K, g);
    CHECK(d.kernel_dim == 0);
    REQUIRE(d.entries.size() == 2);
    CHECK(d.entries[0] == K.from_int(2));
    for (const auto& e : d.entries) CHECK(is_fixed(K, e));
}

TEST_CASE("diagonalization is congruence invariant (Sylvester oracle)") {
    Q ctx;
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> c(-4, 4), nd(1, 5);
    for (int it = 0; it < 100; ++it) {
        std::size_t n = static_cast<std::size_t>(nd(rng));
        QM g(n, n, Rational(0));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) g(i, j) = g(j, i) = Rational(it % 3 == 0 && i == j ? 0 : c(rng));
        }
        QM p = random_invertible(rng, n);
        auto d1 = diagonalize_hermitian(ctx, g);
        auto d2 = diagonalize_hermitian(ctx, p.transpose() * g * p);
        CHECK(d1.kernel_dim == d2.kernel_dim);
        CHECK(d1.kernel_dim == n - rank(ctx, g));
        CHECK(signature(d1.entries) == signature(d2.entries));
    }
}

TEST_CASE("Maslov index of three lines in the symplectic plane") {
    Q ctx;
    auto v = FormSpace<Q>::make(ctx, -1, qmat(2, 2, {0, 1, -1, 0}));
    auto l1 = Lagrangian<Q>::make(v, qmat(2, 1, {1, 0}));
    auto l2 = Lagrangian<Q>::make(v, qmat(2, 1, {0, 1}));
    auto l3 = Lagrangian<Q>::make(v, qmat(2, 1, {1, 1}));
    // Hand computation: Gram [[0,1,-1],[1,0,-1],[-1,-1,0]], det 2, trace 0.
    CHECK(maslov_gram(l1, l2, l3) == qmat(3, 3, {0, 1, -1, 1, 0, -1, -1, -1, 0}));
    auto tau = maslov_index(l1, l2, l3);
    CHECK(tau.rank() == 3);
    CHECK(signature(tau.entries) == -1);
    CHECK(!thomas_vanishes(l1, l2, l3));
    CHECK(thomas_vanishes(l1, l2, l1));
    CHECK(signature(maslov_index(l1, l2, l1).entries) == 0);
}

TEST_CASE("Maslov Gram is hermitian for graph lagrangians over Q(t)") {
    Burau2 b;
    auto v = FormSpace<QT>::make(b.K, -1, b.h);
    auto vhat = doubled_space(*v);
    Mat<QT> s2 = b.sigma * b.sigma, s3 = s2 * b.sigma;
    auto g = maslov_gram(graph_lagrangian(*v, vhat, eye(b.K, 2)), graph_lagrangian(*v, vhat, s2),
                         graph_lagrangian(*v, vhat, s3));
    CHECK(adjoint(b.K, g) == g);
    // c(g, g^-1) = tau(Gamma_1, Gamma_g, Gamma_1) satisfies Thomas's criterion.
    auto one = graph_lagrangian(*v, vhat, eye(b.K, 2));
    auto gs = graph_lagrangian(*v, vhat, b.sigma);
    CHECK(thomas_vanishes(one, gs, one));
}

TEST_CASE("real part of a one-dimensional hermitian form") {
    QT K = make_qt();
    RealPart<RationalField> rp(K);
    auto a = K.from_int(3);
    auto v = FormSpace<QT>::make(K, 1, Mat<QT>(1, 1, a));
    auto s = rp.space(*v);
    // s(1, t) = Re(3 t) = 3u/2.
    auto u = rp.small.gen();
    CHECK(s->gram(0, 0) == rp.small.from_int(3));
    CHECK(s->gram(0, 1) == u * rp.small.from_int(3) / rp.small.from_int(2));
    CHECK(s->gram(1, 0) == s->gram(0, 1));
    CHECK(s->gram(1, 1) == rp.small.from_int(3));
    CHECK_THROWS_AS(RealPart<RationalField>{make_qu()}, DomainError);
}

TEST_CASE("real part transfers lagrangians to lagrangians") {
    Burau2 b;
    RealPart<RationalField> rp(b.K);
    auto v = FormSpace<QT>::make(b.K, -1, b.h);
    auto vhat = doubled_space(*v);
    auto vk = rp.space(*vhat);
    CHECK(vk->epsilon == -1);
    CHECK(vk->nondegenerate());
    auto l = graph_lagrangian(*v, vhat, b.sigma);
    CHECK_NOTHROW(rp.lagrangian(vk, l));
    // Transferring a product is the product of transfers.
    Mat<QT> s2 = b.sigma * b.sigma;
    CHECK(rp.matrix(s2) == rp.matrix(b.sigma) * rp.matrix(b.sigma));
    CHECK(rp.space(*v)->preserves(rp.matrix(b.sigma)));
}
