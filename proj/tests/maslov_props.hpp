// Maslov index axioms on random instances, shared by the unit and acceptance tests.
#pragma once

#include <map>
#include <random>
#include <string>

#include "wittlink/burau/burau.hpp"
#include "wittlink/witt/battery.hpp"

namespace testsupport {

using namespace wittlink;

/// name -> (instances, failures)
struct Tally {
    std::map<std::string, std::pair<int, int>> counts;
    void record(const std::string& name, bool ok) {
        auto& c = counts[name];
        ++c.first;
        if (!ok) ++c.second;
    }
    int failures() const {
        int f = 0;
        for (const auto& [k, c] : counts) f += c.second;
        return f;
    }
};

template <class Ctx>
Mat<Ctx> block_diag(const Ctx& K, const Mat<Ctx>& a, const Mat<Ctx>& b) {
    Mat<Ctx> m = zeros(K, a.rows() + b.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), a.cols(), b);
    return m;
}

// ---- F_p: random symplectic spaces and lagrangians ----

inline Zp random_zp(const PrimeField& F, std::mt19937_64& rng) {
    return Zp(static_cast<std::int64_t>(rng() % F.p), F.p);
}

inline Mat<PrimeField> random_matrix(const PrimeField& F, std::size_t r, std::size_t c, std::mt19937_64& rng) {
    Mat<PrimeField> m = zeros(F, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) m(i, j) = random_zp(F, rng);
    }
    return m;
}

inline Mat<PrimeField> random_invertible(const PrimeField& F, std::size_t n, std::mt19937_64& rng) {
    for (;;) {
        auto m = random_matrix(F, n, n, rng);
        if (rank(F, m) == n) return m;
    }
}

/// P^T J P with J the standard symplectic matrix of size 2k.
inline SpacePtr<PrimeField> random_symplectic(const PrimeField& F, std::size_t k, std::mt19937_64& rng) {
    Mat<PrimeField> j = zeros(F, 2 * k, 2 * k);
    for (std::size_t i = 0; i < k; ++i) {
        j(i, k + i) = F.one();
        j(k + i, i) = -F.one();
    }
    const auto p = random_invertible(F, 2 * k, rng);
    return FormSpace<PrimeField>::make(F, -1, p.transpose() * j * p);
}

/// Grows an isotropic subspace by random vectors of its orthogonal.
inline Lagrangian<PrimeField> random_lagrangian(const SpacePtr<PrimeField>& v, std::mt19937_64& rng) {
    const auto& F = v->ctx;
    Mat<PrimeField> l = zeros(F, v->dim(), 0);
    while (2 * l.cols() < v->dim()) {
        Mat<PrimeField> perp = l.cols() == 0 ? eye(F, v->dim()) : null_space(F, l.transpose() * v->gram);
        Mat<PrimeField> x = perp * random_matrix(F, perp.cols(), 1, rng);
        Mat<PrimeField> cand = Mat<PrimeField>::hstack(l, x);
        if (rank(F, cand) == cand.cols()) l = std::move(cand);
    }
    return Lagrangian<PrimeField>::make(v, l);
}

/// Product of random symplectic transvections x -> x + c w(v, x) v.
inline Mat<PrimeField> random_symplectic_map(const FormSpace<PrimeField>& v, std::mt19937_64& rng) {
    const auto& F = v.ctx;
    Mat<PrimeField> g = eye(F, v.dim());
    for (int s = 0; s < 4; ++s) {
        const auto x = random_matrix(F, v.dim(), 1, rng);
        Mat<PrimeField> c(1, 1, random_zp(F, rng));
        g = (eye(F, v.dim()) + x * c * x.transpose() * v.gram) * g;
    }
    return g;
}

inline bool fp_zero(const WittClass<PrimeField>& a) { return canonical_fp(a).is_zero(); }
inline bool fp_equal(const WittClass<PrimeField>& a, const WittClass<PrimeField>& b) {
    return canonical_fp(a) == canonical_fp(b);
}

inline void maslov_suite_fp(std::uint64_t p, int instances, std::uint64_t seed, Tally& tally) {
    const PrimeField F(p);
    std::mt19937_64 rng(seed);
    for (int it = 0; it < instances; ++it) {
        // Doubled space of a random symplectic V, so the swap is an anti-isometry.
        const std::size_t k = 1 + rng() % 2;
        const auto v = random_symplectic(F, k, rng);
        const auto vhat = doubled_space(*v);
        const auto l1 = random_lagrangian(vhat, rng), l2 = random_lagrangian(vhat, rng);
        const auto l3 = random_lagrangian(vhat, rng), l4 = random_lagrangian(vhat, rng);
        const auto t123 = maslov_index(l1, l2, l3);

        tally.record("dihedral", fp_equal(t123, neg(maslov_index(l3, l2, l1))) && fp_equal(t123, maslov_index(l3, l1, l2)));
        tally.record("cocycle", fp_equal(add(t123, maslov_index(l1, l3, l4)),
                                         add(maslov_index(l1, l2, l4), maslov_index(l2, l3, l4))));

        const auto w = random_symplectic(F, 1, rng);
        const auto m1 = random_lagrangian(w, rng), m2 = random_lagrangian(w, rng), m3 = random_lagrangian(w, rng);
        const auto vw = FormSpace<PrimeField>::make(F, -1, block_diag(F, vhat->gram, w->gram));
        auto sum = [&](const Lagrangian<PrimeField>& a, const Lagrangian<PrimeField>& b) {
            return Lagrangian<PrimeField>::make(vw, block_diag(F, a.basis(), b.basis()));
        };
        tally.record("additivity", fp_equal(maslov_index(sum(l1, m1), sum(l2, m2), sum(l3, m3)),
                                            add(t123, maslov_index(m1, m2, m3))));

        const auto g = random_symplectic_map(*vhat, rng);
        tally.record("unitary invariance",
                     fp_equal(maslov_index(transform(g, l1), transform(g, l2), transform(g, l3)), t123));

        Mat<PrimeField> swap = zeros(F, vhat->dim(), vhat->dim());
        const std::size_t n = v->dim();
        swap.set_block(0, n, eye(F, n));
        swap.set_block(n, 0, eye(F, n));
        tally.record("anti-isometry",
                     fp_equal(maslov_index(transform(swap, l1), transform(swap, l2), transform(swap, l3)), neg(t123)));

        // Triples where the Thomas criterion holds: a repeated lagrangian, or a random one that
        // happens to satisfy it.
        const Lagrangian<PrimeField>* pick[3][3] = {{&l1, &l2, &l2}, {&l1, &l2, &l1}, {&l1, &l1, &l3}};
        const auto& tri = pick[it % 3];
        bool ok = true;
        if (thomas_vanishes(*tri[0], *tri[1], *tri[2])) ok = fp_zero(maslov_index(*tri[0], *tri[1], *tri[2]));
        if (thomas_vanishes(l1, l2, l3)) ok = ok && fp_zero(t123);
        tally.record("thomas implies zero", ok);

        // tau(G_g, l + g l, l + l') = 0 for g unitary on V and l, l' lagrangians of V.
        const auto gv = random_symplectic_map(*v, rng);
        const auto a = random_lagrangian(v, rng), b = random_lagrangian(v, rng);
        const auto lemma = maslov_index(graph_lagrangian(*v, vhat, gv), sum_lagrangian(vhat, a.basis(), gv * a.basis()),
                                        sum_lagrangian(vhat, a.basis(), b.basis()));
        tally.record("graph/lagrangian vanishing", fp_zero(lemma));
    }
}

// ---- Q(t): graph lagrangians of Burau matrices in the doubled Burau space ----

inline bool qt_zero(const WittClass<QT>& a) { return battery(a).trivial(); }
inline bool qt_equal(const WittClass<QT>& a, const WittClass<QT>& b) { return qt_zero(add(a, neg(b))); }

inline void maslov_suite_qt(int instances, std::uint64_t seed, Tally& tally) {
    std::mt19937_64 rng(seed);
    const auto b = burau_qt();
    const auto& K = b.ctx;
    for (int it = 0; it < instances; ++it) {
        const int n = 2 + static_cast<int>(rng() % 2);
        const auto v = burau_space(b, n);
        const auto vhat = doubled_space(*v);
        auto word = [&](std::size_t len) { return burau_eval(b, random_word(n, len, rng)); };
        auto graph = [&](const Mat<QT>& g) { return graph_lagrangian(*v, vhat, g, false); };
        const auto g1 = word(1 + rng() % 3), g2 = word(1 + rng() % 3), g3 = word(1 + rng() % 3);
        const auto l1 = graph(g1), l2 = graph(g2), l3 = graph(g3), l4 = graph(word(2));
        const auto t123 = maslov_index(l1, l2, l3);

        tally.record("dihedral", qt_equal(t123, neg(maslov_index(l3, l2, l1))) && qt_equal(t123, maslov_index(l3, l1, l2)));
        tally.record("cocycle", qt_equal(add(t123, maslov_index(l1, l3, l4)),
                                         add(maslov_index(l1, l2, l4), maslov_index(l2, l3, l4))));

        // Direct sum with the doubled 2-strand space.
        const auto w = burau_space(b, 2);
        const auto what = doubled_space(*w);
        const auto h1 = burau_eval(b, random_word(2, 2, rng)), h2 = burau_eval(b, random_word(2, 2, rng));
        const auto m1 = graph_lagrangian(*w, what, eye(K, 2), false), m2 = graph_lagrangian(*w, what, h1, false);
        const auto m3 = graph_lagrangian(*w, what, h2, false);
        const auto vw = FormSpace<QT>::make(K, -1, block_diag(K, vhat->gram, what->gram));
        auto sum = [&](const Lagrangian<QT>& x, const Lagrangian<QT>& y) {
            return Lagrangian<QT>::trusted(vw, block_diag(K, x.basis(), y.basis()));
        };
        tally.record("additivity",
                     qt_equal(maslov_index(sum(l1, m1), sum(l2, m2), sum(l3, m3)), add(t123, maslov_index(m1, m2, m3))));

        const auto u = block_diag(K, word(2), word(2));
        auto moved = [&](const Lagrangian<QT>& l) { return Lagrangian<QT>::trusted(vhat, u * l.basis()); };
        tally.record("unitary invariance", qt_equal(maslov_index(moved(l1), moved(l2), moved(l3)), t123));

        Mat<QT> swap = zeros(K, vhat->dim(), vhat->dim());
        swap.set_block(0, static_cast<std::size_t>(n), eye(K, static_cast<std::size_t>(n)));
        swap.set_block(static_cast<std::size_t>(n), 0, eye(K, static_cast<std::size_t>(n)));
        auto swapped = [&](const Lagrangian<QT>& l) { return Lagrangian<QT>::trusted(vhat, swap * l.basis()); };
        tally.record("anti-isometry", qt_equal(maslov_index(swapped(l1), swapped(l2), swapped(l3)), neg(t123)));

        // Stabilization triples (G_1, G_g, G_{g s_n}) in B_{n+1} satisfy the Thomas criterion.
        const auto vs = burau_space(b, n + 1);
        const auto vshat = doubled_space(*vs);
        const auto g = burau_eval(b, random_word(n, 3, rng), n + 1);
        const auto s = sigma_matrix(b, n, n + 1, rng() % 2 ? 1 : -1);
        const auto a1 = graph_lagrangian(*vs, vshat, eye(K, static_cast<std::size_t>(n + 1)), false);
        const auto a2 = graph_lagrangian(*vs, vshat, g, false), a3 = graph_lagrangian(*vs, vshat, g * s, false);
        bool ok = thomas_vanishes(a1, a2, a3) && qt_zero(maslov_index(a1, a2, a3));
        if (thomas_vanishes(l1, l2, l3)) ok = ok && qt_zero(t123);
        tally.record("thomas implies zero", ok);
    }
}

}  // namespace testsupport
