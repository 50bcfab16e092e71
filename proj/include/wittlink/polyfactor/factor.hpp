#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "wittlink/algebra/poly.hpp"

namespace wittlink {

/// Prime factorization of |n| (n != 0), primes ascending.
std::vector<std::pair<Integer, int>> factor_integer(const Integer& n);

/// Squarefree part of a nonzero integer, keeping the sign.
Integer squarefree_integer(const Integer& n);

/// f = unit * prod factors[i].first ^ factors[i].second.
/// Over Q the factors are primitive integer polynomials with positive leading
/// coefficient; over F_p they are monic. Factors are sorted by degree, then coefficients.
template <class E>
struct Factorization {
    E unit;
    std::vector<std::pair<Poly<E>, int>> factors;
};

/// Largest degree accepted by factor_q.
constexpr int kMaxFactorDegree = 64;

Factorization<Zp> factor_fp(const Poly<Zp>& f, std::uint64_t seed = 0x5eed);
Factorization<Rational> factor_q(const Poly<Rational>& f);

inline Factorization<Zp> factor(const Poly<Zp>& f) { return factor_fp(f); }
inline Factorization<Rational> factor(const Poly<Rational>& f) { return factor_q(f); }

/// Distinct-degree factorization of a squarefree monic polynomial: (product of all
/// irreducible factors of degree d, d).
std::vector<std::pair<Poly<Zp>, int>> distinct_degree(const Poly<Zp>& f);
/// Cantor-Zassenhaus split of a product of irreducibles of degree d.
std::vector<Poly<Zp>> equal_degree(const Poly<Zp>& f, int d, std::mt19937_64& rng);

/// Resultant over a field (Euclidean algorithm).
template <class E>
E resultant(Poly<E> a, Poly<E> b) {
    if (a.is_zero() || b.is_zero()) {
        const E& any = a.is_zero() ? (b.is_zero() ? E() : b.lc()) : a.lc();
        return scalar_zero_like(any);
    }
    E res = scalar_one_like(a.lc());
    while (b.degree() > 0) {
        const int da = a.degree(), db = b.degree();
        Poly<E> r = a % b;
        if (r.is_zero()) return scalar_zero_like(res);
        if ((da % 2 == 1) && (db % 2 == 1)) res = -res;
        E lcb = b.lc();
        for (int i = 0; i < da - r.degree(); ++i) res *= lcb;
        a = std::move(b);
        b = std::move(r);
    }
    // b is a nonzero constant.
    E c = b.lc();
    for (int i = 0; i < a.degree(); ++i) res *= c;
    return res;
}

}  // namespace wittlink
