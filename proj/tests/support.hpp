// Shared generators for the property tests.
#pragma once

#include <random>
#include <vector>

#include "wittlink/algebra/fields.hpp"

namespace testsupport {

using namespace wittlink;

inline Rational small_rational(std::mt19937_64& rng, int height = 6) {
    std::uniform_int_distribution<int> num(-height, height), den(1, height);
    return Rational(Integer(num(rng)), Integer(den(rng)));
}

inline Poly<Rational> random_qpoly(std::mt19937_64& rng, int max_deg, int height = 6) {
    std::uniform_int_distribution<int> deg(0, max_deg), c(-height, height);
    std::vector<Rational> v;
    int d = deg(rng);
    for (int i = 0; i <= d; ++i) v.emplace_back(c(rng));
    return Poly<Rational>(std::move(v));
}

inline Poly<Zp> random_fppoly(std::mt19937_64& rng, std::uint64_t p, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<std::uint64_t> c(0, p - 1);
    std::vector<Zp> v;
    int d = deg(rng);
    for (int i = 0; i <= d; ++i) v.emplace_back(static_cast<std::int64_t>(c(rng)), p);
    return Poly<Zp>(std::move(v));
}

/// A random element of Q(t) with small numerator and denominator.
inline QT::Elem random_qt(const QT& K, std::mt19937_64& rng, int max_deg = 2) {
    (void)K;
    Poly<Rational> d;
    do d = random_qpoly(rng, max_deg, 3); while (d.is_zero());
    return QT::Elem(random_qpoly(rng, max_deg, 4), d);
}

inline Poly<Rational> qpoly(std::initializer_list<long> lowest_first) {
    std::vector<Rational> v;
    for (long c : lowest_first) v.emplace_back(c);
    return Poly<Rational>(std::move(v));
}

}  // namespace testsupport
