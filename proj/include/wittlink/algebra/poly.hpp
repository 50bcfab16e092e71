#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "wittlink/algebra/errors.hpp"
#include "wittlink/algebra/prime_field.hpp"
#include "wittlink/algebra/rational.hpp"

namespace wittlink {

/// Dense univariate polynomial, coefficients stored lowest degree first.
/// The zero polynomial has no coefficients; otherwise the leading coefficient is nonzero.
template <class E>
class Poly {
   public:
    using Scalar = E;

    Poly() = default;
    explicit Poly(std::vector<E> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(const E& c) { return Poly(std::vector<E>{c}); }
    static Poly monomial(const E& c, std::size_t k) {
        if (scalar_is_zero(c)) return Poly();
        std::vector<E> v(k + 1, scalar_zero_like(c));
        v[k] = c;
        return Poly(std::move(v));
    }
    /// The polynomial x, with scalars shaped like `like`.
    static Poly x(const E& like) { return monomial(scalar_one_like(like), 1); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    std::size_t size() const { return c_.size(); }
    const E& lc() const { return c_.back(); }
    const E& operator[](std::size_t i) const { return c_[i]; }
    E coeff(std::size_t i) const { return i < c_.size() ? c_[i] : scalar_zero_like(c_.front()); }
    const std::vector<E>& coeffs() const { return c_; }
    bool is_constant() const { return c_.size() <= 1; }
    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    std::size_t valuation() const {
        std::size_t k = 0;
        while (k < c_.size() && scalar_is_zero(c_[k])) ++k;
        return c_.empty() ? 0 : k;
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& a : r.c_) a = -a;
        return r;
    }
    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), scalar_zero_like(o.c_.front()));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), scalar_zero_like(o.c_.front()));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<E> r(a.c_.size() + b.c_.size() - 1, scalar_zero_like(a.c_.front()));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (scalar_is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly scaled(const E& s) const {
        if (scalar_is_zero(s)) return Poly();
        Poly r = *this;
        for (auto& a : r.c_) a *= s;
        return r;
    }
    /// Multiplication by x^k.
    Poly shifted(std::size_t k) const {
        if (is_zero() || k == 0) return *this;
        std::vector<E> v(k, scalar_zero_like(c_.front()));
        v.insert(v.end(), c_.begin(), c_.end());
        return Poly(std::move(v));
    }
    /// Exact division by x^k (drops the low coefficients, which must be zero).
    Poly unshifted(std::size_t k) const {
        if (k >= c_.size()) return Poly();
        return Poly(std::vector<E>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Poly monic() const {
        if (is_zero()) return *this;
        return scaled(scalar_inv(lc()));
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<E> v;
        v.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * scalar_from_int(c_[i], static_cast<long>(i)));
        return Poly(std::move(v));
    }

    template <class X>
    X eval(const X& x, const X& zero) const {
        X r = zero;
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + X(c_[i]);
        return r;
    }
    E eval(const E& x) const {
        if (is_zero()) return scalar_zero_like(x);
        E r = c_.back();
        for (std::size_t i = c_.size() - 1; i-- > 0;) r = r * x + c_[i];
        return r;
    }

    /// t^deg * P(1/t).
    Poly reversed() const {
        std::vector<E> v(c_.rbegin(), c_.rend());
        return Poly(std::move(v));
    }

    std::string to_string(const std::string& var = "t") const;

   private:
    void trim() {
        while (!c_.empty() && scalar_is_zero(c_.back())) c_.pop_back();
    }
    std::vector<E> c_;
};

/// Division with remainder over a field.
template <class E>
std::pair<Poly<E>, Poly<E>> divmod(const Poly<E>& a, const Poly<E>& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly<E>(), a};
    std::vector<E> r = a.coeffs();
    const int db = b.degree();
    const E inv = scalar_inv(b.lc());
    std::vector<E> q(static_cast<std::size_t>(a.degree() - db + 1), scalar_zero_like(inv));
    for (int i = a.degree(); i >= db; --i) {
        if (scalar_is_zero(r[i])) continue;
        E f = r[i] * inv;
        q[static_cast<std::size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * b[static_cast<std::size_t>(j)];
    }
    r.resize(static_cast<std::size_t>(db));
    return {Poly<E>(std::move(q)), Poly<E>(std::move(r))};
}

template <class E>
Poly<E> operator/(const Poly<E>& a, const Poly<E>& b) {
    return divmod(a, b).first;
}
template <class E>
Poly<E> operator%(const Poly<E>& a, const Poly<E>& b) {
    return divmod(a, b).second;
}

/// Exact quotient; throws if b does not divide a.
template <class E>
Poly<E> exact_div(const Poly<E>& a, const Poly<E>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw DomainError("inexact polynomial division");
    return q;
}

Poly<Rational> gcd_rational(const Poly<Rational>& a, const Poly<Rational>& b);

/// Monic gcd (zero if both inputs are zero).
template <class E>
Poly<E> gcd(Poly<E> a, Poly<E> b) {
    if constexpr (std::is_same_v<E, Rational>) {
        return gcd_rational(a, b);
    } else {
        while (!b.is_zero()) {
            Poly<E> r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }
}

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
template <class E>
struct XGcd {
    Poly<E> g, s, t;
};

template <class E>
XGcd<E> xgcd(const Poly<E>& a, const Poly<E>& b) {
    if (a.is_zero() && b.is_zero()) return {Poly<E>(), Poly<E>(), Poly<E>()};
    const E one = scalar_one_like(a.is_zero() ? b.lc() : a.lc());
    Poly<E> r0 = a, r1 = b, s0 = Poly<E>::constant(one), s1, t0, t1 = Poly<E>::constant(one);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly<E> s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly<E> t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    E inv = scalar_inv(r0.lc());
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

/// base^e mod m, with e given as a GMP integer.
template <class E>
Poly<E> powmod(Poly<E> base, Integer e, const Poly<E>& m) {
    Poly<E> result = Poly<E>::constant(scalar_one_like(m.lc()));
    base = base % m;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = (result * base) % m;
        base = (base * base) % m;
        e >>= 1;
    }
    return result;
}

/// Composition a(b(x)).
template <class E>
Poly<E> compose(const Poly<E>& a, const Poly<E>& b) {
    Poly<E> r;
    for (std::size_t i = a.size(); i-- > 0;) r = r * b + Poly<E>::constant(a[i]);
    return r;
}

template <class E>
std::string scalar_to_string(const E& x) {
    return x.to_string();
}

template <class E>
std::string Poly<E>::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const E& a = c_[i];
        if (scalar_is_zero(a)) continue;
        std::string s;
        bool negative = false;
        if constexpr (std::is_same_v<E, Rational>) {
            negative = a.sign() < 0;
            s = (negative ? -a : a).to_string();
        } else {
            s = scalar_to_string(a);
        }
        const bool unit = (s == "1");
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << s;
            continue;
        }
        if (!unit) os << s << "*";
        os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

/// Parses the printer's output: sums of terms `c`, `c*x`, `c*x^k`, `x^k` with
/// rational coefficients, over the given variable name.
Poly<Rational> parse_poly_rational(const std::string& text, const std::string& var = "t");

template <class E>
std::ostream& operator<<(std::ostream& os, const Poly<E>& p) {
    return os << p.to_string();
}

/// Maps a rational polynomial into F_p[x]; throws if a denominator vanishes mod p.
Poly<Zp> reduce_mod_p(const Poly<Rational>& f, std::uint64_t p);

}  // namespace wittlink
