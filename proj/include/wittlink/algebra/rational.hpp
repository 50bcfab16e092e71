#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

#include "wittlink/algebra/errors.hpp"

namespace wittlink {

using Integer = mpz_class;

/// Exact rational number, always stored in lowest terms with positive denominator.
class Rational {
   public:
    Rational() = default;
    Rational(long v) : q_(v) {}
    Rational(int v) : q_(v) {}
    Rational(const Integer& v) : q_(v) {}
    Rational(const Integer& num, const Integer& den);
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Accepts "a", "-a", "a/b".
    static Rational parse(const std::string& text);

    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational inv() const;
    Rational abs() const { return Rational(mpq_class(::abs(q_))); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    std::string to_string() const { return q_.get_str(); }
    double to_double() const { return q_.get_d(); }

   private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Scalar hooks used by the generic polynomial code.
inline bool scalar_is_zero(const Rational& x) { return x.is_zero(); }
inline Rational scalar_one_like(const Rational&) { return Rational(1); }
inline Rational scalar_zero_like(const Rational&) { return Rational(0); }
inline Rational scalar_inv(const Rational& x) { return x.inv(); }
inline Rational scalar_from_int(const Rational&, long v) { return Rational(v); }

}  // namespace wittlink
