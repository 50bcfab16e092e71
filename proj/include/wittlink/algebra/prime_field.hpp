#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "wittlink/algebra/errors.hpp"

namespace wittlink {

/// Deterministic primality test for 64-bit integers.
bool is_prime_u64(std::uint64_t n);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);

/// Element of F_p for an odd prime p < 2^62. The modulus travels with the value.
class Zp {
   public:
    Zp() = default;
    Zp(std::int64_t v, std::uint64_t p);

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    /// Symmetric representative in (-p/2, p/2].
    std::int64_t centered() const;

    Zp inv() const;
    Zp pow(std::uint64_t e) const { return Zp(pow_mod(v_, e, p_), p_, raw_tag{}); }
    bool is_square() const;

    Zp& operator+=(const Zp& o);
    Zp& operator-=(const Zp& o);
    Zp& operator*=(const Zp& o);
    Zp& operator/=(const Zp& o) { return *this *= o.inv(); }
    friend Zp operator+(Zp a, const Zp& b) { return a += b; }
    friend Zp operator-(Zp a, const Zp& b) { return a -= b; }
    friend Zp operator*(Zp a, const Zp& b) { return a *= b; }
    friend Zp operator/(Zp a, const Zp& b) { return a /= b; }
    Zp operator-() const { return Zp(v_ == 0 ? 0 : p_ - v_, p_, raw_tag{}); }

    friend bool operator==(const Zp& a, const Zp& b) { return a.v_ == b.v_ && a.p_ == b.p_; }

    std::string to_string() const { return std::to_string(v_); }

   private:
    struct raw_tag {};
    Zp(std::uint64_t v, std::uint64_t p, raw_tag) : v_(v), p_(p) {}
    void check_same(const Zp& o) const;

    std::uint64_t v_ = 0;
    std::uint64_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Zp& x);

inline bool scalar_is_zero(const Zp& x) { return x.is_zero(); }
inline Zp scalar_one_like(const Zp& x) { return Zp(1, x.modulus()); }
inline Zp scalar_zero_like(const Zp& x) { return Zp(0, x.modulus()); }
inline Zp scalar_inv(const Zp& x) { return x.inv(); }
inline Zp scalar_from_int(const Zp& x, long v) { return Zp(v, x.modulus()); }

/// Smallest quadratic non-residue modulo p.
std::uint64_t least_nonresidue(std::uint64_t p);

}  // namespace wittlink
