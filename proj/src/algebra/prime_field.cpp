#include "wittlink/algebra/prime_field.hpp"

#include <ostream>

namespace wittlink {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Zp::Zp(std::int64_t v, std::uint64_t p) : p_(p) {
    if (p < 3) throw DomainError("prime field modulus must be an odd prime");
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += static_cast<std::int64_t>(p);
    v_ = static_cast<std::uint64_t>(r);
}

std::int64_t Zp::centered() const {
    return v_ > p_ / 2 ? static_cast<std::int64_t>(v_) - static_cast<std::int64_t>(p_) : static_cast<std::int64_t>(v_);
}

void Zp::check_same(const Zp& o) const {
    if (p_ != o.p_) throw DomainError("mixed prime field moduli");
}

Zp Zp::inv() const {
    if (v_ == 0) throw DivisionByZero("inverse of zero in F_" + std::to_string(p_));
    return Zp(pow_mod(v_, p_ - 2, p_), p_, raw_tag{});
}

bool Zp::is_square() const { return v_ == 0 || pow_mod(v_, (p_ - 1) / 2, p_) == 1; }

Zp& Zp::operator+=(const Zp& o) {
    check_same(o);
    v_ += o.v_;
    if (v_ >= p_) v_ -= p_;
    return *this;
}

Zp& Zp::operator-=(const Zp& o) {
    check_same(o);
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
    return *this;
}

Zp& Zp::operator*=(const Zp& o) {
    check_same(o);
    v_ = mul_mod(v_, o.v_, p_);
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Zp& x) { return os << x.value(); }

std::uint64_t least_nonresidue(std::uint64_t p) {
    for (std::uint64_t a = 2;; ++a) {
        if (pow_mod(a, (p - 1) / 2, p) == p - 1) return a;
    }
}

}  // namespace wittlink
