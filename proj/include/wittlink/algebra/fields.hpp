#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "wittlink/algebra/poly.hpp"

namespace wittlink {

/// Element of a rational function field F(x): num/den with gcd 1 and den monic.
template <class E>
class RatFunc {
   public:
    RatFunc() = default;
    RatFunc(Poly<E> num, Poly<E> den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RatFunc from_poly(Poly<E> p, const E& like) {
        RatFunc r;
        r.num_ = std::move(p);
        r.den_ = Poly<E>::constant(scalar_one_like(like));
        return r;
    }

    const Poly<E>& num() const { return num_; }
    const Poly<E>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) { return combine(a, b, false); }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return combine(a, b, true); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero()) return a;
        if (b.is_zero()) return b;
        if (a.is_polynomial() && b.is_polynomial()) return raw(a.num_ * b.num_, a.den_);
        Poly<E> g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
        Poly<E> n = exact_div(a.num_, g1) * exact_div(b.num_, g2);
        Poly<E> d = exact_div(a.den_, g2) * exact_div(b.den_, g1);
        return raw_monic(std::move(n), std::move(d));
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inv(); }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc inv() const {
        if (is_zero()) throw DivisionByZero("inverse of zero rational function");
        return raw_monic(den_, num_);
    }

    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    std::string to_string(const std::string& var = "t") const {
        if (is_polynomial()) {
            const E& d = den_.lc();
            if (scalar_is_zero(d - scalar_one_like(d))) return num_.to_string(var);
        }
        return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
    }

    /// Rough size measure used to pick small pivots.
    std::size_t weight() const { return num_.size() + den_.size(); }

   private:
    static RatFunc raw(Poly<E> n, Poly<E> d) {
        RatFunc r;
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        if (r.num_.is_zero()) r.den_ = Poly<E>::constant(scalar_one_like(r.den_.lc()));
        return r;
    }
    // n/d already coprime; only the leading coefficient of d needs fixing.
    static RatFunc raw_monic(Poly<E> n, Poly<E> d) {
        E inv = scalar_inv(d.lc());
        return raw(n.scaled(inv), d.scaled(inv));
    }
    static RatFunc combine(const RatFunc& a, const RatFunc& b, bool subtract) {
        if (b.is_zero()) return a;
        if (a.is_zero()) return subtract ? -b : b;
        if (a.den_ == b.den_) {
            Poly<E> n = subtract ? a.num_ - b.num_ : a.num_ + b.num_;
            if (a.is_polynomial()) return raw(std::move(n), a.den_);
            return RatFunc(std::move(n), a.den_);
        }
        Poly<E> g = gcd(a.den_, b.den_);
        Poly<E> ad = exact_div(a.den_, g), bd = exact_div(b.den_, g);
        Poly<E> n = subtract ? a.num_ * bd - b.num_ * ad : a.num_ * bd + b.num_ * ad;
        Poly<E> d = a.den_ * bd;
        if (n.is_zero()) return raw(Poly<E>(), d);
        Poly<E> h = gcd(n, g);
        if (h.degree() > 0) {
            n = exact_div(n, h);
            d = exact_div(d, h);
        }
        return raw_monic(std::move(n), std::move(d));
    }
    void normalize() {
        if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Poly<E>::constant(scalar_one_like(den_.lc()));
            return;
        }
        Poly<E> g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
        E inv = scalar_inv(den_.lc());
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }

    Poly<E> num_;
    Poly<E> den_;
};

template <class E>
inline bool scalar_is_zero(const RatFunc<E>& x) {
    return x.is_zero();
}

/// Q with the trivial involution.
struct RationalField {
    using Elem = Rational;
    using Base = Rational;
    Elem zero() const { return Rational(0); }
    Elem one() const { return Rational(1); }
    Elem from_int(long v) const { return Rational(v); }
    bool is_zero(const Elem& x) const { return x.is_zero(); }
    Elem conj(const Elem& x) const { return x; }
    bool involutive() const { return false; }
    std::size_t weight(const Elem& x) const {
        return mpz_sizeinbase(x.raw().get_num_mpz_t(), 2) + mpz_sizeinbase(x.raw().get_den_mpz_t(), 2);
    }
    std::string format(const Elem& x) const { return x.to_string(); }
    std::string name() const { return "Q"; }
    friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// F_p, p an odd prime below 2^62, trivial involution.
struct PrimeField {
    using Elem = Zp;
    using Base = Zp;
    std::uint64_t p = 3;

    PrimeField() = default;
    explicit PrimeField(std::uint64_t prime) : p(prime) {
        if (prime == 2 || !is_prime_u64(prime) || prime >= (1ULL << 62)) {
            throw DomainError("F_p needs an odd prime below 2^62, got " + std::to_string(prime));
        }
    }
    Elem zero() const { return Zp(0, p); }
    Elem one() const { return Zp(1, p); }
    Elem from_int(long v) const { return Zp(v, p); }
    bool is_zero(const Elem& x) const { return x.is_zero(); }
    Elem conj(const Elem& x) const { return x; }
    bool involutive() const { return false; }
    std::size_t weight(const Elem&) const { return 1; }
    std::string format(const Elem& x) const { return x.to_string(); }
    std::string name() const { return "F_" + std::to_string(p); }
    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p == b.p; }
};

/// Rational function field C(x). With `involutive` set, carries x -> 1/x
/// (the fields Q(t), F_p(t)); otherwise the involution is trivial (Q(u), F_p(u)).
template <class C>
struct FunctionField {
    using Coeff = typename C::Elem;
    using Elem = RatFunc<Coeff>;
    using Base = C;
    C base{};
    bool has_involution = true;
    std::string var = "t";

    FunctionField() = default;
    FunctionField(C b, bool inv, std::string v) : base(std::move(b)), has_involution(inv), var(std::move(v)) {}

    Elem zero() const { return Elem::from_poly(Poly<Coeff>(), base.one()); }
    Elem one() const { return constant(base.one()); }
    Elem from_int(long v) const { return constant(base.from_int(v)); }
    Elem constant(const Coeff& c) const { return Elem::from_poly(Poly<Coeff>::constant(c), base.one()); }
    Elem from_poly(Poly<Coeff> p) const { return Elem::from_poly(std::move(p), base.one()); }
    Elem gen() const { return from_poly(Poly<Coeff>::x(base.one())); }
    bool is_zero(const Elem& x) const { return x.is_zero(); }
    bool involutive() const { return has_involution; }

    /// x(1/t) when involutive.
    Elem conj(const Elem& x) const {
        if (!has_involution || x.is_constant()) return x;
        const int dn = x.num().degree(), dd = x.den().degree();
        Poly<Coeff> n = x.num().reversed(), d = x.den().reversed();
        if (dd >= dn) {
            n = n.shifted(static_cast<std::size_t>(dd - dn));
        } else {
            d = d.shifted(static_cast<std::size_t>(dn - dd));
        }
        return Elem(std::move(n), std::move(d));
    }
    std::size_t weight(const Elem& x) const {
        std::size_t w = 0;
        for (const auto& c : x.num().coeffs()) w += base.weight(c) + 8;
        for (const auto& c : x.den().coeffs()) w += base.weight(c) + 8;
        return w;
    }
    std::string format(const Elem& x) const { return x.to_string(var); }
    std::string name() const { return base.name() + "(" + var + ")"; }
    friend bool operator==(const FunctionField& a, const FunctionField& b) {
        return a.base == b.base && a.has_involution == b.has_involution && a.var == b.var;
    }
};

using QT = FunctionField<RationalField>;
using FpT = FunctionField<PrimeField>;

inline QT make_qt() { return QT(RationalField{}, true, "t"); }
inline QT make_qu() { return QT(RationalField{}, false, "u"); }
inline FpT make_fpt(std::uint64_t p) { return FpT(PrimeField(p), true, "t"); }
inline FpT make_fpu(std::uint64_t p) { return FpT(PrimeField(p), false, "u"); }

/// x * conj(x).
template <class Ctx>
typename Ctx::Elem norm(const Ctx& ctx, const typename Ctx::Elem& x) {
    return x * ctx.conj(x);
}

/// (x + conj(x)) / 2.
template <class Ctx>
typename Ctx::Elem real_part(const Ctx& ctx, const typename Ctx::Elem& x) {
    return (x + ctx.conj(x)) / ctx.from_int(2);
}

template <class Ctx>
bool is_fixed(const Ctx& ctx, const typename Ctx::Elem& x) {
    return ctx.conj(x) == x;
}

}  // namespace wittlink
