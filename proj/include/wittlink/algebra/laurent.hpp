#pragma once

#include <utility>

#include "wittlink/algebra/fields.hpp"

namespace wittlink {

/// body(t) * t^shift with body(0) != 0 (unless zero).
template <class E>
struct LaurentPoly {
    Poly<E> body;
    long shift = 0;

    static LaurentPoly make(Poly<E> p, long shift) {
        const std::size_t v = p.valuation();
        LaurentPoly r{p.unshifted(v), shift + static_cast<long>(v)};
        if (r.body.is_zero()) r.shift = 0;
        return r;
    }
    bool is_zero() const { return body.is_zero(); }
    long low() const { return shift; }
    long high() const { return shift + body.degree(); }
    /// Coefficient of t^k.
    E coeff(long k) const {
        const long i = k - shift;
        if (i < 0 || i > body.degree()) return scalar_zero_like(body.lc());
        return body[static_cast<std::size_t>(i)];
    }
    bool is_palindromic() const {
        if (is_zero()) return true;
        if (low() != -high()) return false;
        return body.reversed() == body;
    }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.body == b.body && a.shift == b.shift; }
};

/// Writes a sigma-fixed Laurent polynomial sum c_k (t^k + t^-k) + c_0 as S(u), u = t + 1/t,
/// via p_0 = 2, p_1 = u, p_k = u p_{k-1} - p_{k-2}.
template <class E>
Poly<E> palindromic_to_fixed(const LaurentPoly<E>& x) {
    if (x.is_zero()) return Poly<E>();
    if (!x.is_palindromic()) throw DomainError("Laurent polynomial is not fixed by t -> 1/t");
    const long d = x.high();
    const E one = scalar_one_like(x.body.lc());
    const Poly<E> u = Poly<E>::x(one);
    // p_k for k = 0..d; p_0 as the constant 1 for the middle coefficient.
    Poly<E> result = Poly<E>::constant(x.coeff(0));
    Poly<E> prev = Poly<E>::constant(one + one), cur = u;
    for (long k = 1; k <= d; ++k) {
        result += cur.scaled(x.coeff(k));
        Poly<E> next = u * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return result;
}

/// Inverse of palindromic_to_fixed: S(t + 1/t) as a Laurent polynomial.
template <class E>
LaurentPoly<E> fixed_to_palindromic(const Poly<E>& s) {
    if (s.is_zero()) return {};
    const E one = scalar_one_like(s.lc());
    const std::size_t d = static_cast<std::size_t>(s.degree());
    // t^d S(t + 1/t) = sum s_k (t^2 + 1)^k t^(d-k)
    const Poly<E> t2p1 = Poly<E>(std::vector<E>{one, scalar_zero_like(one), one});
    Poly<E> acc;
    Poly<E> power = Poly<E>::constant(one);
    for (std::size_t k = 0; k <= d; ++k) {
        acc += (power * Poly<E>::monomial(s[k], d - k));
        power = power * t2p1;
    }
    return LaurentPoly<E>::make(std::move(acc), -static_cast<long>(d));
}

/// A/B = A B~ / (B B~) with both parts sigma-fixed Laurent polynomials
/// (B~ the reciprocal). Returns (numerator, denominator).
template <class E>
std::pair<LaurentPoly<E>, LaurentPoly<E>> fixed_laurent_parts(const RatFunc<E>& x) {
    const Poly<E> br = x.den().reversed();
    const long db = x.den().degree();
    return {LaurentPoly<E>::make(x.num() * br, -db), LaurentPoly<E>::make(x.den() * br, -db)};
}

/// Expresses a sigma-fixed element of F(t) in the fixed field F(u), u = t + 1/t.
template <class C>
typename FunctionField<C>::Elem to_fixed_field(const FunctionField<C>& k_ctx, const typename FunctionField<C>::Elem& x) {
    (void)k_ctx;
    auto [n, d] = fixed_laurent_parts(x);
    return typename FunctionField<C>::Elem(palindromic_to_fixed(n), palindromic_to_fixed(d));
}

/// Element of F(u) viewed inside F(t).
template <class C>
typename FunctionField<C>::Elem from_fixed_field(const typename FunctionField<C>::Elem& y) {
    using E = typename C::Elem;
    auto lift = [](const Poly<E>& p) {
        LaurentPoly<E> l = fixed_to_palindromic(p);
        return l;
    };
    LaurentPoly<E> n = lift(y.num()), d = lift(y.den());
    // n.body t^n.shift / (d.body t^d.shift)
    Poly<E> num = n.body, den = d.body;
    const long s = n.shift - d.shift;
    if (s >= 0) {
        num = num.shifted(static_cast<std::size_t>(s));
    } else {
        den = den.shifted(static_cast<std::size_t>(-s));
    }
    return typename FunctionField<C>::Elem(std::move(num), std::move(den));
}

/// x = a + b t with a, b in the fixed field; returns (a, b) expressed in u.
template <class C>
std::pair<typename FunctionField<C>::Elem, typename FunctionField<C>::Elem> split_over_fixed(
    const FunctionField<C>& K, const FunctionField<C>& k, const typename FunctionField<C>::Elem& x) {
    const auto xb = K.conj(x);
    const auto t = K.gen();
    const auto b = (x - xb) / (t - K.conj(t));
    const auto a = x - b * t;
    return {to_fixed_field(k, a), to_fixed_field(k, b)};
}

}  // namespace wittlink
