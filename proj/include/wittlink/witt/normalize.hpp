#pragma once

#include <map>
#include <string>
#include <type_traits>

#include "wittlink/algebra/fields.hpp"
#include "wittlink/algebra/zpoly.hpp"
#include "wittlink/polyfactor/factor.hpp"
#include "wittlink/polyfactor/squarefree.hpp"

namespace wittlink {

/// Canonical representative of a nonzero rational modulo squares: a signed squarefree integer.
Rational square_class_q(const Rational& x);
/// Canonical representative of a nonzero element of F_p modulo squares: 1 or the least non-residue.
Zp square_class_fp(const Zp& x);

inline Rational square_class(const Rational& x) { return square_class_q(x); }
inline Zp square_class(const Zp& x) { return square_class_fp(x); }

/// D(t)/t^d with D palindromic of degree 2d, t not dividing D. D carries the content.
template <class E>
struct Palindromic {
    Poly<E> D;
    long d = 0;

    RatFunc<E> element() const {
        return RatFunc<E>(D, Poly<E>::monomial(scalar_one_like(D.lc()), static_cast<std::size_t>(d)));
    }
    std::string to_string(const std::string& var = "t") const {
        if (d == 0) return D.to_string(var);
        return "(" + D.to_string(var) + ")/" + var + (d == 1 ? "" : "^" + std::to_string(d));
    }
    friend bool operator==(const Palindromic& a, const Palindromic& b) { return a.D == b.D && a.d == b.d; }
};

namespace detail {

// Scales a factor to the normal form used by the factorizer and returns the scale:
// f = lambda * normal.
inline std::pair<Poly<Rational>, Rational> normalize_factor(const Poly<Rational>& f) {
    Poly<Rational> p = zpoly::to_rational(zpoly::from_rational(f));
    return {p, f.lc() / p.lc()};
}
inline std::pair<Poly<Zp>, Zp> normalize_factor(const Poly<Zp>& f) { return {f.monic(), f.lc()}; }

template <class E>
struct PolyKeyLess {
    bool operator()(const Poly<E>& a, const Poly<E>& b) const {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i] == b[i]) continue;
            if constexpr (std::is_same_v<E, Rational>) {
                return a[i] < b[i];
            } else {
                return a[i].value() < b[i].value();
            }
        }
        return false;
    }
};

}  // namespace detail

/// Minimal representative of a sigma-fixed x in F(t)^x modulo norms of F(t)^x:
/// clear the denominator by its norm, factor, drop norm pairs P P~, reduce the
/// exponents of self-reciprocal factors mod 2, and reduce the constant mod squares.
template <class E>
Palindromic<E> minimal_palindromic(const RatFunc<E>& x) {
    if (x.is_zero()) throw DomainError("minimal palindromic representative of zero");
    using P = Poly<E>;
    const E one = scalar_one_like(x.num().lc());
    // x * N(den) = num * den~ / t^deg(den).
    auto fn = factor(x.num());
    auto fd = factor(x.den());
    E content = fn.unit * fd.unit;
    std::map<P, long, detail::PolyKeyLess<E>> mult;
    long tpow = -static_cast<long>(x.den().degree());
    const P t = P::x(one);
    for (const auto& [p, a] : fn.factors) {
        if (p.degree() == 1 && scalar_is_zero(p[0])) {
            tpow += a;
            continue;
        }
        mult[p] += a;
    }
    for (const auto& [q, b] : fd.factors) {
        if (q.degree() == 1 && scalar_is_zero(q[0])) continue;  // t~ = 1
        auto [qn, lambda] = detail::normalize_factor(reciprocal(q));
        for (int i = 0; i < b; ++i) content *= lambda;
        mult[qn] += b;
    }
    // The remaining element is content * prod P^a * t^tpow; it must be fixed.
    P D = P::constant(one);
    for (auto it = mult.begin(); it != mult.end(); ++it) {
        const P& p = it->first;
        const long a = it->second;
        if (a == 0) continue;
        auto [pt, lambda] = detail::normalize_factor(reciprocal(p));
        if (pt == p) {
            // p~ = lambda p; N(p^v) = lambda^v p^(2v) t^(-v deg p).
            const long v = a / 2;
            for (long i = 0; i < v; ++i) content = content / lambda;
            if (a % 2 == 1) D = D * p;
            continue;
        }
        auto jt = mult.find(pt);
        if (jt == mult.end() || jt->second != a) throw DomainError("element is not fixed by the involution");
        // N(p^a) = p^a (lambda pt)^a t^(-a deg p).
        for (long i = 0; i < a; ++i) content = content / lambda;
        jt->second = 0;
    }
    (void)tpow;
    if (D.degree() % 2 != 0) throw DomainError("element is not fixed by the involution");
    Palindromic<E> out{D.scaled(square_class(content)), D.degree() / 2};
    return out;
}

/// Canonical representative of the square class (trivial involution) or norm class
/// (t -> 1/t) of a nonzero entry.
inline Rational normalize_entry(const RationalField&, const Rational& x) { return square_class_q(x); }
inline Zp normalize_entry(const PrimeField&, const Zp& x) { return square_class_fp(x); }

template <class C>
typename FunctionField<C>::Elem normalize_entry(const FunctionField<C>& ctx, const typename FunctionField<C>::Elem& x) {
    using E = typename C::Elem;
    if (x.is_zero()) throw DomainError("zero entry in a Witt class");
    if (ctx.involutive()) {
        if (!(ctx.conj(x) == x)) throw DomainError("entry is not fixed by the involution");
        return minimal_palindromic(x).element();
    }
    // Modulo squares: num * den, odd-multiplicity squarefree parts.
    Poly<E> f = x.num() * x.den();
    const E c = square_class(f.lc());
    Poly<E> r = Poly<E>::constant(c);
    for (const auto& [g, m] : squarefree_decompose(f).parts) {
        if (m % 2 == 1) r = r * g;
    }
    return ctx.from_poly(std::move(r));
}

}  // namespace wittlink
