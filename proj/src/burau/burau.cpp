#include "wittlink/burau/burau.hpp"

namespace wittlink {

QT::Elem alexander_raw(const BraidWord& w) {
    const auto b = burau_qt();
    const auto& K = b.ctx;
    const Mat<QT> r = reduced_burau(b, w);
    const auto d = det(K, r - eye(K, r.rows()));
    auto tn = K.one();
    for (int k = 0; k < w.n; ++k) tn = tn * b.t;
    return d * (b.t - K.one()) / (tn - K.one());
}

std::optional<LaurentPoly<Rational>> alexander_conway(const BraidWord& w) {
    const auto x = alexander_raw(w);
    if (x.is_zero()) return std::nullopt;
    // Negative letters leave a power of t in the denominator.
    if (x.den().valuation() != static_cast<std::size_t>(x.den().degree())) {
        throw std::logic_error("Alexander quotient is not a Laurent polynomial");
    }
    Poly<Rational> p = x.num().scaled(x.den().lc().inv());
    const std::size_t v = p.valuation();
    p = p.unshifted(v);
    if (p.degree() % 2 != 0) return std::nullopt;
    const Rational at1 = p.eval(Rational(1));
    if (at1.is_zero()) return std::nullopt;
    if (at1.sign() < 0) p = -p;
    auto l = LaurentPoly<Rational>::make(p, -static_cast<long>(p.degree() / 2));
    if (!l.is_palindromic()) throw std::logic_error("Alexander polynomial is not symmetric");
    return l;
}

std::optional<Palindromic<Rational>> alexander_poly(const BraidWord& w) {
    auto l = alexander_conway(w);
    if (!l) return std::nullopt;
    QT K = make_qt();
    auto x = K.from_poly(l->body);
    if (l->shift < 0) {
        x = x / K.from_poly(Poly<Rational>::monomial(Rational(1), static_cast<std::size_t>(-l->shift)));
    }
    return minimal_palindromic(x);
}

Rational knot_determinant(const BraidWord& w) {
    const auto x = alexander_raw(w);
    if (x.is_zero()) return Rational(0);
    const Rational v = x.num().eval(Rational(-1)) / x.den().eval(Rational(-1));
    return v.sign() < 0 ? -v : v;
}

}  // namespace wittlink
