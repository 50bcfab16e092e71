#pragma once

#include <string>
#include <vector>

#include "wittlink/algebra/fields.hpp"
#include "wittlink/forms/witt_class.hpp"
#include "wittlink/polyfactor/roots.hpp"

namespace wittlink {

/// A jump of the signature function at u = 2 cos(theta): the index-th root (increasing u)
/// in (-2, 2) of an irreducible primitive polynomial.
struct Breakpoint {
    Poly<Rational> poly;
    int index = 0;
    RootInterval interval;

    AlgebraicReal value() const { return AlgebraicReal(poly, interval); }
    friend bool operator==(const Breakpoint& a, const Breakpoint& b) { return a.poly == b.poly && a.index == b.index; }
};

/// theta -> signature of the form at t = e^(i theta) for theta in (0, pi), as a step function.
/// Breakpoints are listed by increasing theta (so decreasing u); values[j] is the value on
/// the arc before breakpoint j, values.back() the value up to pi.
struct SignatureStepFunction {
    std::vector<Breakpoint> breakpoints;
    std::vector<int> values{0};

    friend bool operator==(const SignatureStepFunction& a, const SignatureStepFunction& b) {
        return a.breakpoints == b.breakpoints && a.values == b.values;
    }
};

enum class Limit { Right, Left, Mid };

/// Signature function of a hermitian class over Q(t).
SignatureStepFunction signature_function(const WittClass<QT>& a);

/// Value at u (given exactly). Right is the canonical right limit in theta;
/// Left and Mid (the average, doubled to stay integral) are non-canonical.
int evaluate(const SignatureStepFunction& s, AlgebraicReal u, Limit limit = Limit::Right);

/// u = 2 cos(r pi) for rational r in [0, 1].
AlgebraicReal u_of_angle(const Rational& r);
/// An exact rational u in [-2, 2].
AlgebraicReal u_of_rational(const Rational& u);

/// Minimal polynomial of 2 cos(2 pi / n) (n >= 3), over Q in u.
Poly<Rational> cos_minimal_poly(int n);

}  // namespace wittlink
