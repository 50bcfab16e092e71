#pragma once

#include <vector>

#include "wittlink/algebra/poly.hpp"

namespace wittlink {

/// Sturm sequence f, f', -rem(...), each rescaled by a positive constant.
std::vector<Poly<Rational>> sturm_chain(const Poly<Rational>& f);

/// Sign variations of the chain at x (zeros skipped).
int sign_variations(const std::vector<Poly<Rational>>& chain, const Rational& x);

/// Number of distinct real roots of f in the open interval (a, b); f(a), f(b) must be nonzero.
int count_roots(const Poly<Rational>& f, const Rational& a, const Rational& b);

/// Open interval (lo, hi) holding exactly one root of a squarefree polynomial;
/// neither endpoint is a root and both have power-of-two denominators.
struct RootInterval {
    Rational lo, hi;
};

/// Isolates the distinct real roots of f inside the open interval (lo, hi), in increasing order.
/// lo and hi must be dyadic. Roots equal to lo or hi are excluded.
std::vector<RootInterval> isolate_roots(const Poly<Rational>& f, const Rational& lo, const Rational& hi);

/// Isolates every real root of f.
std::vector<RootInterval> isolate_real_roots(const Poly<Rational>& f);

/// A real algebraic number given by a squarefree defining polynomial and an isolating interval.
class AlgebraicReal {
   public:
    AlgebraicReal(Poly<Rational> f, RootInterval iv);

    const Poly<Rational>& poly() const { return f_; }
    const RootInterval& interval() const { return iv_; }

    /// Halves the interval until its width is at most w.
    void refine(const Rational& w);
    /// Sign of g at this number.
    int sign_of(const Poly<Rational>& g);
    /// A rational approximation (interval midpoint).
    Rational approx() const { return (iv_.lo + iv_.hi) / Rational(2); }
    double to_double(int bits = 60);

    /// -1, 0, 1.
    static int compare(AlgebraicReal& a, AlgebraicReal& b);

   private:
    void bisect();
    Poly<Rational> f_;
    RootInterval iv_;
};

}  // namespace wittlink
