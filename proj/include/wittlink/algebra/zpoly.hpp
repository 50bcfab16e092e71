#pragma once

#include <vector>

#include "wittlink/algebra/poly.hpp"

namespace wittlink::zpoly {

/// Integer polynomial, lowest degree first, no trailing zeros.
using ZPoly = std::vector<Integer>;

void trim(ZPoly& f);
int degree(const ZPoly& f);
Integer content(const ZPoly& f);
/// Divides by the content and makes the leading coefficient positive.
ZPoly primitive(const ZPoly& f);

/// Clears denominators: returns the primitive integer polynomial proportional to f.
ZPoly from_rational(const Poly<Rational>& f);
Poly<Rational> to_rational(const ZPoly& f);

ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);
/// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b.
ZPoly prem(const ZPoly& a, const ZPoly& b);
/// Exact division over Z; returns false when b does not divide a.
bool divides(const ZPoly& b, const ZPoly& a, ZPoly* quotient);
/// Primitive gcd with positive leading coefficient.
ZPoly gcd(ZPoly a, ZPoly b);

Integer max_norm(const ZPoly& f);

}  // namespace wittlink::zpoly
