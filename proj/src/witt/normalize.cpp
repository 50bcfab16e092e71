#include "wittlink/witt/normalize.hpp"

namespace wittlink {

Rational square_class_q(const Rational& x) {
    if (x.is_zero()) throw DomainError("square class of zero");
    return Rational(squarefree_integer(x.num() * x.den()));
}

Zp square_class_fp(const Zp& x) {
    if (x.is_zero()) throw DomainError("square class of zero");
    const std::uint64_t p = x.modulus();
    return x.is_square() ? Zp(1, p) : Zp(static_cast<std::int64_t>(least_nonresidue(p)), p);
}

}  // namespace wittlink
