#pragma once

#include <type_traits>
#include <vector>

#include "wittlink/forms/witt_class.hpp"
#include "wittlink/witt/normalize.hpp"

namespace wittlink {

/// Canonical representative of -y for an already canonical y.
inline Rational negate_canonical(const RationalField&, const Rational& y) { return -y; }
inline Zp negate_canonical(const PrimeField& ctx, const Zp& y) { return normalize_entry(ctx, -y); }
template <class C>
typename FunctionField<C>::Elem negate_canonical(const FunctionField<C>& ctx, const typename FunctionField<C>::Elem& y) {
    if constexpr (std::is_same_v<typename C::Elem, Rational>) {
        (void)ctx;
        return -y;
    } else {
        // y = c * (monic), only the constant moves.
        const Zp c = y.num().lc();
        return y * ctx.constant(square_class(-c) / c);
    }
}

/// Replaces every entry by its canonical representative and cancels hyperbolic planes
/// <a, b> with -ab trivial. Entry order is otherwise preserved.
template <class Ctx>
WittClass<Ctx> reduce(const WittClass<Ctx>& a) {
    using E = typename Ctx::Elem;
    std::vector<E> norm, negs;
    norm.reserve(a.entries.size());
    for (const auto& x : a.entries) {
        norm.push_back(normalize_entry(a.ctx, x));
        negs.push_back(negate_canonical(a.ctx, norm.back()));
    }
    std::vector<bool> dead(norm.size(), false);
    for (std::size_t i = 0; i < norm.size(); ++i) {
        if (dead[i]) continue;
        for (std::size_t j = i + 1; j < norm.size(); ++j) {
            if (!dead[j] && norm[j] == negs[i]) {
                dead[i] = dead[j] = true;
                break;
            }
        }
    }
    WittClass<Ctx> out{a.ctx, {}};
    for (std::size_t i = 0; i < norm.size(); ++i) {
        if (!dead[i]) out.entries.push_back(norm[i]);
    }
    return out;
}

template <class Ctx>
WittClass<Ctx> add(const WittClass<Ctx>& a, const WittClass<Ctx>& b) {
    if (!(a.ctx == b.ctx)) throw DomainError("adding Witt classes over different fields");
    WittClass<Ctx> c{a.ctx, a.entries};
    c.entries.insert(c.entries.end(), b.entries.begin(), b.entries.end());
    return reduce(c);
}

template <class Ctx>
WittClass<Ctx> neg(const WittClass<Ctx>& a) {
    WittClass<Ctx> c = a;
    for (auto& x : c.entries) x = -x;
    return c;
}

/// (-1)^(m(m-1)/2) times the product of the entries, as a canonical representative.
template <class Ctx>
typename Ctx::Elem signed_determinant(const WittClass<Ctx>& a) {
    auto d = a.ctx.one();
    for (const auto& x : a.entries) d = d * x;
    const std::size_t m = a.entries.size();
    if ((m * (m - 1) / 2) % 2 == 1) d = -d;
    return normalize_entry(a.ctx, d);
}

}  // namespace wittlink
