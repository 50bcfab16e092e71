#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "wittlink/algebra/poly.hpp"

namespace wittlink {

/// Pairwise coprime squarefree monic factors with multiplicities; their product
/// with multiplicities equals the input up to its leading coefficient.
template <class E>
struct SquarefreeDecomposition {
    std::vector<std::pair<Poly<E>, int>> parts;
};

namespace detail {

template <class E>
void yun(const Poly<E>& f, int scale, std::vector<std::pair<Poly<E>, int>>& out) {
    if (f.degree() <= 0) return;
    const Poly<E> df = f.derivative();
    if (df.is_zero()) {
        if constexpr (std::is_same_v<E, Zp>) {
            // f is a p-th power: f(x) = g(x^p) = g(x)^p over F_p.
            const std::size_t p = f.lc().modulus();
            std::vector<E> root;
            for (std::size_t i = 0; i < f.size(); i += p) root.push_back(f[i]);
            yun(Poly<E>(std::move(root)), scale * static_cast<int>(p), out);
        }
        return;
    }
    Poly<E> c = gcd(f, df);
    Poly<E> w = exact_div(f, c);
    int i = 1;
    if constexpr (std::is_same_v<E, Zp>) {
        // Musser's variant: valid in positive characteristic.
        while (w.degree() > 0) {
            Poly<E> y = gcd(w, c);
            Poly<E> z = exact_div(w, y);
            if (z.degree() > 0) out.emplace_back(z.monic(), i * scale);
            ++i;
            w = std::move(y);
            c = exact_div(c, w);
        }
        if (c.degree() > 0) {
            const std::size_t p = f.lc().modulus();
            std::vector<E> root;
            for (std::size_t k = 0; k < c.size(); k += p) root.push_back(c[k]);
            yun(Poly<E>(std::move(root)), scale * static_cast<int>(p), out);
        }
    } else {
        Poly<E> y = exact_div(df, c);
        Poly<E> z = y - w.derivative();
        while (w.degree() > 0) {
            Poly<E> g = gcd(w, z);
            if (g.degree() > 0) out.emplace_back(g.monic(), i * scale);
            w = exact_div(w, g);
            y = exact_div(z, g);
            z = y - w.derivative();
            ++i;
        }
    }
}

}  // namespace detail

template <class E>
SquarefreeDecomposition<E> squarefree_decompose(const Poly<E>& f) {
    if (f.is_zero()) throw DomainError("squarefree decomposition of the zero polynomial");
    std::vector<std::pair<Poly<E>, int>> raw;
    detail::yun(f.monic(), 1, raw);
    // Merge parts that share a multiplicity.
    std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
    SquarefreeDecomposition<E> out;
    for (auto& [g, m] : raw) {
        if (!out.parts.empty() && out.parts.back().second == m) {
            out.parts.back().first = out.parts.back().first * g;
        } else {
            out.parts.emplace_back(std::move(g), m);
        }
    }
    return out;
}

/// Product of the distinct irreducible factors, monic.
template <class E>
Poly<E> squarefree_part(const Poly<E>& f) {
    Poly<E> r = Poly<E>::constant(scalar_one_like(f.lc()));
    for (const auto& [g, m] : squarefree_decompose(f).parts) r = r * g;
    return r;
}

/// t^deg(f) f(1/t).
template <class E>
Poly<E> reciprocal(const Poly<E>& f) {
    return f.reversed();
}

}  // namespace wittlink
