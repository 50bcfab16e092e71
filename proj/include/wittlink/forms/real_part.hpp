#pragma once

#include "wittlink/algebra/laurent.hpp"
#include "wittlink/forms/form_space.hpp"

namespace wittlink {

/// Restriction of scalars from K = F(t) to its fixed field k = F(u), u = t + 1/t,
/// using the k-basis {e_1, t e_1, e_2, t e_2, ...} of K^n.
template <class C>
struct RealPart {
    using K = FunctionField<C>;
    K big;    // involutive, variable t
    K small;  // trivial involution, variable u

    explicit RealPart(const K& kbig) : big(kbig), small(kbig.base, false, "u") {
        if (!kbig.involutive()) throw DomainError("restriction of scalars needs a nontrivial involution");
    }

    /// Re(x) = (x + conj x)/2 written in u.
    typename K::Elem re(const typename K::Elem& x) const { return to_fixed_field(small, real_part(big, x)); }

    /// A K-matrix (r x c) as a k-matrix (2r x 2c): column 2j is M e_j, column 2j+1 is M (t e_j).
    Mat<K> matrix(const Mat<K>& m) const {
        Mat<K> out = zeros(small, 2 * m.rows(), 2 * m.cols());
        const auto t = big.gen();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            for (std::size_t i = 0; i < m.rows(); ++i) {
                for (int s = 0; s < 2; ++s) {
                    const auto x = s == 0 ? m(i, j) : m(i, j) * t;
                    if (big.is_zero(x)) continue;
                    auto [a, b] = split_over_fixed(big, small, x);
                    out(2 * i, 2 * j + s) = a;
                    out(2 * i + 1, 2 * j + s) = b;
                }
            }
        }
        return out;
    }

    /// Gram matrix of s = Re h on the basis {e_i, t e_i}.
    SpacePtr<K> space(const FormSpace<K>& v) const {
        const std::size_t n = v.dim();
        Mat<K> s = zeros(small, 2 * n, 2 * n);
        const auto t = big.gen(), tb = big.conj(t);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const auto& g = v.gram(i, j);
                if (big.is_zero(g)) continue;
                s(2 * i, 2 * j) = re(g);
                s(2 * i, 2 * j + 1) = re(g * t);
                s(2 * i + 1, 2 * j) = re(tb * g);
                s(2 * i + 1, 2 * j + 1) = s(2 * i, 2 * j);
            }
        }
        return FormSpace<K>::make(small, v.epsilon, std::move(s));
    }

    Lagrangian<K> lagrangian(const SpacePtr<K>& target, const Lagrangian<K>& l) const {
        return Lagrangian<K>::make(target, matrix(l.basis()));
    }
};

}  // namespace wittlink
