#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "wittlink/forms/matrix.hpp"

namespace wittlink {

template <class Ctx>
using Mat = Matrix<typename Ctx::Elem>;

template <class Ctx>
Mat<Ctx> zeros(const Ctx& ctx, std::size_t r, std::size_t c) {
    return Mat<Ctx>(r, c, ctx.zero());
}

template <class Ctx>
Mat<Ctx> eye(const Ctx& ctx, std::size_t n) {
    return Mat<Ctx>::identity(n, ctx.zero(), ctx.one());
}

/// Entrywise involution.
template <class Ctx>
Mat<Ctx> conj(const Ctx& ctx, const Mat<Ctx>& m) {
    if (!ctx.involutive()) return m;
    return m.map([&](const typename Ctx::Elem& x) { return ctx.conj(x); });
}

/// Transpose of the conjugate.
template <class Ctx>
Mat<Ctx> adjoint(const Ctx& ctx, const Mat<Ctx>& m) {
    return conj(ctx, m).transpose();
}

template <class Ctx>
bool is_zero_matrix(const Ctx& ctx, const Mat<Ctx>& m) {
    for (const auto& x : m.data()) {
        if (!ctx.is_zero(x)) return false;
    }
    return true;
}

template <class Ctx>
struct Echelon {
    Mat<Ctx> m;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
    int sign = 1;                     // parity of row swaps
};

namespace detail {

// Row with the lightest nonzero entry in column j among rows [from, rows).
template <class Ctx>
std::size_t pick_pivot(const Ctx& ctx, const Mat<Ctx>& m, std::size_t from, std::size_t j) {
    std::size_t best = m.rows();
    std::size_t best_w = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = from; i < m.rows(); ++i) {
        if (ctx.is_zero(m(i, j))) continue;
        std::size_t w = ctx.weight(m(i, j));
        if (w < best_w) {
            best = i;
            best_w = w;
        }
    }
    return best;
}

template <class Ctx>
void swap_rows(Mat<Ctx>& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

}  // namespace detail

/// Row echelon form; with `reduced`, pivots are 1 and their columns are cleared above too.
template <class Ctx>
Echelon<Ctx> echelon(const Ctx& ctx, Mat<Ctx> m, bool reduced) {
    Echelon<Ctx> out;
    std::size_t row = 0;
    for (std::size_t j = 0; j < m.cols() && row < m.rows(); ++j) {
        std::size_t p = detail::pick_pivot(ctx, m, row, j);
        if (p == m.rows()) continue;
        if (p != row) {
            detail::swap_rows<Ctx>(m, p, row);
            out.sign = -out.sign;
        }
        if (reduced) {
            const auto inv = ctx.one() / m(row, j);
            for (std::size_t k = j; k < m.cols(); ++k) {
                if (!ctx.is_zero(m(row, k))) m(row, k) = m(row, k) * inv;
            }
        }
        const auto piv = m(row, j);
        for (std::size_t i = reduced ? 0 : row + 1; i < m.rows(); ++i) {
            if (i == row || ctx.is_zero(m(i, j))) continue;
            const auto f = reduced ? m(i, j) : m(i, j) / piv;
            for (std::size_t k = j; k < m.cols(); ++k) {
                if (!ctx.is_zero(m(row, k))) m(i, k) = m(i, k) - f * m(row, k);
            }
        }
        out.pivots.push_back(j);
        ++row;
    }
    out.m = std::move(m);
    return out;
}

template <class Ctx>
std::size_t rank(const Ctx& ctx, const Mat<Ctx>& m) {
    return echelon(ctx, m, false).pivots.size();
}

template <class Ctx>
typename Ctx::Elem det(const Ctx& ctx, const Mat<Ctx>& m) {
    if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
    auto e = echelon(ctx, m, false);
    if (e.pivots.size() < m.rows()) return ctx.zero();
    auto d = ctx.from_int(e.sign);
    for (std::size_t i = 0; i < m.rows(); ++i) d = d * e.m(i, i);
    return d;
}

template <class Ctx>
Mat<Ctx> inverse(const Ctx& ctx, const Mat<Ctx>& m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw DomainError("inverse of a non-square matrix");
    auto e = echelon(ctx, Mat<Ctx>::hstack(m, eye(ctx, n)), true);
    if (e.pivots.size() < n || e.pivots.back() >= n) throw DivisionByZero("matrix is singular");
    return e.m.block(0, n, n, n);
}

/// Basis of the right kernel, as columns.
template <class Ctx>
Mat<Ctx> null_space(const Ctx& ctx, const Mat<Ctx>& m) {
    auto e = echelon(ctx, m, true);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto j : e.pivots) is_pivot[j] = true;
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (!is_pivot[j]) free.push_back(j);
    }
    Mat<Ctx> k = zeros(ctx, m.cols(), free.size());
    for (std::size_t c = 0; c < free.size(); ++c) {
        k(free[c], c) = ctx.one();
        for (std::size_t r = 0; r < e.pivots.size(); ++r) k(e.pivots[r], c) = -e.m(r, free[c]);
    }
    return k;
}

/// Reduced column echelon form of the column span, zero columns dropped.
template <class Ctx>
Mat<Ctx> column_echelon(const Ctx& ctx, const Mat<Ctx>& b) {
    auto e = echelon(ctx, b.transpose(), true);
    return e.m.block(0, 0, e.pivots.size(), b.rows()).transpose();
}

}  // namespace wittlink
