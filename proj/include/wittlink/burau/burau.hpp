#pragma once

#include <optional>
#include <string>

#include "wittlink/algebra/field_config.hpp"
#include "wittlink/algebra/laurent.hpp"
#include "wittlink/braid/braid.hpp"
#include "wittlink/forms/form_space.hpp"
#include "wittlink/witt/normalize.hpp"

// Burau representation in the column-vector convention: sigma_i acts by the identity
// with the block [[1-t, 1], [t, 0]] on coordinates (i, i+1). Its fixed vector is
// v_n = (1, t, ..., t^(n-1)) and it preserves h_n with Gram H_n = Omega_n - Omega_n^*.

namespace wittlink {

/// A field with involution together with the value alpha(t) of the Burau variable.
template <class Ctx>
struct BurauContext {
    Ctx ctx;
    typename Ctx::Elem t;
};

inline BurauContext<QT> burau_qt() {
    QT K = make_qt();
    return {K, K.gen()};
}
inline BurauContext<RationalField> burau_q() { return {RationalField{}, Rational(-1)}; }
inline BurauContext<PrimeField> burau_fp(std::uint64_t p) {
    PrimeField F(p);
    return {F, F.from_int(-1)};
}
inline BurauContext<FpT> burau_fpt(std::uint64_t p) {
    FpT K = make_fpt(p);
    return {K, K.gen()};
}

template <class Ctx>
Mat<Ctx> sigma_matrix(const BurauContext<Ctx>& b, int i, int n, int sign = 1) {
    if (i < 1 || i >= n) {
        throw DomainError("generator index " + std::to_string(i) + " out of range for " + std::to_string(n) +
                          " strands");
    }
    const auto& K = b.ctx;
    Mat<Ctx> m = eye(K, static_cast<std::size_t>(n));
    const std::size_t a = static_cast<std::size_t>(i - 1), c = a + 1;
    if (sign > 0) {
        m(a, a) = K.one() - b.t;
        m(a, c) = K.one();
        m(c, a) = b.t;
        m(c, c) = K.zero();
    } else {
        // inverse of [[1-t, 1], [t, 0]] is [[0, 1/t], [1, 1 - 1/t]]
        const auto ti = K.one() / b.t;
        m(a, a) = K.zero();
        m(a, c) = ti;
        m(c, a) = K.one();
        m(c, c) = K.one() - ti;
    }
    return m;
}

/// r_m(w) for m >= w.n (defaults to w.n).
template <class Ctx>
Mat<Ctx> burau_eval(const BurauContext<Ctx>& b, const BraidWord& w, int m = 0) {
    if (m == 0) m = w.n;
    if (m < w.n) throw DomainError("Burau evaluation needs at least as many strands as the word");
    Mat<Ctx> r = eye(b.ctx, static_cast<std::size_t>(m));
    for (const auto& l : w.letters) r = r * sigma_matrix(b, l.index, m, l.sign);
    return r;
}

template <class Ctx>
Mat<Ctx> omega_matrix(const BurauContext<Ctx>& b, int n) {
    Mat<Ctx> o = eye(b.ctx, static_cast<std::size_t>(n));
    for (std::size_t i = 1; i < static_cast<std::size_t>(n); ++i) {
        for (std::size_t j = 0; j < i; ++j) o(i, j) = b.ctx.one() - b.t;
    }
    return o;
}

template <class Ctx>
Mat<Ctx> h_matrix(const BurauContext<Ctx>& b, int n) {
    const Mat<Ctx> o = omega_matrix(b, n);
    return o - adjoint(b.ctx, o);
}

/// (V_n, h_n) as an anti-hermitian space; may be degenerate.
template <class Ctx>
SpacePtr<Ctx> burau_space(const BurauContext<Ctx>& b, int n) {
    return FormSpace<Ctx>::make(b.ctx, -1, h_matrix(b, n));
}

/// (-1)^n [(1 - t)^(n-1) - (1/t - 1)^(n-1)]
template <class Ctx>
typename Ctx::Elem det_h_closed(const BurauContext<Ctx>& b, int n) {
    const auto& K = b.ctx;
    auto a = K.one(), c = K.one();
    const auto x = K.one() - b.t, y = K.one() / b.t - K.one();
    for (int k = 1; k < n; ++k) {
        a = a * x;
        c = c * y;
    }
    return n % 2 == 0 ? a - c : c - a;
}

/// Closed form, cross-checked against the determinant of H_n.
template <class Ctx>
typename Ctx::Elem det_h(const BurauContext<Ctx>& b, int n) {
    auto closed = det_h_closed(b, n);
    if (!(det(b.ctx, h_matrix(b, n)) == closed)) {
        throw std::logic_error("det H_" + std::to_string(n) + " disagrees with its closed form");
    }
    return closed;
}

/// Smallest m >= n with H_m non-degenerate.
template <class Ctx>
int effective_n(const BurauContext<Ctx>& b, int n) {
    for (int m = n; m <= 2 * n; ++m) {
        if (!b.ctx.is_zero(det_h_closed(b, m))) return m;
    }
    throw DegenerateError("no non-degenerate Burau form between " + std::to_string(n) + " and " +
                          std::to_string(2 * n) + " strands");
}

template <class Ctx>
Mat<Ctx> fixed_vector(const BurauContext<Ctx>& b, int n) {
    Mat<Ctx> v = zeros(b.ctx, static_cast<std::size_t>(n), 1);
    auto p = b.ctx.one();
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
        v(i, 0) = p;
        p = p * b.t;
    }
    return v;
}

/// d_n(w) = dim ker(r_n(w) - Id).
template <class Ctx>
std::size_t nullity_d(const BurauContext<Ctx>& b, const BraidWord& w) {
    const Mat<Ctx> m = burau_eval(b, w);
    return m.rows() - rank(b.ctx, m - eye(b.ctx, m.rows()));
}

/// Action on V_n / <v_n> in the basis e_1, ..., e_{n-1}.
template <class Ctx>
Mat<Ctx> reduced_burau(const BurauContext<Ctx>& b, const BraidWord& w) {
    const std::size_t n = static_cast<std::size_t>(w.n);
    Mat<Ctx> p = eye(b.ctx, n);
    p.set_block(0, n - 1, fixed_vector(b, w.n));
    const Mat<Ctx> q = inverse(b.ctx, p) * burau_eval(b, w) * p;
    return q.block(0, 0, n - 1, n - 1);
}

/// det(R - I) (t - 1)/(t^n - 1) for the reduced Burau matrix R over Q(t); a polynomial
/// equal to the Alexander polynomial of the closure up to units +-t^k.
QT::Elem alexander_raw(const BraidWord& w);

/// Alexander polynomial of the closure normalized so that Delta(1/t) = Delta(t) and
/// Delta(1) > 0 (Conway normalization for knots). Empty when no such normalization exists,
/// which happens exactly when Delta vanishes or has odd width or Delta(1) = 0.
std::optional<LaurentPoly<Rational>> alexander_conway(const BraidWord& w);

/// Minimal palindromic class of the Conway-normalized Alexander polynomial.
std::optional<Palindromic<Rational>> alexander_poly(const BraidWord& w);

/// |Delta(-1)|.
Rational knot_determinant(const BraidWord& w);

}  // namespace wittlink
