#pragma once

#include <memory>
#include <utility>

#include "wittlink/forms/linalg.hpp"
#include "wittlink/forms/witt_class.hpp"

namespace wittlink {

/// K^n with the sesquilinear form h(x, y) = adjoint(x) G y, where adjoint(G) = epsilon G.
/// epsilon = -1 is the anti-hermitian (symplectic, for trivial involution) case.
template <class Ctx>
struct FormSpace {
    Ctx ctx{};
    int epsilon = -1;
    Mat<Ctx> gram;

    static std::shared_ptr<const FormSpace> make(const Ctx& ctx, int epsilon, Mat<Ctx> gram) {
        if (epsilon != 1 && epsilon != -1) throw DomainError("epsilon must be +1 or -1");
        if (gram.rows() != gram.cols()) throw DomainError("Gram matrix must be square");
        Mat<Ctx> a = adjoint(ctx, gram);
        if (!(epsilon == 1 ? a == gram : a == -gram)) {
            throw DomainError(epsilon == 1 ? "Gram matrix is not hermitian" : "Gram matrix is not anti-hermitian");
        }
        return std::make_shared<const FormSpace>(FormSpace{ctx, epsilon, std::move(gram)});
    }

    std::size_t dim() const { return gram.rows(); }
    bool nondegenerate() const { return rank(ctx, gram) == dim(); }
    /// Matrix of h between the column spans of a and b: adjoint(a) G b.
    Mat<Ctx> pairing(const Mat<Ctx>& a, const Mat<Ctx>& b) const { return adjoint(ctx, a) * (gram * b); }
    /// adjoint(g) G g = G.
    bool preserves(const Mat<Ctx>& g) const { return pairing(g, g) == gram; }
};

template <class Ctx>
using SpacePtr = std::shared_ptr<const FormSpace<Ctx>>;

/// Half-dimensional isotropic subspace, stored by a basis in reduced column echelon form.
template <class Ctx>
class Lagrangian {
   public:
    /// Validates and normalizes the basis.
    static Lagrangian make(SpacePtr<Ctx> parent, const Mat<Ctx>& basis) {
        const std::size_t n = parent->dim();
        if (n % 2 != 0) throw DomainError("a space with a lagrangian has even dimension");
        if (basis.rows() != n) throw DomainError("lagrangian basis has the wrong number of rows");
        Mat<Ctx> b = column_echelon(parent->ctx, basis);
        if (b.cols() != n / 2) throw DomainError("lagrangian basis must have rank dim/2");
        if (!is_zero_matrix(parent->ctx, parent->pairing(b, b))) throw DomainError("subspace is not isotropic");
        return Lagrangian(std::move(parent), std::move(b));
    }
    /// Trusts the caller: basis already of full rank, isotropic and in column echelon form.
    static Lagrangian trusted(SpacePtr<Ctx> parent, Mat<Ctx> basis) { return Lagrangian(std::move(parent), std::move(basis)); }

    const SpacePtr<Ctx>& parent() const { return parent_; }
    const Mat<Ctx>& basis() const { return basis_; }
    std::size_t dim() const { return basis_.cols(); }

   private:
    Lagrangian(SpacePtr<Ctx> p, Mat<Ctx> b) : parent_(std::move(p)), basis_(std::move(b)) {}
    SpacePtr<Ctx> parent_;
    Mat<Ctx> basis_;
};

template <class Ctx>
bool same_space(const SpacePtr<Ctx>& a, const SpacePtr<Ctx>& b) {
    return a == b || (a->epsilon == b->epsilon && a->ctx == b->ctx && a->gram == b->gram);
}

/// (V, -h) + (V, h).
template <class Ctx>
SpacePtr<Ctx> doubled_space(const FormSpace<Ctx>& v) {
    const std::size_t n = v.dim();
    Mat<Ctx> g = zeros(v.ctx, 2 * n, 2 * n);
    g.set_block(0, 0, -v.gram);
    g.set_block(n, n, v.gram);
    return std::make_shared<const FormSpace<Ctx>>(FormSpace<Ctx>{v.ctx, v.epsilon, std::move(g)});
}

/// Graph {(x, g x)} of a unitary g inside the doubled space vhat of v.
template <class Ctx>
Lagrangian<Ctx> graph_lagrangian(const FormSpace<Ctx>& v, const SpacePtr<Ctx>& vhat, const Mat<Ctx>& g,
                                 bool check = true) {
    if (check && !v.preserves(g)) throw DomainError("matrix is not unitary for the form");
    // [I; g] is already in reduced column echelon form.
    return Lagrangian<Ctx>::trusted(vhat, Mat<Ctx>::vstack(eye(v.ctx, v.dim()), g));
}

/// l + l' inside the doubled space, for lagrangians l (of (V,-h)) and l' (of (V,h)) of V.
template <class Ctx>
Lagrangian<Ctx> sum_lagrangian(const SpacePtr<Ctx>& vhat, const Mat<Ctx>& l, const Mat<Ctx>& lp) {
    const auto& ctx = vhat->ctx;
    Mat<Ctx> b = zeros(ctx, l.rows() + lp.rows(), l.cols() + lp.cols());
    b.set_block(0, 0, l);
    b.set_block(l.rows(), l.cols(), lp);
    return Lagrangian<Ctx>::make(vhat, b);
}

template <class Ctx>
std::size_t intersection_dim(const Lagrangian<Ctx>& a, const Lagrangian<Ctx>& b) {
    if (a.basis().rows() != b.basis().rows()) throw DomainError("lagrangians live in spaces of different dimension");
    const auto& ctx = a.parent()->ctx;
    return a.dim() + b.dim() - rank(ctx, Mat<Ctx>::hstack(a.basis(), b.basis()));
}

template <class Ctx>
std::size_t intersection_dim3(const Lagrangian<Ctx>& a, const Lagrangian<Ctx>& b, const Lagrangian<Ctx>& c) {
    const auto& ctx = a.parent()->ctx;
    // a ∩ b as a subspace, then intersect with c.
    Mat<Ctx> k = null_space(ctx, Mat<Ctx>::hstack(a.basis(), -b.basis()));
    if (k.cols() == 0) return 0;
    Mat<Ctx> ab = a.basis() * k.block(0, 0, a.dim(), k.cols());
    const std::size_t r_ab = rank(ctx, ab);
    return r_ab + c.dim() - rank(ctx, Mat<Ctx>::hstack(ab, c.basis()));
}

/// Result of diagonalizing a hermitian matrix: the radical dimension and the nonzero diagonal.
template <class Ctx>
struct Diagonalization {
    std::size_t kernel_dim = 0;
    std::vector<typename Ctx::Elem> entries;
};

/// Congruence diagonalization of a hermitian matrix.
/// Pivot: first nonzero diagonal entry; if the diagonal vanishes, v_i += lambda v_j for the
/// first nonzero G_ij, with lambda = 1, or 1/G_ij when Re G_ij = 0.
template <class Ctx>
Diagonalization<Ctx> diagonalize_hermitian(const Ctx& ctx, Mat<Ctx> g) {
    using E = typename Ctx::Elem;
    if (g.rows() != g.cols()) throw DomainError("Gram matrix must be square");
    if (!(adjoint(ctx, g) == g)) throw DomainError("matrix is not hermitian");
    Diagonalization<Ctx> out;
    std::vector<std::size_t> active(g.rows());
    for (std::size_t i = 0; i < active.size(); ++i) active[i] = i;
    auto conj = [&](const E& x) { return ctx.conj(x); };
    while (!active.empty()) {
        std::size_t piv = active.size();
        for (std::size_t a = 0; a < active.size(); ++a) {
            if (!ctx.is_zero(g(active[a], active[a]))) {
                piv = a;
                break;
            }
        }
        if (piv == active.size()) {
            // Zero diagonal: look for an off-diagonal entry.
            std::size_t ai = active.size(), aj = active.size();
            for (std::size_t a = 0; a < active.size() && ai == active.size(); ++a) {
                for (std::size_t b = 0; b < active.size(); ++b) {
                    if (a != b && !ctx.is_zero(g(active[a], active[b]))) {
                        ai = a;
                        aj = b;
                        break;
                    }
                }
            }
            if (ai == active.size()) {
                out.kernel_dim += active.size();
                break;
            }
            const std::size_t i = active[ai], j = active[aj];
            const E gij = g(i, j);
            E lambda = ctx.one();
            if (ctx.is_zero(gij + conj(gij))) lambda = ctx.one() / gij;
            // New basis vector v_i + lambda v_j: row i += conj(lambda) row j, column i += lambda column j.
            const E lc = conj(lambda);
            for (std::size_t k : active) {
                if (k == i) continue;
                g(i, k) = g(i, k) + lc * g(j, k);
                g(k, i) = g(k, i) + lambda * g(k, j);
            }
            g(i, i) = lambda * gij + conj(lambda * gij);
            piv = ai;
        }
        const std::size_t i = active[piv];
        const E a = g(i, i);
        out.entries.push_back(a);
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(piv));
        // Schur complement: G_jk -= G_ji G_ik / a.
        const E ainv = ctx.one() / a;
        for (std::size_t j : active) {
            if (ctx.is_zero(g(j, i))) continue;
            const E f = g(j, i) * ainv;
            for (std::size_t k : active) {
                if (!ctx.is_zero(g(i, k))) g(j, k) = g(j, k) - f * g(i, k);
            }
        }
    }
    return out;
}

/// Gram matrix of the Maslov form on l1 + l2 + l3 in the stored bases.
template <class Ctx>
Mat<Ctx> maslov_gram(const Lagrangian<Ctx>& l1, const Lagrangian<Ctx>& l2, const Lagrangian<Ctx>& l3) {
    if (!same_space(l1.parent(), l2.parent()) || !same_space(l1.parent(), l3.parent())) {
        throw DomainError("lagrangians belong to different spaces");
    }
    const FormSpace<Ctx>& w = *l1.parent();
    if (w.epsilon != -1) throw DomainError("the Maslov index needs an anti-hermitian space");
    const std::size_t m = l1.dim();
    const Lagrangian<Ctx>* ls[3] = {&l1, &l2, &l3};
    // Sign of h(v_i, w_j) in H(v, w) = h(v1, w2 - w3) + h(v2, w3 - w1) + h(v3, w1 - w2).
    static const int sign[3][3] = {{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}};
    Mat<Ctx> gram = zeros(w.ctx, 3 * m, 3 * m);
    std::vector<Mat<Ctx>> gb;
    for (const auto* l : ls) gb.push_back(w.gram * l->basis());
    for (int i = 0; i < 3; ++i) {
        const Mat<Ctx> ai = adjoint(w.ctx, ls[i]->basis());
        for (int j = 0; j < 3; ++j) {
            if (sign[i][j] == 0) continue;
            if (j < i) {
                // Hermitian: block (i, j) is the adjoint of block (j, i).
                gram.set_block(i * m, j * m, adjoint(w.ctx, gram.block(j * m, i * m, m, m)));
                continue;
            }
            Mat<Ctx> b = ai * gb[j];
            gram.set_block(i * m, j * m, sign[i][j] > 0 ? b : -b);
        }
    }
    return gram;
}

/// Witt class of the Maslov form modulo its radical.
template <class Ctx>
WittClass<Ctx> maslov_index(const Lagrangian<Ctx>& l1, const Lagrangian<Ctx>& l2, const Lagrangian<Ctx>& l3) {
    const auto& ctx = l1.parent()->ctx;
    auto d = diagonalize_hermitian(ctx, maslov_gram(l1, l2, l3));
    return WittClass<Ctx>{ctx, std::move(d.entries)};
}

/// tau(Gamma_1, Gamma_g, Gamma_gh) in the doubled space of v.
template <class Ctx>
WittClass<Ctx> meyer_cocycle(const FormSpace<Ctx>& v, const SpacePtr<Ctx>& vhat, const Mat<Ctx>& g,
                             const Mat<Ctx>& h, bool check = true) {
    const auto one = graph_lagrangian(v, vhat, eye(v.ctx, v.dim()), false);
    return maslov_index(one, graph_lagrangian(v, vhat, g, check), graph_lagrangian(v, vhat, g * h, check));
}

template <class Ctx>
WittClass<Ctx> meyer_cocycle(const FormSpace<Ctx>& v, const Mat<Ctx>& g, const Mat<Ctx>& h) {
    return meyer_cocycle(v, doubled_space(v), g, h, true);
}

/// Thomas's criterion for tau(l1, l2, l3) = 0.
template <class Ctx>
bool thomas_vanishes(const Lagrangian<Ctx>& l1, const Lagrangian<Ctx>& l2, const Lagrangian<Ctx>& l3) {
    if (l1.dim() != l2.dim() || l1.dim() != l3.dim()) throw DomainError("lagrangian dimension mismatch");
    const std::size_t lhs = intersection_dim(l1, l2) + intersection_dim(l2, l3) + intersection_dim(l3, l1);
    return lhs == l1.dim() + 2 * intersection_dim3(l1, l2, l3);
}

/// Image of a lagrangian under a linear automorphism of its parent.
template <class Ctx>
Lagrangian<Ctx> transform(const Mat<Ctx>& g, const Lagrangian<Ctx>& l) {
    return Lagrangian<Ctx>::make(l.parent(), g * l.basis());
}

}  // namespace wittlink
