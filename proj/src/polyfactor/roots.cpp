#include "wittlink/polyfactor/roots.hpp"

#include <algorithm>

#include "wittlink/polyfactor/squarefree.hpp"

namespace wittlink {

namespace {

int sign_at(const Poly<Rational>& f, const Rational& x) { return f.eval(x).sign(); }

Rational dyadic_mid(const Rational& a, const Rational& b) { return (a + b) / Rational(2); }

// A dyadic point strictly inside (a, b) where f does not vanish, the midpoint if possible.
Rational split_point(const Poly<Rational>& f, const Rational& a, const Rational& b) {
    const Rational width = b - a;
    for (long den = 2;; den *= 2) {
        for (long k = 1; k < den; k += 2) {
            Rational x = a + width * Rational(Integer(k), Integer(den));
            if (!f.eval(x).is_zero()) return x;
        }
    }
}

Integer pow2_ceil(const Rational& x) {
    Integer p = 1;
    while (Rational(p) < x) p *= 2;
    return p;
}

}  // namespace

std::vector<Poly<Rational>> sturm_chain(const Poly<Rational>& f) {
    std::vector<Poly<Rational>> chain;
    if (f.is_zero()) return chain;
    chain.push_back(f);
    Poly<Rational> d = f.derivative();
    while (!d.is_zero()) {
        chain.push_back(d.scaled(d.lc().abs().inv()));
        Poly<Rational> r = -(chain[chain.size() - 2] % chain.back());
        d = std::move(r);
    }
    return chain;
}

int sign_variations(const std::vector<Poly<Rational>>& chain, const Rational& x) {
    int last = 0, v = 0;
    for (const auto& g : chain) {
        int s = sign_at(g, x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

int count_roots(const Poly<Rational>& f, const Rational& a, const Rational& b) {
    auto chain = sturm_chain(f);
    return sign_variations(chain, a) - sign_variations(chain, b);
}

std::vector<RootInterval> isolate_roots(const Poly<Rational>& f0, const Rational& lo, const Rational& hi) {
    std::vector<RootInterval> out;
    if (f0.degree() <= 0) return out;
    Poly<Rational> f = squarefree_part(f0);
    const Poly<Rational> x = Poly<Rational>::x(Rational(1));
    while (f.degree() > 0 && f.eval(lo).is_zero()) f = exact_div(f, x - Poly<Rational>::constant(lo));
    while (f.degree() > 0 && f.eval(hi).is_zero()) f = exact_div(f, x - Poly<Rational>::constant(hi));
    if (f.degree() <= 0) return out;
    auto chain = sturm_chain(f);
    struct Item {
        Rational a, b;
        int va, vb;
    };
    std::vector<Item> stack{{lo, hi, sign_variations(chain, lo), sign_variations(chain, hi)}};
    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        int n = it.va - it.vb;
        if (n <= 0) continue;
        if (n == 1) {
            out.push_back({it.a, it.b});
            continue;
        }
        Rational m = split_point(f, it.a, it.b);
        int vm = sign_variations(chain, m);
        stack.push_back({m, it.b, vm, it.vb});
        stack.push_back({it.a, m, it.va, vm});
    }
    std::sort(out.begin(), out.end(), [](const RootInterval& p, const RootInterval& q) { return p.lo < q.lo; });
    return out;
}

std::vector<RootInterval> isolate_real_roots(const Poly<Rational>& f) {
    if (f.degree() <= 0) return {};
    // Cauchy bound 1 + max |a_i / a_n|.
    Rational bound(0);
    for (std::size_t i = 0; i + 1 < f.size(); ++i) bound = std::max(bound, (f[i] / f.lc()).abs());
    Rational b(Integer(pow2_ceil(bound + Rational(1)) * 2));
    return isolate_roots(f, -b, b);
}

AlgebraicReal::AlgebraicReal(Poly<Rational> f, RootInterval iv) : f_(std::move(f)), iv_(std::move(iv)) {}

void AlgebraicReal::bisect() {
    Rational m = split_point(f_, iv_.lo, iv_.hi);
    if (sign_at(f_, iv_.lo) * sign_at(f_, m) < 0) {
        iv_.hi = m;
    } else {
        iv_.lo = m;
    }
}

void AlgebraicReal::refine(const Rational& w) {
    while (iv_.hi - iv_.lo > w) bisect();
}

int AlgebraicReal::sign_of(const Poly<Rational>& g) {
    if (g.is_zero()) return 0;
    Poly<Rational> h = gcd(f_, g);
    if (h.degree() > 0 && sign_at(h, iv_.lo) * sign_at(h, iv_.hi) < 0) return 0;
    Poly<Rational> gs = squarefree_part(g);
    if (gs.degree() <= 0) return g.lc().sign();
    for (;;) {
        if (!gs.eval(iv_.lo).is_zero() && !gs.eval(iv_.hi).is_zero() && count_roots(gs, iv_.lo, iv_.hi) == 0) {
            return sign_at(g, dyadic_mid(iv_.lo, iv_.hi));
        }
        bisect();
    }
}

double AlgebraicReal::to_double(int bits) {
    Rational w(Integer(1), Integer(1) << bits);
    refine(w);
    return approx().to_double();
}

int AlgebraicReal::compare(AlgebraicReal& a, AlgebraicReal& b) {
    Poly<Rational> h = gcd(a.f_, b.f_);
    const bool common = h.degree() > 0 && sign_at(h, a.iv_.lo) * sign_at(h, a.iv_.hi) < 0 &&
                        sign_at(h, b.iv_.lo) * sign_at(h, b.iv_.hi) < 0;
    while (true) {
        if (a.iv_.hi <= b.iv_.lo) return -1;
        if (b.iv_.hi <= a.iv_.lo) return 1;
        // Both are roots of h; if h has one root on the union they coincide.
        if (common && count_roots(h, std::min(a.iv_.lo, b.iv_.lo), std::max(a.iv_.hi, b.iv_.hi)) == 1) return 0;
        if (a.iv_.hi - a.iv_.lo > b.iv_.hi - b.iv_.lo) {
            a.bisect();
        } else {
            b.bisect();
        }
    }
}

}  // namespace wittlink
