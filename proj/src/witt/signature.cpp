#include "wittlink/witt/signature.hpp"

#include <algorithm>
#include <numeric>

#include "wittlink/algebra/laurent.hpp"
#include "wittlink/polyfactor/factor.hpp"

namespace wittlink {

namespace {

int sign_at(const QT::Elem& s, const Rational& u) { return s.num().eval(u).sign() * s.den().eval(u).sign(); }

struct Root {
    std::size_t poly;
    int index;
    RootInterval iv;
};

Poly<Rational> cyclotomic(int n) {
    Poly<Rational> f = Poly<Rational>::monomial(Rational(1), static_cast<std::size_t>(n)) - Poly<Rational>::constant(Rational(1));
    for (int d = 1; d < n; ++d) {
        if (n % d == 0) f = exact_div(f, cyclotomic(d));
    }
    return f;
}

}  // namespace

SignatureStepFunction signature_function(const WittClass<QT>& a) {
    const QT qu = make_qu();
    std::vector<QT::Elem> s;
    for (const auto& x : a.entries) s.push_back(to_fixed_field(qu, x));
    // Distinct irreducible factors of all numerators and denominators.
    std::vector<Poly<Rational>> polys;
    for (const auto& e : s) {
        for (const Poly<Rational>* f : {&e.num(), &e.den()}) {
            if (f->degree() <= 0) continue;
            for (const auto& [g, m] : factor_q(*f).factors) {
                if (std::find(polys.begin(), polys.end(), g) == polys.end()) polys.push_back(g);
            }
        }
    }
    std::vector<Root> roots;
    for (std::size_t i = 0; i < polys.size(); ++i) {
        auto ivs = isolate_roots(polys[i], Rational(-2), Rational(2));
        for (std::size_t k = 0; k < ivs.size(); ++k) roots.push_back({i, static_cast<int>(k), ivs[k]});
    }
    // Sort by u; distinct irreducibles have no common roots, so refine until disjoint.
    std::vector<AlgebraicReal> alg;
    for (const auto& r : roots) alg.emplace_back(polys[r.poly], r.iv);
    std::vector<std::size_t> order(roots.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return AlgebraicReal::compare(alg[x], alg[y]) < 0; });
    for (auto& r : alg) {
        while (r.interval().lo == Rational(-2) || r.interval().hi == Rational(2)) {
            r.refine((r.interval().hi - r.interval().lo) / Rational(2));
        }
    }
    // Samples: between consecutive (now disjoint) intervals and at both ends.
    std::vector<Rational> samples;
    Rational prev(-2);
    for (std::size_t k : order) {
        const auto& iv = alg[k].interval();
        samples.push_back((prev + iv.lo) / Rational(2));
        prev = iv.hi;
    }
    samples.push_back((prev + Rational(2)) / Rational(2));
    // Sample values in increasing u.
    std::vector<int> vals;
    for (const auto& u : samples) {
        int v = 0;
        for (const auto& e : s) v += sign_at(e, u);
        vals.push_back(v);
    }
    // Convert to theta order: decreasing u.
    SignatureStepFunction out;
    out.values = {vals.back()};
    for (std::size_t j = order.size(); j-- > 0;) {
        const int next = vals[j];
        if (next == out.values.back()) continue;  // not a jump
        const std::size_t k = order[j];
        out.breakpoints.push_back({polys[roots[k].poly], roots[k].index, alg[k].interval()});
        out.values.push_back(next);
    }
    return out;
}

int evaluate(const SignatureStepFunction& s, AlgebraicReal u, Limit limit) {
    std::size_t above = 0;
    for (std::size_t j = 0; j < s.breakpoints.size(); ++j) {
        AlgebraicReal b = s.breakpoints[j].value();
        const int c = AlgebraicReal::compare(b, u);
        if (c == 0) {
            switch (limit) {
                case Limit::Right:
                    return s.values[j + 1];
                case Limit::Left:
                    return s.values[j];
                case Limit::Mid:
                    return s.values[j] + s.values[j + 1];
            }
        }
        if (c > 0) ++above;
    }
    return limit == Limit::Mid ? 2 * s.values[above] : s.values[above];
}

Poly<Rational> cos_minimal_poly(int n) {
    if (n < 3) throw DomainError("cos_minimal_poly needs n >= 3");
    Poly<Rational> phi = cyclotomic(n);
    return palindromic_to_fixed(LaurentPoly<Rational>::make(phi, -phi.degree() / 2));
}

AlgebraicReal u_of_rational(const Rational& u) {
    if (u < Rational(-2) || u > Rational(2)) throw DomainError("u = 2 cos(theta) must lie in [-2, 2]");
    Poly<Rational> f(std::vector<Rational>{-u, Rational(1)});
    return AlgebraicReal(f, RootInterval{u - Rational(1), u + Rational(1)});
}

AlgebraicReal u_of_angle(const Rational& r) {
    if (r < Rational(0) || r > Rational(1)) throw DomainError("angle must be r*pi with 0 <= r <= 1");
    // r pi = 2 pi k / n with k / n = r / 2.
    const Rational half = r / Rational(2);
    const long n = half.den().get_si(), k = half.num().get_si();
    if (n == 1) return u_of_rational(Rational(2));
    if (n == 2) return u_of_rational(Rational(-2));
    if (n == 4) return u_of_rational(Rational(0));
    if (n == 3) return u_of_rational(Rational(-1));
    if (n == 6) return u_of_rational(Rational(1));
    Poly<Rational> f = cos_minimal_poly(static_cast<int>(n));
    auto roots = isolate_roots(f, Rational(-2), Rational(2));
    // Roots 2cos(2 pi j / n) for j coprime to n, 0 < j < n/2, are decreasing in j.
    std::vector<long> js;
    for (long j = 1; 2 * j < n; ++j) {
        if (std::gcd(j, n) == 1) js.push_back(j);
    }
    const auto pos = std::find(js.begin(), js.end(), k) - js.begin();
    return AlgebraicReal(f, roots[roots.size() - 1 - static_cast<std::size_t>(pos)]);
}

}  // namespace wittlink
