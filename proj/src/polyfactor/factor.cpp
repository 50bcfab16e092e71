#include "wittlink/polyfactor/factor.hpp"

#include <algorithm>
#include <map>

#include "wittlink/algebra/zpoly.hpp"
#include "wittlink/polyfactor/squarefree.hpp"

namespace wittlink {

// ---------------------------------------------------------------- integers

namespace {

Integer rho_brent(const Integer& n, unsigned long c) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    Integer y = 2, x, g = 1, q = 1, ys;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto f = [&](const Integer& v) { return Integer((v * v + c) % n); };
    while (g == 1) {
        x = y;
        for (unsigned long i = 0; i < r; ++i) y = f(y);
        unsigned long k = 0;
        while (k < r && g == 1) {
            ys = y;
            for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                y = f(y);
                q = (q * abs(x - y)) % n;
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += m;
        }
        r *= 2;
    }
    if (g == n) {
        do {
            ys = f(ys);
            Integer d = abs(x - ys);
            mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
    }
    return g;
}

void split_integer(const Integer& n, std::map<Integer, int>& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
        ++out[n];
        return;
    }
    for (unsigned long c = 1;; ++c) {
        Integer d = rho_brent(n, c);
        if (d != n && d != 1) {
            split_integer(d, out);
            split_integer(n / d, out);
            return;
        }
    }
}

}  // namespace

std::vector<std::pair<Integer, int>> factor_integer(const Integer& n0) {
    if (n0 == 0) throw DomainError("factorization of zero");
    Integer n = abs(n0);
    std::map<Integer, int> out;
    for (unsigned long p = 2; p < 1000 && n > 1; ++p) {
        if (p > 2 && p % 2 == 0) continue;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++out[Integer(p)];
            n /= p;
        }
    }
    split_integer(n, out);
    return {out.begin(), out.end()};
}

Integer squarefree_integer(const Integer& n) {
    Integer r = n < 0 ? -1 : 1;
    for (const auto& [p, e] : factor_integer(n)) {
        if (e % 2 == 1) r *= p;
    }
    return r;
}

// ---------------------------------------------------------------- F_p

namespace {

bool poly_less(const Poly<Zp>& a, const Poly<Zp>& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i].value() != b[i].value()) return a[i].value() < b[i].value();
    }
    return false;
}

bool zpoly_less(const Poly<Rational>& a, const Poly<Rational>& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

}  // namespace

std::vector<std::pair<Poly<Zp>, int>> distinct_degree(const Poly<Zp>& f0) {
    std::vector<std::pair<Poly<Zp>, int>> out;
    Poly<Zp> f = f0.monic();
    if (f.degree() <= 0) return out;
    const std::uint64_t p = f.lc().modulus();
    const Poly<Zp> x = Poly<Zp>::x(f.lc());
    Poly<Zp> w = x;
    for (int i = 1; f.degree() >= 2 * i; ++i) {
        w = powmod(w, Integer(static_cast<unsigned long>(p)), f);
        Poly<Zp> g = gcd(f, w - x);
        if (g.degree() > 0) {
            out.emplace_back(g, i);
            f = exact_div(f, g);
            w = w % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(f, f.degree());
    return out;
}

std::vector<Poly<Zp>> equal_degree(const Poly<Zp>& f, int d, std::mt19937_64& rng) {
    if (f.degree() == d) return {f.monic()};
    const std::uint64_t p = f.lc().modulus();
    Integer q = 1;
    for (int i = 0; i < d; ++i) q *= static_cast<unsigned long>(p);
    const Integer e = (q - 1) / 2;
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    for (;;) {
        std::vector<Zp> a;
        for (int i = 0; i < f.degree(); ++i) a.emplace_back(static_cast<std::int64_t>(dist(rng)), p);
        Poly<Zp> ap(std::move(a));
        if (ap.degree() <= 0) continue;
        Poly<Zp> g = gcd(ap, f);
        if (g.degree() <= 0) {
            Poly<Zp> b = powmod(ap, e, f) - Poly<Zp>::constant(Zp(1, p));
            g = gcd(b, f);
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            auto left = equal_degree(g, d, rng);
            auto right = equal_degree(exact_div(f, g), d, rng);
            left.insert(left.end(), right.begin(), right.end());
            return left;
        }
    }
}

Factorization<Zp> factor_fp(const Poly<Zp>& f, std::uint64_t seed) {
    if (f.is_zero()) throw DomainError("factorization of the zero polynomial");
    Factorization<Zp> out{f.lc(), {}};
    if (f.degree() == 0) return out;
    std::mt19937_64 rng(seed);
    for (const auto& [g, m] : squarefree_decompose(f).parts) {
        for (const auto& [h, d] : distinct_degree(g)) {
            for (auto& irr : equal_degree(h, d, rng)) out.factors.emplace_back(std::move(irr), m);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    return out;
}

// ---------------------------------------------------------------- Q

namespace {

using zpoly::ZPoly;

Integer mod_pos(const Integer& a, const Integer& m) {
    Integer r = a % m;
    if (r < 0) r += m;
    return r;
}

ZPoly reduce(ZPoly f, const Integer& m) {
    for (auto& c : f) c = mod_pos(c, m);
    zpoly::trim(f);
    return f;
}

ZPoly add_m(const ZPoly& a, const ZPoly& b, const Integer& m) {
    ZPoly r(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return reduce(std::move(r), m);
}

ZPoly sub_m(const ZPoly& a, const ZPoly& b, const Integer& m) {
    ZPoly r(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return reduce(std::move(r), m);
}

ZPoly mul_m(const ZPoly& a, const ZPoly& b, const Integer& m) { return reduce(zpoly::mul(a, b), m); }

// Division by a polynomial whose leading coefficient is a unit mod m.
std::pair<ZPoly, ZPoly> divmod_m(const ZPoly& a, const ZPoly& b, const Integer& m) {
    ZPoly r = reduce(a, m);
    const int db = zpoly::degree(b);
    if (zpoly::degree(r) < db) return {ZPoly{}, r};
    Integer inv;
    mpz_invert(inv.get_mpz_t(), b.back().get_mpz_t(), m.get_mpz_t());
    ZPoly q(static_cast<std::size_t>(zpoly::degree(r) - db + 1), Integer(0));
    for (int i = zpoly::degree(r); i >= db; --i) {
        Integer c = mod_pos(r[static_cast<std::size_t>(i)] * inv, m);
        if (c == 0) continue;
        q[static_cast<std::size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j) {
            auto& t = r[static_cast<std::size_t>(i - db + j)];
            t = mod_pos(t - c * b[static_cast<std::size_t>(j)], m);
        }
    }
    r.resize(static_cast<std::size_t>(db));
    zpoly::trim(r);
    zpoly::trim(q);
    return {q, r};
}

ZPoly from_zp(const Poly<Zp>& f) {
    ZPoly r;
    for (const auto& c : f.coeffs()) r.emplace_back(static_cast<unsigned long>(c.value()));
    return r;
}

Poly<Zp> to_zp(const ZPoly& f, std::uint64_t p) {
    std::vector<Zp> v;
    const Integer pm(static_cast<unsigned long>(p));
    for (const auto& c : f) v.emplace_back(static_cast<std::int64_t>(mod_pos(c, pm).get_ui()), p);
    return Poly<Zp>(std::move(v));
}

ZPoly symmetric(ZPoly f, const Integer& m) {
    const Integer half = m / 2;
    for (auto& c : f) {
        c = mod_pos(c, m);
        if (c > half) c -= m;
    }
    zpoly::trim(f);
    return f;
}

// Lifts f = lc(f) * prod factors (mod p) to a factorization modulo m = p^(2^k).
// Returns monic lifts.
void hensel_tree(const ZPoly& f, const std::vector<Poly<Zp>>& factors, std::uint64_t p, const Integer& m,
                 std::vector<ZPoly>& out) {
    if (factors.size() == 1) {
        Integer inv;
        Integer lc = mod_pos(f.back(), m);
        mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), m.get_mpz_t());
        ZPoly u = f;
        for (auto& c : u) c = c * inv;
        out.push_back(reduce(std::move(u), m));
        return;
    }
    const std::size_t half = factors.size() / 2;
    std::vector<Poly<Zp>> left(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(half));
    std::vector<Poly<Zp>> right(factors.begin() + static_cast<std::ptrdiff_t>(half), factors.end());
    const Zp lcp = to_zp(ZPoly{f.back()}, p)[0];
    Poly<Zp> g0 = Poly<Zp>::constant(lcp), h0 = Poly<Zp>::constant(Zp(1, p));
    for (const auto& u : left) g0 = g0 * u;
    for (const auto& u : right) h0 = h0 * u;
    auto xg = xgcd(g0, h0);
    ZPoly g = from_zp(g0), h = from_zp(h0), s = from_zp(xg.s), t = from_zp(xg.t);
    Integer mod(static_cast<unsigned long>(p));
    while (mod < m) {
        mod = mod * mod;
        // One quadratic Hensel step modulo mod.
        ZPoly e = sub_m(f, mul_m(g, h, mod), mod);
        auto [q, r] = divmod_m(mul_m(s, e, mod), h, mod);
        ZPoly g1 = add_m(add_m(g, mul_m(t, e, mod), mod), mul_m(q, g, mod), mod);
        ZPoly h1 = add_m(h, r, mod);
        ZPoly b = sub_m(add_m(mul_m(s, g1, mod), mul_m(t, h1, mod), mod), ZPoly{Integer(1)}, mod);
        auto [c, d] = divmod_m(mul_m(s, b, mod), h1, mod);
        ZPoly s1 = sub_m(s, d, mod);
        ZPoly t1 = sub_m(sub_m(t, mul_m(t, b, mod), mod), mul_m(c, g1, mod), mod);
        g = std::move(g1);
        h = std::move(h1);
        s = std::move(s1);
        t = std::move(t1);
    }
    hensel_tree(g, left, p, m, out);
    hensel_tree(h, right, p, m, out);
}

// Factors a primitive squarefree integer polynomial of positive degree.
std::vector<ZPoly> factor_squarefree_z(const ZPoly& f) {
    const int n = zpoly::degree(f);
    if (n == 1) return {f};
    if (n > kMaxFactorDegree) throw DomainError("polynomial degree exceeds the factoring cap");
    const Poly<Rational> fq = zpoly::to_rational(f);
    // Pick the prime with the fewest modular factors among a few candidates.
    std::uint64_t best_p = 0;
    std::vector<Poly<Zp>> best;
    int tried = 0;
    for (std::uint64_t p = 3; tried < 6; p += 2) {
        if (!is_prime_u64(p)) continue;
        if (mpz_divisible_ui_p(f.back().get_mpz_t(), p)) continue;
        Poly<Zp> fp = reduce_mod_p(fq, p);
        if (gcd(fp, fp.derivative()).degree() > 0) continue;
        ++tried;
        auto fac = factor_fp(fp);
        if (best_p == 0 || fac.factors.size() < best.size()) {
            best_p = p;
            best.clear();
            for (auto& [g, e] : fac.factors) best.push_back(g);
        }
        if (best.size() == 1) break;
    }
    if (best.size() == 1) return {f};
    const std::uint64_t p = best_p;
    // Coefficient bound for lc * (any factor).
    Integer bound = zpoly::max_norm(f) * abs(f.back()) * (n + 1);
    bound <<= static_cast<unsigned long>(n);
    Integer m(static_cast<unsigned long>(p));
    while (m <= 2 * bound) m = m * m;
    std::vector<ZPoly> lifted;
    hensel_tree(f, best, p, m, lifted);

    std::vector<ZPoly> out;
    std::vector<std::size_t> T(lifted.size());
    for (std::size_t i = 0; i < T.size(); ++i) T[i] = i;
    ZPoly rest = f;
    std::size_t s = 1;
    while (2 * s <= T.size()) {
        bool found = false;
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        while (true) {
            ZPoly cand{rest.back()};
            for (std::size_t i : idx) cand = mul_m(cand, lifted[T[i]], m);
            cand = zpoly::primitive(symmetric(cand, m));
            ZPoly quotient;
            if (zpoly::degree(cand) > 0 && zpoly::divides(cand, rest, &quotient)) {
                out.push_back(cand);
                rest = zpoly::primitive(quotient);
                std::vector<std::size_t> T2;
                for (std::size_t i = 0; i < T.size(); ++i) {
                    if (std::find(idx.begin(), idx.end(), i) == idx.end()) T2.push_back(T[i]);
                }
                T = std::move(T2);
                found = true;
                break;
            }
            // Next combination.
            std::size_t k = s;
            while (k > 0 && idx[k - 1] == T.size() - s + k - 1) --k;
            if (k == 0) break;
            ++idx[k - 1];
            for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++s;
    }
    if (zpoly::degree(rest) > 0) out.push_back(rest);
    return out;
}

}  // namespace

Factorization<Rational> factor_q(const Poly<Rational>& f) {
    if (f.is_zero()) throw DomainError("factorization of the zero polynomial");
    Factorization<Rational> out{f.lc(), {}};
    if (f.degree() == 0) return out;
    for (const auto& [g, mult] : squarefree_decompose(f).parts) {
        for (const auto& z : factor_squarefree_z(zpoly::from_rational(g))) {
            out.factors.emplace_back(zpoly::to_rational(z), mult);
        }
    }
    // unit = f / prod factors^mult.
    Poly<Rational> prod = Poly<Rational>::constant(Rational(1));
    for (const auto& [g, mult] : out.factors) {
        for (int i = 0; i < mult; ++i) prod = prod * g;
    }
    out.unit = f.lc() / prod.lc();
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return zpoly_less(a.first, b.first); });
    return out;
}

}  // namespace wittlink
