#include "wittlink/algebra/poly.hpp"

#include <cctype>

#include "wittlink/algebra/zpoly.hpp"

namespace wittlink {

namespace zpoly {

void trim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

Integer content(const ZPoly& f) {
    Integer g = 0;
    for (const auto& a : f) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly primitive(const ZPoly& f) {
    if (f.empty()) return f;
    Integer c = content(f);
    if (f.back() < 0) c = -c;
    ZPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) mpz_divexact(r[i].get_mpz_t(), f[i].get_mpz_t(), c.get_mpz_t());
    return r;
}

ZPoly from_rational(const Poly<Rational>& f) {
    if (f.is_zero()) return {};
    Integer l = 1;
    for (const auto& a : f.coeffs()) {
        Integer d = a.den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    ZPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[i].num() * (l / f[i].den());
    return primitive(r);
}

Poly<Rational> to_rational(const ZPoly& f) {
    std::vector<Rational> v;
    v.reserve(f.size());
    for (const auto& a : f) v.emplace_back(a);
    return Poly<Rational>(std::move(v));
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    trim(r);
    return r;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
    ZPoly r = a;
    if (b.size() > r.size()) r.resize(b.size(), Integer(0));
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

ZPoly prem(const ZPoly& a, const ZPoly& b) {
    ZPoly r = a;
    const int db = degree(b);
    const Integer& lb = b.back();
    while (degree(r) >= db && !r.empty()) {
        const int shift = degree(r) - db;
        Integer lr = r.back();
        for (auto& x : r) x *= lb;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(shift + j)] -= lr * b[static_cast<std::size_t>(j)];
        trim(r);
    }
    return r;
}

bool divides(const ZPoly& b, const ZPoly& a, ZPoly* quotient) {
    if (b.empty()) return false;
    if (a.empty()) {
        if (quotient) quotient->clear();
        return true;
    }
    if (degree(a) < degree(b)) return false;
    ZPoly r = a;
    ZPoly q(static_cast<std::size_t>(degree(a) - degree(b) + 1), Integer(0));
    const int db = degree(b);
    for (int i = degree(a); i >= db; --i) {
        const auto ui = static_cast<std::size_t>(i);
        if (r[ui] == 0) continue;
        if (!mpz_divisible_p(r[ui].get_mpz_t(), b.back().get_mpz_t())) return false;
        Integer f = r[ui] / b.back();
        q[static_cast<std::size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j) mpz_submul(r[static_cast<std::size_t>(i - db + j)].get_mpz_t(), f.get_mpz_t(), b[static_cast<std::size_t>(j)].get_mpz_t());
    }
    trim(r);
    if (!r.empty()) return false;
    if (quotient) {
        trim(q);
        *quotient = std::move(q);
    }
    return true;
}

ZPoly gcd(ZPoly a, ZPoly b) {
    a = primitive(a);
    b = primitive(b);
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (degree(a) < degree(b)) std::swap(a, b);
    while (!b.empty()) {
        if (degree(b) == 0) return {Integer(1)};
        ZPoly r = primitive(prem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return primitive(a);
}

Integer max_norm(const ZPoly& f) {
    Integer m = 0;
    for (const auto& a : f) {
        Integer x = ::abs(a);
        if (x > m) m = x;
    }
    return m;
}

}  // namespace zpoly

Poly<Rational> gcd_rational(const Poly<Rational>& a, const Poly<Rational>& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.degree() == 0 || b.degree() == 0) return Poly<Rational>::constant(Rational(1));
    return zpoly::to_rational(zpoly::gcd(zpoly::from_rational(a), zpoly::from_rational(b))).monic();
}

Poly<Zp> reduce_mod_p(const Poly<Rational>& f, std::uint64_t p) {
    std::vector<Zp> v;
    v.reserve(f.size());
    const Integer P(static_cast<unsigned long>(p));
    for (const auto& a : f.coeffs()) {
        Integer n = a.num() % P, d = a.den() % P;
        if (d == 0) throw DivisionByZero("denominator vanishes mod p");
        if (n < 0) n += P;
        if (d < 0) d += P;
        v.push_back(Zp(static_cast<std::int64_t>(n.get_ui()), p) / Zp(static_cast<std::int64_t>(d.get_ui()), p));
    }
    return Poly<Zp>(std::move(v));
}

namespace {

struct PolyLexer {
    const std::string& s;
    std::size_t i = 0;
    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip();
        return i >= s.size();
    }
};

}  // namespace

Poly<Rational> parse_poly_rational(const std::string& text, const std::string& var) {
    PolyLexer lx{text};
    Poly<Rational> result;
    if (lx.eof()) throw ParseError("empty polynomial");
    bool first = true;
    while (!lx.eof()) {
        int sign = 1;
        lx.skip();
        if (lx.s[lx.i] == '+' || lx.s[lx.i] == '-') {
            sign = lx.s[lx.i] == '-' ? -1 : 1;
            ++lx.i;
        } else if (!first) {
            throw ParseError("expected '+' or '-' at position " + std::to_string(lx.i) + " in '" + text + "'");
        }
        first = false;
        lx.skip();
        Rational coef(1);
        bool have_coef = false;
        std::size_t start = lx.i;
        while (lx.i < lx.s.size() && (std::isdigit(static_cast<unsigned char>(lx.s[lx.i])) || lx.s[lx.i] == '/')) ++lx.i;
        if (lx.i > start) {
            coef = Rational::parse(lx.s.substr(start, lx.i - start));
            have_coef = true;
        }
        lx.skip();
        std::size_t exponent = 0;
        if (have_coef && lx.i < lx.s.size() && lx.s[lx.i] == '*') {
            ++lx.i;
            lx.skip();
            if (lx.s.compare(lx.i, var.size(), var) != 0) throw ParseError("expected '" + var + "' after '*' in '" + text + "'");
        }
        if (lx.s.compare(lx.i, var.size(), var) == 0) {
            lx.i += var.size();
            exponent = 1;
            lx.skip();
            if (lx.i < lx.s.size() && lx.s[lx.i] == '^') {
                ++lx.i;
                std::size_t e0 = lx.i;
                while (lx.i < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.i]))) ++lx.i;
                if (e0 == lx.i) throw ParseError("missing exponent in '" + text + "'");
                exponent = std::stoul(lx.s.substr(e0, lx.i - e0));
            }
        } else if (!have_coef) {
            throw ParseError("malformed term at position " + std::to_string(lx.i) + " in '" + text + "'");
        }
        result += Poly<Rational>::monomial(sign < 0 ? -coef : coef, exponent);
    }
    return result;
}

}  // namespace wittlink
