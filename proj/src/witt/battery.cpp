#include "wittlink/witt/battery.hpp"

#include <set>

#include "wittlink/algebra/laurent.hpp"
#include "wittlink/polyfactor/factor.hpp"
#include "wittlink/polyfactor/roots.hpp"

namespace wittlink {

namespace {

template <class E>
int valuation(Poly<E> f, const Poly<E>& P, Poly<E>* rest) {
    int e = 0;
    for (;;) {
        auto [q, r] = divmod(f, P);
        if (!r.is_zero()) break;
        f = std::move(q);
        ++e;
    }
    *rest = std::move(f);
    return e;
}

template <class E>
Poly<E> disc_mod(const std::vector<Poly<E>>& v, const Poly<E>& P) {
    const E one = scalar_one_like(P.lc());
    Poly<E> d = Poly<E>::constant(one);
    for (const auto& x : v) d = (d * x) % P;
    const std::size_t m = v.size();
    if ((m * (m - 1) / 2) % 2 == 1) d = -d;
    return d;
}

template <class C>
std::vector<Poly<typename C::Elem>> irreducible_support(const WittClass<FunctionField<C>>& a) {
    using E = typename C::Elem;
    std::vector<Poly<E>> out;
    auto add = [&](const Poly<E>& f) {
        if (f.degree() <= 0) return;
        for (const auto& [g, m] : factor(f).factors) {
            if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
        }
    };
    for (const auto& x : a.entries) {
        add(x.num());
        add(x.den());
    }
    return out;
}

}  // namespace

template <class C>
std::vector<Poly<typename C::Elem>> second_residue_P(const WittClass<FunctionField<C>>& a,
                                                      const Poly<typename C::Elem>& P) {
    using E = typename C::Elem;
    if (a.ctx.involutive()) throw DomainError("residues are taken over the fixed field");
    if (P.degree() < 1 || factor(P).factors.size() != 1 || factor(P).factors[0].second != 1) {
        throw DomainError("residue polynomial must be irreducible");
    }
    std::vector<Poly<E>> out;
    for (const auto& x : a.entries) {
        if (x.is_zero()) throw DomainError("zero entry in a Witt class");
        Poly<E> n, d;
        const int e = valuation(x.num(), P, &n) - valuation(x.den(), P, &d);
        if (e % 2 == 0) continue;
        // v = n/d mod P.
        auto xg = xgcd(d % P, P);
        out.push_back((n * xg.s) % P);
    }
    return out;
}

template std::vector<Poly<Rational>> second_residue_P(const WittClass<QT>&, const Poly<Rational>&);
template std::vector<Poly<Zp>> second_residue_P(const WittClass<FpT>&, const Poly<Zp>&);

bool RationalResidue::trivial() const {
    if (parity != 0 || norm_disc != 1) return false;
    for (int s : signatures) {
        if (s != 0) return false;
    }
    return true;
}

std::map<PolyKey, RationalResidue> residues_qu(const WittClass<QT>& symmetric) {
    const WittClass<QT> a = reduce(symmetric);
    std::map<PolyKey, RationalResidue> out;
    for (const auto& P : irreducible_support(a)) {
        auto v = second_residue_P(a, P);
        if (v.empty()) continue;
        RationalResidue r;
        r.parity = static_cast<int>(v.size() % 2);
        Poly<Rational> d = disc_mod(v, P);
        Rational norm = resultant(P, d);
        for (int i = 0; i < d.degree(); ++i) norm = norm / P.lc();
        r.norm_disc = square_class_q(norm).num();
        for (const auto& iv : isolate_real_roots(P)) {
            AlgebraicReal alpha(P, iv);
            int s = 0;
            for (const auto& x : v) s += alpha.sign_of(x);
            r.signatures.push_back(s);
        }
        if (!r.trivial()) out.emplace(P.to_string("u"), r);
    }
    return out;
}

std::map<PolyKey, FiniteWitt> residues_fpu(const WittClass<FpT>& symmetric) {
    const WittClass<FpT> a = reduce(symmetric);
    const std::uint64_t p = a.ctx.base.p;
    std::map<PolyKey, FiniteWitt> out;
    for (const auto& P : irreducible_support(a)) {
        auto v = second_residue_P(a, P);
        if (v.empty()) continue;
        Poly<Zp> d = disc_mod(v, P);
        Integer q = 1;
        for (int i = 0; i < P.degree(); ++i) q *= static_cast<unsigned long>(p);
        const bool sq = powmod(d, (q - 1) / 2, P) == Poly<Zp>::constant(Zp(1, p));
        FiniteWitt w{p, P.degree(), static_cast<int>(v.size() % 2), sq};
        if (!w.is_zero()) out.emplace(P.to_string("u"), w);
    }
    return out;
}

template <class C>
WittClass<FunctionField<C>> transfer_class(const WittClass<FunctionField<C>>& a) {
    using K = FunctionField<C>;
    if (!a.ctx.involutive()) throw DomainError("transfer needs a class over F(t) with t -> 1/t");
    const K small(a.ctx.base, false, "u");
    const auto u = small.gen();
    const auto w = small.from_int(4) - u * u;
    WittClass<K> out{small, {}};
    for (const auto& x : a.entries) {
        auto y = to_fixed_field(small, x);
        out.entries.push_back(y);
        out.entries.push_back(y * w);
    }
    return out;
}

template WittClass<QT> transfer_class(const WittClass<QT>&);
template WittClass<FpT> transfer_class(const WittClass<FpT>&);

namespace {

template <class C>
Palindromic<typename C::Elem> signed_det_palindromic(const WittClass<FunctionField<C>>& a) {
    auto d = a.ctx.one();
    for (const auto& x : a.entries) d = d * x;
    const std::size_t m = a.entries.size();
    if ((m * (m - 1) / 2) % 2 == 1) d = -d;
    return minimal_palindromic(d);
}

}  // namespace

bool QTBattery::trivial() const {
    return parity == 0 && det.d == 0 && det.D == Poly<Rational>::constant(Rational(1)) &&
           signature.breakpoints.empty() && signature.values == std::vector<int>{0} && residues.empty();
}

bool FpTBattery::trivial() const {
    return parity == 0 && det.d == 0 && det.D.degree() == 0 && det.D[0].value() == 1 && residues.empty();
}

QTBattery battery(const WittClass<QT>& a0) {
    const WittClass<QT> a = reduce(a0);
    QTBattery b;
    b.parity = static_cast<int>(a.rank() % 2);
    b.det = signed_det_palindromic(a);
    b.signature = signature_function(a);
    b.residues = residues_qu(transfer_class(a));
    return b;
}

FpTBattery battery(const WittClass<FpT>& a0) {
    const WittClass<FpT> a = reduce(a0);
    FpTBattery b;
    b.parity = static_cast<int>(a.rank() % 2);
    b.det = signed_det_palindromic(a);
    b.residues = residues_fpu(transfer_class(a));
    return b;
}

ZeroVerdict zero_verdict(const WittClass<QT>& a) {
    if (reduce(a).empty()) return ZeroVerdict::Zero;
    return battery(a).trivial() ? ZeroVerdict::ZeroByBattery : ZeroVerdict::Nonzero;
}

ZeroVerdict zero_verdict(const WittClass<FpT>& a) {
    if (reduce(a).empty()) return ZeroVerdict::Zero;
    return battery(a).trivial() ? ZeroVerdict::ZeroByBattery : ZeroVerdict::Nonzero;
}

std::string to_string(ZeroVerdict v) {
    switch (v) {
        case ZeroVerdict::Zero:
            return "zero";
        case ZeroVerdict::Nonzero:
            return "nonzero";
        case ZeroVerdict::ZeroByBattery:
            return "zero-by-battery";
    }
    return "";
}

}  // namespace wittlink
