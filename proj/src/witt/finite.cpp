#include "wittlink/witt/finite.hpp"

#include <set>

#include "wittlink/polyfactor/factor.hpp"
#include "wittlink/witt/normalize.hpp"

namespace wittlink {

bool FiniteWitt::cyclic() const { return p % 4 == 3 && k % 2 == 1; }

int FiniteWitt::element() const {
    if (cyclic()) {
        // m<1> has rank m and discriminant (-1)^(m(m-1)/2).
        if (parity == 0) return disc_square ? 0 : 2;
        return disc_square ? 1 : 3;
    }
    return parity * 2 + (disc_square ? 0 : 1);
}

std::string FiniteWitt::name() const {
    std::string field = k == 1 ? "F_" + std::to_string(p) : "F_" + std::to_string(p) + "^" + std::to_string(k);
    if (cyclic()) return "W(" + field + ")=Z/4:" + std::to_string(element());
    return "W(" + field + ")=Z/2xZ/2:(" + std::to_string(parity) + "," + (disc_square ? "0" : "1") + ")";
}

bool operator<(const FiniteWitt& a, const FiniteWitt& b) {
    return std::tie(a.p, a.k, a.parity, a.disc_square) < std::tie(b.p, b.k, b.parity, b.disc_square);
}

FiniteWitt canonical_fp(const WittClass<PrimeField>& a) {
    const std::uint64_t p = a.ctx.p;
    Zp d(1, p);
    for (const auto& x : a.entries) d *= x;
    const std::size_t m = a.entries.size();
    if ((m * (m - 1) / 2) % 2 == 1) d = -d;
    return FiniteWitt{p, 1, static_cast<int>(m % 2), d.is_square()};
}

WittClass<PrimeField> representative(const PrimeField& ctx, const FiniteWitt& w) {
    const Zp n(static_cast<std::int64_t>(least_nonresidue(ctx.p)), ctx.p);
    if (w.parity == 1) return {ctx, {w.disc_square ? ctx.one() : n}};
    if (w.disc_square) return {ctx, {}};
    return {ctx, {ctx.one(), -n}};
}

FiniteWitt add(const FiniteWitt& a, const FiniteWitt& b) {
    if (a.p != b.p || a.k != b.k) throw DomainError("adding Witt classes over different finite fields");
    // disc(a + b) = disc(a) disc(b) (-1)^(ra rb) for ranks ra, rb.
    bool sq = a.disc_square == b.disc_square;
    if (a.parity == 1 && b.parity == 1) {
        bool minus_one_square = (a.p % 4 == 1) || (a.k % 2 == 0);
        if (!minus_one_square) sq = !sq;
    }
    return FiniteWitt{a.p, a.k, (a.parity + b.parity) % 2, sq};
}

FiniteWitt neg(const FiniteWitt& a) {
    // -<d> = <-d>; rank parity is unchanged and det picks up (-1)^m.
    FiniteWitt r = a;
    bool minus_one_square = (a.p % 4 == 1) || (a.k % 2 == 0);
    if (a.parity == 1 && !minus_one_square) r.disc_square = !r.disc_square;
    return r;
}

int signature(const WittClass<RationalField>& a) {
    int s = 0;
    for (const auto& x : a.entries) s += x.sign();
    return s;
}

namespace {

// Squarefree integer representative n of x modulo squares.
Integer sqfree(const Rational& x) { return square_class_q(x).num(); }

}  // namespace

WittClass<PrimeField> second_residue_p(const WittClass<RationalField>& a, std::uint64_t p) {
    PrimeField f(p);
    WittClass<PrimeField> out{f, {}};
    const Integer pp(static_cast<unsigned long>(p));
    for (const auto& x : a.entries) {
        if (x.is_zero()) throw DomainError("zero entry in a Witt class");
        Integer n = sqfree(x);
        if (n % pp != 0) continue;
        Integer u = n / pp;
        Integer r = u % pp;
        if (r < 0) r += pp;
        out.entries.emplace_back(static_cast<std::int64_t>(r.get_ui()), p);
    }
    return out;
}

int parity_residue_2(const WittClass<RationalField>& a) {
    int c = 0;
    for (const auto& x : a.entries) {
        if (mpz_even_p(sqfree(x).get_mpz_t())) ++c;
    }
    return c % 2;
}

RationalWitt invariants_q(const WittClass<RationalField>& a) {
    RationalWitt out;
    out.signature = signature(a);
    out.parity2 = parity_residue_2(a);
    std::set<Integer> primes;
    for (const auto& x : a.entries) {
        for (const auto& [p, e] : factor_integer(sqfree(x))) {
            if (p != 2) primes.insert(p);
        }
    }
    for (const auto& p : primes) {
        if (!p.fits_ulong_p() || p.get_ui() >= (1UL << 62)) {
            throw DomainError("prime residue field too large: " + p.get_str());
        }
        FiniteWitt w = canonical_fp(second_residue_p(a, p.get_ui()));
        if (!w.is_zero()) out.residues.emplace(p, w);
    }
    return out;
}

bool is_zero(const WittClass<RationalField>& a) { return invariants_q(a).is_zero(); }
bool is_zero(const WittClass<PrimeField>& a) { return canonical_fp(a).is_zero(); }

}  // namespace wittlink
