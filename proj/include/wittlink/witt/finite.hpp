#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "wittlink/algebra/fields.hpp"
#include "wittlink/forms/witt_class.hpp"

namespace wittlink {

/// Complete invariant of an element of W(F_q), q = p^k odd: rank parity and whether the
/// discriminant (-1)^(m(m-1)/2) det is a square. W(F_q) is Z/4 when q = 3 mod 4 and
/// Z/2 x Z/2 otherwise.
struct FiniteWitt {
    std::uint64_t p = 3;
    int k = 1;
    int parity = 0;
    bool disc_square = true;

    bool is_zero() const { return parity == 0 && disc_square; }
    bool cyclic() const;  // q = 3 mod 4
    /// For the cyclic case the element m of Z/4 with value m<1>; otherwise (parity, disc bit).
    int element() const;
    std::string name() const;
    friend bool operator==(const FiniteWitt& a, const FiniteWitt& b) {
        return a.p == b.p && a.k == b.k && a.parity == b.parity && a.disc_square == b.disc_square;
    }
    friend bool operator<(const FiniteWitt& a, const FiniteWitt& b);
};

FiniteWitt canonical_fp(const WittClass<PrimeField>& a);
/// Shortest diagonal representative: [], [d], or [1, -n] for n the least non-residue.
WittClass<PrimeField> representative(const PrimeField& ctx, const FiniteWitt& w);
FiniteWitt add(const FiniteWitt& a, const FiniteWitt& b);
FiniteWitt neg(const FiniteWitt& a);

/// Complete invariants of a class in W(Q): signature, residues at odd primes (nonzero ones
/// only), and the 2-adic parity residue.
struct RationalWitt {
    int signature = 0;
    std::map<Integer, FiniteWitt> residues;
    int parity2 = 0;

    bool is_zero() const { return signature == 0 && residues.empty() && parity2 == 0; }
    friend bool operator==(const RationalWitt& a, const RationalWitt& b) {
        return a.signature == b.signature && a.residues == b.residues && a.parity2 == b.parity2;
    }
};

int signature(const WittClass<RationalField>& a);
/// Second residue at an odd prime p: entries p^e u with e odd contribute <u mod p>.
WittClass<PrimeField> second_residue_p(const WittClass<RationalField>& a, std::uint64_t p);
/// Number of entries with odd 2-adic valuation, mod 2.
int parity_residue_2(const WittClass<RationalField>& a);
RationalWitt invariants_q(const WittClass<RationalField>& a);
bool is_zero(const WittClass<RationalField>& a);
bool is_zero(const WittClass<PrimeField>& a);

}  // namespace wittlink
