#pragma once

#include <map>
#include <string>
#include <vector>

#include "wittlink/witt/finite.hpp"
#include "wittlink/witt/normalize.hpp"
#include "wittlink/witt/signature.hpp"
#include "wittlink/witt/witt.hpp"

namespace wittlink {

/// Residue at an irreducible P over Q(u), summarized: rank parity, the square class of the
/// norm (down to Q) of the discriminant, and signatures at the real roots of P.
struct RationalResidue {
    int parity = 0;
    Integer norm_disc = 1;
    std::vector<int> signatures;

    bool trivial() const;
    friend bool operator==(const RationalResidue& a, const RationalResidue& b) {
        return a.parity == b.parity && a.norm_disc == b.norm_disc && a.signatures == b.signatures;
    }
};

using PolyKey = std::string;  // printed canonical form of an irreducible polynomial

/// Residue entries of a symmetric class over F(u) at the irreducible P: entries P^e v with
/// e odd contribute <v mod P>. P must be irreducible (primitive over Q, monic over F_p).
template <class C>
std::vector<Poly<typename C::Elem>> second_residue_P(const WittClass<FunctionField<C>>& a,
                                                      const Poly<typename C::Elem>& P);

std::map<PolyKey, RationalResidue> residues_qu(const WittClass<QT>& symmetric);
std::map<PolyKey, FiniteWitt> residues_fpu(const WittClass<FpT>& symmetric);

/// The restriction-of-scalars image over F(u) of a hermitian class over F(t): each
/// <a> becomes <a, a(4 - u^2)>.
template <class C>
WittClass<FunctionField<C>> transfer_class(const WittClass<FunctionField<C>>& a);

struct QTBattery {
    int parity = 0;
    Palindromic<Rational> det;
    SignatureStepFunction signature;
    std::map<PolyKey, RationalResidue> residues;

    bool trivial() const;
    friend bool operator==(const QTBattery& a, const QTBattery& b) {
        return a.parity == b.parity && a.det == b.det && a.signature == b.signature && a.residues == b.residues;
    }
};

struct FpTBattery {
    int parity = 0;
    Palindromic<Zp> det;
    std::map<PolyKey, FiniteWitt> residues;

    bool trivial() const;
    friend bool operator==(const FpTBattery& a, const FpTBattery& b) {
        return a.parity == b.parity && a.det == b.det && a.residues == b.residues;
    }
};

QTBattery battery(const WittClass<QT>& a);
FpTBattery battery(const WittClass<FpT>& a);
inline RationalWitt battery(const WittClass<RationalField>& a) { return invariants_q(a); }
inline FiniteWitt battery(const WittClass<PrimeField>& a) { return canonical_fp(a); }

enum class ZeroVerdict { Zero, Nonzero, ZeroByBattery };

ZeroVerdict zero_verdict(const WittClass<QT>& a);
ZeroVerdict zero_verdict(const WittClass<FpT>& a);

std::string to_string(ZeroVerdict v);

}  // namespace wittlink
