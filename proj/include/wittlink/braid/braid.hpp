#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace wittlink {

/// sigma_index^sign
struct Letter {
    int index = 1;
    int sign = 1;
    friend bool operator==(const Letter&, const Letter&) = default;
};

/// A word in the generators of B_n. The empty word is the identity.
struct BraidWord {
    int n = 2;
    std::vector<Letter> letters;

    static BraidWord identity(int n);
    std::size_t length() const { return letters.size(); }
    bool empty() const { return letters.empty(); }

    /// Signed-integer form, e.g. "1 1 1 -2".
    std::string to_string() const;
    /// Symbolic form with runs collapsed, e.g. "s1^3 s2^-1".
    std::string to_symbolic() const;

    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Accepts "1 1 -2" or "s1^3 s2^-1" (tokens may be mixed and separated by spaces or commas).
/// Without `n` the strand count is max index + 1 (at least 2).
BraidWord parse_braid(const std::string& text, std::optional<int> n = std::nullopt);

long exponent_sum(const BraidWord& w);
BraidWord invert(const BraidWord& w);
/// Inclusion B_n -> B_m.
BraidWord include(const BraidWord& w, int m);
BraidWord concat(const BraidWord& a, const BraidWord& b);
/// g w g^-1 in B_max(n).
BraidWord conjugate(const BraidWord& w, const BraidWord& g);
/// iota(w) sigma_n^sign in B_{n+1}.
BraidWord stabilize(const BraidWord& w, int sign);
/// Inverse of stabilize when the last letter is the only occurrence of sigma_{n-1}.
std::optional<BraidWord> destabilize(const BraidWord& w);
/// Cancels adjacent inverse letters.
BraidWord free_reduce(const BraidWord& w);

/// Strand permutation: perm[i] is the final position of the strand starting at i.
std::vector<int> permutation(const BraidWord& w);
int component_count(const BraidWord& w);

BraidWord random_word(int n, std::size_t length, std::mt19937_64& rng);
/// Random word whose closure is a knot; the length is raised to the nearest feasible one.
BraidWord random_knot_word(int n, std::size_t length, std::mt19937_64& rng);

/// Seeded random sequence of conjugations, (de)stabilizations and relator insertions.
/// The closure of the result is isotopic to the closure of w.
BraidWord random_markov_pair(const BraidWord& w, std::uint64_t seed, int moves);

}  // namespace wittlink
