#include "wittlink/braid/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "wittlink/algebra/errors.hpp"

namespace wittlink {

namespace {

long to_long(const std::string& s, const std::string& token) {
    long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError("malformed braid token '" + token + "'");
    }
    return v;
}

void push_power(std::vector<Letter>& out, int& max_index, long index, long power, const std::string& token) {
    if (index == 0) throw ParseError("generator index 0 in token '" + token + "'");
    if (index < 0) throw ParseError("negative generator index in token '" + token + "'");
    if (index > 1000000 || power > 1000000 || power < -1000000) {
        throw ParseError("braid token '" + token + "' is out of range");
    }
    max_index = std::max(max_index, static_cast<int>(index));
    const int sign = power < 0 ? -1 : 1;
    for (long k = 0; k < std::abs(power); ++k) out.push_back({static_cast<int>(index), sign});
}

void parse_token(const std::string& tok, std::vector<Letter>& out, int& max_index) {
    if (tok[0] == 's' || tok[0] == 'S') {
        const auto caret = tok.find('^');
        const std::string idx = tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
        const long i = to_long(idx, tok);
        const long e = caret == std::string::npos ? 1 : to_long(tok.substr(caret + 1), tok);
        push_power(out, max_index, i, e, tok);
        return;
    }
    const long v = to_long(tok[0] == '+' ? tok.substr(1) : tok, tok);
    push_power(out, max_index, std::abs(v), v < 0 ? -1 : 1, tok);
}

}  // namespace

BraidWord BraidWord::identity(int n) {
    if (n < 2) throw DomainError("braid groups need at least 2 strands");
    return {n, {}};
}

std::string BraidWord::to_string() const {
    std::string s;
    for (const auto& l : letters) {
        if (!s.empty()) s += ' ';
        s += std::to_string(l.sign * l.index);
    }
    return s;
}

std::string BraidWord::to_symbolic() const {
    std::string s;
    for (std::size_t i = 0; i < letters.size();) {
        std::size_t j = i;
        while (j < letters.size() && letters[j] == letters[i]) ++j;
        const long e = static_cast<long>(j - i) * letters[i].sign;
        if (!s.empty()) s += ' ';
        s += "s" + std::to_string(letters[i].index);
        if (e != 1) s += "^" + std::to_string(e);
        i = j;
    }
    return s;
}

BraidWord parse_braid(const std::string& text, std::optional<int> n) {
    std::vector<Letter> letters;
    int max_index = 0;
    std::string tok;
    auto flush = [&] {
        if (!tok.empty()) parse_token(tok, letters, max_index);
        tok.clear();
    };
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
            flush();
        } else if ((c == 's' || c == 'S') && !tok.empty()) {
            // "s1s2" without separators.
            flush();
            tok += c;
        } else {
            tok += c;
        }
    }
    flush();
    const int strands = n.value_or(std::max(2, max_index + 1));
    if (strands < 2) throw ParseError("strand count must be at least 2, got " + std::to_string(strands));
    if (max_index >= strands) {
        throw ParseError("generator s" + std::to_string(max_index) + " needs at least " + std::to_string(max_index + 1) +
                         " strands, got " + std::to_string(strands));
    }
    return {strands, std::move(letters)};
}

long exponent_sum(const BraidWord& w) {
    long s = 0;
    for (const auto& l : w.letters) s += l.sign;
    return s;
}

BraidWord invert(const BraidWord& w) {
    BraidWord r{w.n, {}};
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r.letters.push_back({it->index, -it->sign});
    return r;
}

BraidWord include(const BraidWord& w, int m) {
    if (m < w.n) throw DomainError("cannot include B_" + std::to_string(w.n) + " into B_" + std::to_string(m));
    return {m, w.letters};
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
    BraidWord r = include(a, std::max(a.n, b.n));
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return r;
}

BraidWord conjugate(const BraidWord& w, const BraidWord& g) { return concat(concat(g, w), invert(g)); }

BraidWord stabilize(const BraidWord& w, int sign) {
    BraidWord r = include(w, w.n + 1);
    r.letters.push_back({w.n, sign < 0 ? -1 : 1});
    return r;
}

std::optional<BraidWord> destabilize(const BraidWord& w) {
    if (w.n < 3 || w.letters.empty() || w.letters.back().index != w.n - 1) return std::nullopt;
    for (std::size_t i = 0; i + 1 < w.letters.size(); ++i) {
        if (w.letters[i].index == w.n - 1) return std::nullopt;
    }
    BraidWord r{w.n - 1, w.letters};
    r.letters.pop_back();
    return r;
}

BraidWord free_reduce(const BraidWord& w) {
    BraidWord r{w.n, {}};
    for (const auto& l : w.letters) {
        if (!r.letters.empty() && r.letters.back().index == l.index && r.letters.back().sign == -l.sign) {
            r.letters.pop_back();
        } else {
            r.letters.push_back(l);
        }
    }
    return r;
}

std::vector<int> permutation(const BraidWord& w) {
    // pos[s] = current position of strand s.
    std::vector<int> pos(static_cast<std::size_t>(w.n)), at(static_cast<std::size_t>(w.n));
    std::iota(pos.begin(), pos.end(), 0);
    std::iota(at.begin(), at.end(), 0);
    for (const auto& l : w.letters) {
        const int a = l.index - 1, b = l.index;
        std::swap(at[a], at[b]);
        pos[at[a]] = a;
        pos[at[b]] = b;
    }
    return pos;
}

int component_count(const BraidWord& w) {
    const auto p = permutation(w);
    std::vector<bool> seen(p.size(), false);
    int c = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        ++c;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) seen[j] = true;
    }
    return c;
}

BraidWord random_word(int n, std::size_t length, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> idx(1, n - 1), sgn(0, 1);
    BraidWord w = BraidWord::identity(n);
    for (std::size_t i = 0; i < length; ++i) w.letters.push_back({idx(rng), sgn(rng) ? 1 : -1});
    return w;
}

BraidWord random_knot_word(int n, std::size_t length, std::mt19937_64& rng) {
    // An n-cycle has the parity of n - 1, and so must the length.
    if (length < static_cast<std::size_t>(n - 1)) length = static_cast<std::size_t>(n - 1);
    if ((length + static_cast<std::size_t>(n) - 1) % 2 == 1) ++length;
    for (;;) {
        BraidWord w = random_word(n, length, rng);
        if (component_count(w) == 1) return w;
    }
}

BraidWord random_markov_pair(const BraidWord& w, std::uint64_t seed, int moves) {
    std::mt19937_64 rng(seed);
    BraidWord cur = w;
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    for (int m = 0; m < moves; ++m) {
        switch (pick(0, 5)) {
            case 0: {  // conjugation by a generator
                Letter g{pick(1, cur.n - 1), pick(0, 1) ? 1 : -1};
                cur = conjugate(cur, BraidWord{cur.n, {g}});
                break;
            }
            case 1:  // cyclic rotation
                if (!cur.letters.empty()) std::rotate(cur.letters.begin(), cur.letters.begin() + 1, cur.letters.end());
                break;
            case 2:
                if (cur.n < 5) {
                    cur = stabilize(cur, pick(0, 1) ? 1 : -1);
                    break;
                }
                [[fallthrough]];
            case 3:
                if (auto d = destabilize(cur)) {
                    cur = *d;
                } else if (cur.n < 6) {
                    cur = stabilize(cur, pick(0, 1) ? 1 : -1);
                }
                break;
            case 4: {  // relator insertion
                std::vector<Letter> rel;
                const int s = pick(0, 1) ? 1 : -1;
                if (cur.n >= 4 && pick(0, 1)) {
                    // s_i s_j s_i^-1 s_j^-1 with |i - j| >= 2
                    const int i = pick(1, cur.n - 3);
                    const int j = pick(i + 2, cur.n - 1);
                    rel = {{i, s}, {j, 1}, {i, -s}, {j, -1}};
                } else if (cur.n >= 3) {
                    // s_i s_{i+1} s_i (s_{i+1} s_i s_{i+1})^-1
                    const int i = pick(1, cur.n - 2);
                    rel = {{i, 1}, {i + 1, 1}, {i, 1}, {i + 1, -1}, {i, -1}, {i + 1, -1}};
                } else {
                    rel = {{1, s}, {1, -s}};
                }
                const auto at = static_cast<std::ptrdiff_t>(pick(0, static_cast<int>(cur.letters.size())));
                cur.letters.insert(cur.letters.begin() + at, rel.begin(), rel.end());
                break;
            }
            default:
                cur = free_reduce(cur);
                break;
        }
    }
    return cur;
}

}  // namespace wittlink
