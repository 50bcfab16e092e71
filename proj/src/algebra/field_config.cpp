#include "wittlink/algebra/field_config.hpp"

#include <charconv>
#include <vector>

#include "wittlink/algebra/errors.hpp"
#include "wittlink/algebra/prime_field.hpp"

namespace wittlink {

namespace {

std::uint64_t checked_prime(std::uint64_t p) {
    if (p == 2 || !is_prime_u64(p) || p >= (1ULL << 62)) {
        throw ParseError("field modulus must be an odd prime below 2^62, got " + std::to_string(p));
    }
    return p;
}

std::int64_t parse_int(const std::string& s, const std::string& whole) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw ParseError("malformed number '" + s + "' in field descriptor '" + whole + "'");
    }
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

}  // namespace

FieldConfig FieldConfig::fp(std::uint64_t p) { return {FieldTag::FP_MINUS1, checked_prime(p), 0}; }
FieldConfig FieldConfig::fpt(std::uint64_t p) { return {FieldTag::FPT, checked_prime(p), 0}; }

FieldConfig FieldConfig::fq(std::uint64_t p, std::int64_t u0) {
    checked_prime(p);
    std::int64_t r = u0 % static_cast<std::int64_t>(p);
    if (r < 0) r += static_cast<std::int64_t>(p);
    if (r == 0) throw DegenerateError("specialization value u0 must be nonzero mod p");
    return {FieldTag::FP_SPECIAL, p, static_cast<std::uint64_t>(r)};
}

FieldConfig FieldConfig::parse(const std::string& text) {
    auto parts = split(text, ':');
    const std::string& head = parts[0];
    if (head == "qt" && parts.size() == 1) return qt();
    if (head == "q" && parts.size() == 1) return q();
    if (head == "fp" && parts.size() == 2) {
        auto p = parse_int(parts[1], text);
        if (p < 0) throw ParseError("negative modulus in '" + text + "'");
        return fp(static_cast<std::uint64_t>(p));
    }
    if (head == "fpt" && parts.size() == 2) {
        auto p = parse_int(parts[1], text);
        if (p < 0) throw ParseError("negative modulus in '" + text + "'");
        return fpt(static_cast<std::uint64_t>(p));
    }
    if (head == "fq" && parts.size() == 3) {
        auto p = parse_int(parts[1], text);
        if (p < 0) throw ParseError("negative modulus in '" + text + "'");
        return fq(static_cast<std::uint64_t>(p), parse_int(parts[2], text));
    }
    throw ParseError("unknown field descriptor '" + text + "' (expected qt, q, fp:<p>, fpt:<p> or fq:<p>:<u0>)");
}

std::string FieldConfig::to_string() const {
    switch (tag) {
        case FieldTag::QT: return "qt";
        case FieldTag::Q_MINUS1: return "q";
        case FieldTag::FP_MINUS1: return "fp:" + std::to_string(p);
        case FieldTag::FPT: return "fpt:" + std::to_string(p);
        case FieldTag::FP_SPECIAL: return "fq:" + std::to_string(p) + ":" + std::to_string(u0);
    }
    return "?";
}

}  // namespace wittlink
