#pragma once

#include <cstdint>
#include <string>

namespace wittlink {

/// Which field-with-involution the Burau machinery runs over, and the value of t.
enum class FieldTag {
    QT,          ///< Q(t), t -> 1/t, alpha(t) = t
    Q_MINUS1,    ///< Q, trivial involution, alpha(t) = -1
    FP_MINUS1,   ///< F_p, trivial involution, alpha(t) = -1
    FPT,         ///< F_p(t), t -> 1/t, alpha(t) = t
    FP_SPECIAL,  ///< F_p, real part over F_p(u) specialized at u = u0
};

struct FieldConfig {
    FieldTag tag = FieldTag::QT;
    std::uint64_t p = 0;
    std::uint64_t u0 = 0;

    static FieldConfig qt() { return {FieldTag::QT, 0, 0}; }
    static FieldConfig q() { return {FieldTag::Q_MINUS1, 0, 0}; }
    static FieldConfig fp(std::uint64_t p);
    static FieldConfig fpt(std::uint64_t p);
    static FieldConfig fq(std::uint64_t p, std::int64_t u0);

    /// Accepts qt | q | fp:<p> | fpt:<p> | fq:<p>:<u0>.
    static FieldConfig parse(const std::string& text);
    std::string to_string() const;

    friend bool operator==(const FieldConfig&, const FieldConfig&) = default;
};

}  // namespace wittlink
