#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "wittlink/algebra/field_config.hpp"
#include "wittlink/algebra/fields.hpp"
#include "wittlink/braid/braid.hpp"
#include "wittlink/witt/signature.hpp"

namespace wittlink::cli {

inline constexpr const char* kSchema = "wittlink.report";
inline constexpr int kSchemaVersion = 1;

/// Prints num/den as D(t)/t^d when den is a monomial, else as (num)/(den).
template <class E>
std::string format_ratfunc(const RatFunc<E>& x, const std::string& var = "t") {
    const auto& den = x.den();
    if (den.degree() <= 0) return x.num().to_string(var);
    bool monomial = true;
    for (int i = 0; i < den.degree(); ++i) {
        if (!scalar_is_zero(den.coeff(static_cast<std::size_t>(i)))) monomial = false;
    }
    const std::string n = "(" + x.num().to_string(var) + ")";
    if (!monomial) return n + "/(" + den.to_string(var) + ")";
    return n + "/" + var + (den.degree() == 1 ? "" : "^" + std::to_string(den.degree()));
}

/// Inverse of format_ratfunc over Q: "P", "(P)/t^d" or "(P)/(Q)".
RatFunc<Rational> parse_ratfunc(const std::string& text, const std::string& var = "t");

struct BreakpointReport {
    std::string poly;  // minimal polynomial in u = t + 1/t
    std::string lo, hi;
    double theta_over_pi = 0;
    friend bool operator==(const BreakpointReport&, const BreakpointReport&) = default;
};

struct SignatureReport {
    std::vector<BreakpointReport> breakpoints;  // by increasing theta in (0, pi)
    std::vector<int> values;                    // values[j] on the arc before breakpoint j
    friend bool operator==(const SignatureReport&, const SignatureReport&) = default;
};

SignatureReport make_signature_report(const SignatureStepFunction& s);

struct ResidueReport {
    std::string poly;
    std::string value;  // summary of the residue class
    friend bool operator==(const ResidueReport&, const ResidueReport&) = default;
};

struct WeilReport {
    int signature = 0;
    std::string radicand;
    long exponent_sum = 0;
    friend bool operator==(const WeilReport&, const WeilReport&) = default;
};

/// Result for one field; the optional members are filled where they make sense.
struct FieldReport {
    std::string field;
    std::string status = "ok";  // "ok" or "degenerate"
    std::string message;
    int strands = 0;
    std::size_t raw_rank = 0;
    std::vector<std::string> entries;
    std::string verdict;
    std::optional<int> parity;
    std::optional<std::string> signed_det;
    std::optional<SignatureReport> signature_function;
    std::vector<ResidueReport> residues;
    std::optional<std::string> alexander;
    std::optional<WeilReport> weil;
    std::optional<int> signature;
    std::optional<int> parity2;
    std::optional<std::string> canonical;
    friend bool operator==(const FieldReport&, const FieldReport&) = default;
};

struct Report {
    std::string word;
    std::string symbolic;
    int n = 2;
    long exponent_sum = 0;
    std::vector<FieldReport> fields;
    double timing_ms = 0;
    friend bool operator==(const Report&, const Report&) = default;
};

FieldReport compute_field(const BraidWord& w, const FieldConfig& cfg);
Report make_report(const BraidWord& w, const std::vector<FieldConfig>& fields);

void to_json(nlohmann::json& j, const BreakpointReport& b);
void from_json(const nlohmann::json& j, BreakpointReport& b);
void to_json(nlohmann::json& j, const SignatureReport& s);
void from_json(const nlohmann::json& j, SignatureReport& s);
void to_json(nlohmann::json& j, const ResidueReport& r);
void from_json(const nlohmann::json& j, ResidueReport& r);
void to_json(nlohmann::json& j, const WeilReport& w);
void from_json(const nlohmann::json& j, WeilReport& w);
void to_json(nlohmann::json& j, const FieldReport& f);
void from_json(const nlohmann::json& j, FieldReport& f);
void to_json(nlohmann::json& j, const Report& r);
void from_json(const nlohmann::json& j, Report& r);

/// {"schema", "version", "reports": [...]}
nlohmann::json report_document(const std::vector<Report>& reports);
std::vector<Report> parse_report_document(const nlohmann::json& doc);

std::string format_text(const Report& r);

/// Self-contained SVG 1.1 disc: sectors for theta in (-pi, pi] colored by value.
std::string camembert_svg(const SignatureReport& s);

}  // namespace wittlink::cli
