#include "wittlink/cli/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "wittlink/algebra/errors.hpp"
#include "wittlink/burau/burau.hpp"
#include "wittlink/invariants/invariants.hpp"
#include "wittlink/witt/battery.hpp"

namespace wittlink::cli {

using nlohmann::json;

RatFunc<Rational> parse_ratfunc(const std::string& text, const std::string& var) {
    auto trim = [](std::string s) {
        const auto a = s.find_first_not_of(" \t");
        if (a == std::string::npos) return std::string();
        return s.substr(a, s.find_last_not_of(" \t") - a + 1);
    };
    const std::string s = trim(text);
    if (s.empty()) throw ParseError("empty rational function");
    if (s.front() != '(') return RatFunc<Rational>(parse_poly_rational(s, var), Poly<Rational>::constant(Rational(1)));
    const auto close = s.find(')');
    if (close == std::string::npos) throw ParseError("unbalanced parenthesis in '" + text + "'");
    auto num = parse_poly_rational(s.substr(1, close - 1), var);
    std::string rest = trim(s.substr(close + 1));
    if (rest.empty()) return RatFunc<Rational>(num, Poly<Rational>::constant(Rational(1)));
    if (rest.front() != '/') throw ParseError("expected '/' in '" + text + "'");
    rest = trim(rest.substr(1));
    Poly<Rational> den;
    if (!rest.empty() && rest.front() == '(') {
        if (rest.back() != ')') throw ParseError("unbalanced parenthesis in '" + text + "'");
        den = parse_poly_rational(rest.substr(1, rest.size() - 2), var);
    } else {
        den = parse_poly_rational(rest, var);
    }
    if (den.is_zero()) throw DivisionByZero("zero denominator in '" + text + "'");
    return RatFunc<Rational>(num, den);
}

SignatureReport make_signature_report(const SignatureStepFunction& s) {
    SignatureReport out;
    out.values = s.values;
    for (const auto& b : s.breakpoints) {
        AlgebraicReal u = b.value();
        const double theta = std::acos(std::clamp(u.to_double() / 2.0, -1.0, 1.0)) / M_PI;
        out.breakpoints.push_back(
            {b.poly.to_string("u"), b.interval.lo.to_string(), b.interval.hi.to_string(), std::round(theta * 1e9) / 1e9});
    }
    return out;
}

namespace {

std::string verdict(bool zero) { return zero ? "zero" : "nonzero"; }

template <class Ctx>
std::vector<std::string> entry_strings(const WittClass<Ctx>& a) {
    std::vector<std::string> out;
    for (const auto& x : a.entries) {
        if constexpr (std::is_same_v<typename Ctx::Elem, Rational> || std::is_same_v<typename Ctx::Elem, Zp>) {
            out.push_back(x.to_string());
        } else {
            out.push_back(format_ratfunc(x));
        }
    }
    return out;
}

std::string residue_summary(const RationalResidue& r) {
    std::ostringstream os;
    os << "parity " << r.parity << ", disc " << r.norm_disc.get_str() << ", signatures";
    for (int s : r.signatures) os << " " << s;
    return os.str();
}

void fill_qt(FieldReport& f, const BraidWord& w) {
    const auto acc = markov_accumulate(burau_qt(), w);
    f.strands = acc.strands;
    f.raw_rank = acc.raw_rank;
    f.entries = entry_strings(acc.value);
    f.verdict = to_string(zero_verdict(acc.value));
    const auto b = battery(acc.value);
    f.parity = b.parity;
    f.signed_det = b.det.to_string();
    f.signature_function = make_signature_report(b.signature);
    for (const auto& [poly, r] : b.residues) f.residues.push_back({poly, residue_summary(r)});
    if (auto l = alexander_conway(w)) {
        const QT K = make_qt();
        auto x = K.from_poly(l->body);
        const auto mono = K.from_poly(Poly<Rational>::monomial(Rational(1), static_cast<std::size_t>(std::labs(l->shift))));
        x = l->shift < 0 ? x / mono : x * mono;
        f.alexander = format_ratfunc(x);
    }
    const auto wt = weil_trace_value(w);
    f.weil = WeilReport{wt.signature, wt.radicand.to_string(), wt.exponent_sum};
}

void fill_q(FieldReport& f, const BraidWord& w) {
    const auto acc = markov_accumulate(burau_q(), w);
    f.strands = acc.strands;
    f.raw_rank = acc.raw_rank;
    f.entries = entry_strings(acc.value);
    const auto inv = invariants_q(acc.value);
    f.verdict = verdict(inv.is_zero());
    f.signature = inv.signature;
    f.parity2 = inv.parity2;
    for (const auto& [p, r] : inv.residues) f.residues.push_back({p.get_str(), r.name()});
}

void fill_fp(FieldReport& f, const Accumulation<PrimeField>& acc) {
    f.strands = acc.strands;
    f.raw_rank = acc.raw_rank;
    f.entries = entry_strings(acc.value);
    const auto c = canonical_fp(acc.value);
    f.verdict = verdict(c.is_zero());
    f.canonical = c.name();
}

void fill_fpt(FieldReport& f, const BraidWord& w, std::uint64_t p) {
    const auto acc = markov_accumulate(burau_fpt(p), w);
    f.strands = acc.strands;
    f.raw_rank = acc.raw_rank;
    f.entries = entry_strings(acc.value);
    f.verdict = to_string(zero_verdict(acc.value));
    const auto b = battery(acc.value);
    f.parity = b.parity;
    f.signed_det = b.det.to_string();
    for (const auto& [poly, r] : b.residues) f.residues.push_back({poly, r.name()});
}

}  // namespace

FieldReport compute_field(const BraidWord& w, const FieldConfig& cfg) {
    FieldReport f;
    f.field = cfg.to_string();
    try {
        switch (cfg.tag) {
            case FieldTag::QT: fill_qt(f, w); break;
            case FieldTag::Q_MINUS1: fill_q(f, w); break;
            case FieldTag::FP_MINUS1: fill_fp(f, markov_accumulate(burau_fp(cfg.p), w)); break;
            case FieldTag::FPT: fill_fpt(f, w, cfg.p); break;
            case FieldTag::FP_SPECIAL: fill_fp(f, special_accumulate(cfg.p, cfg.u0, w)); break;
        }
    } catch (const DegenerateError& e) {
        f = FieldReport{};
        f.field = cfg.to_string();
        f.status = "degenerate";
        f.message = e.what();
    }
    return f;
}

Report make_report(const BraidWord& w, const std::vector<FieldConfig>& fields) {
    const auto start = std::chrono::steady_clock::now();
    Report r{w.to_string(), w.to_symbolic(), w.n, exponent_sum(w), {}, 0};
    for (const auto& cfg : fields) r.fields.push_back(compute_field(w, cfg));
    r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

// ---- JSON ----

void to_json(json& j, const BreakpointReport& b) {
    j = json{{"poly", b.poly}, {"interval", {b.lo, b.hi}}, {"theta_over_pi", b.theta_over_pi}};
}
void from_json(const json& j, BreakpointReport& b) {
    b.poly = j.at("poly").get<std::string>();
    b.lo = j.at("interval").at(0).get<std::string>();
    b.hi = j.at("interval").at(1).get<std::string>();
    b.theta_over_pi = j.at("theta_over_pi").get<double>();
}
void to_json(json& j, const SignatureReport& s) { j = json{{"breakpoints", s.breakpoints}, {"values", s.values}}; }
void from_json(const json& j, SignatureReport& s) {
    s.breakpoints = j.at("breakpoints").get<std::vector<BreakpointReport>>();
    s.values = j.at("values").get<std::vector<int>>();
}
void to_json(json& j, const ResidueReport& r) { j = json{{"at", r.poly}, {"value", r.value}}; }
void from_json(const json& j, ResidueReport& r) {
    r.poly = j.at("at").get<std::string>();
    r.value = j.at("value").get<std::string>();
}
void to_json(json& j, const WeilReport& w) {
    j = json{{"signature", w.signature}, {"radicand", w.radicand}, {"exponent_sum", w.exponent_sum}};
}
void from_json(const json& j, WeilReport& w) {
    w.signature = j.at("signature").get<int>();
    w.radicand = j.at("radicand").get<std::string>();
    w.exponent_sum = j.at("exponent_sum").get<long>();
}

namespace {

template <class T>
void put(json& j, const char* key, const std::optional<T>& v) {
    if (v) j[key] = *v;
}
template <class T>
void get(const json& j, const char* key, std::optional<T>& v) {
    if (j.contains(key)) v = j.at(key).get<T>();
}

}  // namespace

void to_json(json& j, const FieldReport& f) {
    j = json{{"field", f.field}, {"status", f.status}};
    if (f.status != "ok") {
        j["message"] = f.message;
        return;
    }
    j["strands"] = f.strands;
    j["raw_rank"] = f.raw_rank;
    j["entries"] = f.entries;
    j["verdict"] = f.verdict;
    put(j, "parity", f.parity);
    put(j, "signed_det", f.signed_det);
    put(j, "signature_function", f.signature_function);
    if (!f.residues.empty()) j["residues"] = f.residues;
    put(j, "alexander", f.alexander);
    put(j, "weil", f.weil);
    put(j, "signature", f.signature);
    put(j, "parity2", f.parity2);
    put(j, "canonical", f.canonical);
}

void from_json(const json& j, FieldReport& f) {
    f = FieldReport{};
    f.field = j.at("field").get<std::string>();
    f.status = j.at("status").get<std::string>();
    if (f.status != "ok") {
        f.message = j.at("message").get<std::string>();
        return;
    }
    f.strands = j.at("strands").get<int>();
    f.raw_rank = j.at("raw_rank").get<std::size_t>();
    f.entries = j.at("entries").get<std::vector<std::string>>();
    f.verdict = j.at("verdict").get<std::string>();
    get(j, "parity", f.parity);
    get(j, "signed_det", f.signed_det);
    get(j, "signature_function", f.signature_function);
    if (j.contains("residues")) f.residues = j.at("residues").get<std::vector<ResidueReport>>();
    get(j, "alexander", f.alexander);
    get(j, "weil", f.weil);
    get(j, "signature", f.signature);
    get(j, "parity2", f.parity2);
    get(j, "canonical", f.canonical);
}

void to_json(json& j, const Report& r) {
    j = json{{"word", r.word},     {"symbolic", r.symbolic}, {"n", r.n},
             {"exponent_sum", r.exponent_sum}, {"fields", r.fields}, {"timing_ms", r.timing_ms}};
}

void from_json(const json& j, Report& r) {
    r.word = j.at("word").get<std::string>();
    r.symbolic = j.at("symbolic").get<std::string>();
    r.n = j.at("n").get<int>();
    r.exponent_sum = j.at("exponent_sum").get<long>();
    r.fields = j.at("fields").get<std::vector<FieldReport>>();
    r.timing_ms = j.at("timing_ms").get<double>();
}

json report_document(const std::vector<Report>& reports) {
    return json{{"schema", kSchema}, {"version", kSchemaVersion}, {"reports", reports}};
}

std::vector<Report> parse_report_document(const json& doc) {
    if (doc.at("schema").get<std::string>() != kSchema) throw ParseError("not a wittlink report document");
    const int v = doc.at("version").get<int>();
    if (v != kSchemaVersion) throw ParseError("unsupported report version " + std::to_string(v));
    return doc.at("reports").get<std::vector<Report>>();
}

// ---- text ----

std::string format_text(const Report& r) {
    std::ostringstream os;
    os << "word " << (r.word.empty() ? "(identity)" : r.word) << "  [" << r.symbolic << "]  n = " << r.n
       << "  exponent sum " << r.exponent_sum << "\n";
    for (const auto& f : r.fields) {
        os << "field " << f.field << ":";
        if (f.status != "ok") {
            os << " degenerate: " << f.message << "\n";
            continue;
        }
        os << " " << f.verdict << "\n";
        os << "  strands " << f.strands << ", accumulated rank " << f.raw_rank << ", reduced rank " << f.entries.size()
           << "\n";
        os << "  theta = <";
        for (std::size_t i = 0; i < f.entries.size(); ++i) os << (i ? ", " : "") << f.entries[i];
        os << ">\n";
        if (f.canonical) os << "  class " << *f.canonical << "\n";
        if (f.signature) os << "  signature " << *f.signature << "\n";
        if (f.parity2) os << "  residue at 2 " << *f.parity2 << "\n";
        if (f.parity) os << "  rank parity " << *f.parity << "\n";
        if (f.signed_det) os << "  signed determinant " << *f.signed_det << "\n";
        if (f.signature_function) {
            const auto& s = *f.signature_function;
            os << "  signature function values";
            for (int v : s.values) os << " " << v;
            os << "\n";
            for (const auto& b : s.breakpoints) {
                os << "    jump at root of " << b.poly << " in (" << b.lo << ", " << b.hi << "), theta/pi ~ "
                   << b.theta_over_pi << "\n";
            }
        }
        for (const auto& res : f.residues) os << "  residue at " << res.poly << ": " << res.value << "\n";
        if (f.alexander) os << "  alexander " << *f.alexander << "\n";
        if (f.weil) {
            os << "  weil trace (" << f.weil->signature << ", " << f.weil->radicand << "), exponent sum "
               << f.weil->exponent_sum << "\n";
        }
    }
    return os.str();
}

// ---- SVG ----

std::string camembert_svg(const SignatureReport& s) {
    static const char* palette[] = {"#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#76b7b2",
                                    "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac"};
    std::vector<int> distinct = s.values;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    auto color = [&](int v) {
        const auto k = std::lower_bound(distinct.begin(), distinct.end(), v) - distinct.begin();
        return palette[static_cast<std::size_t>(k) % (sizeof(palette) / sizeof(palette[0]))];
    };
    const double cx = 150, cy = 150, rad = 120;
    std::ostringstream os;
    os << std::fixed << std::setprecision(3);
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"420\" height=\"300\" viewBox=\"0 0 420 300\">\n";
    // angles in units of pi; arc j runs between consecutive breakpoints on (0, pi), mirrored below
    std::vector<double> cuts{0.0};
    for (const auto& b : s.breakpoints) cuts.push_back(b.theta_over_pi);
    cuts.push_back(1.0);
    auto point = [&](double a) {
        std::ostringstream p;
        p << std::fixed << std::setprecision(3) << cx + rad * std::cos(a * M_PI) << " " << cy - rad * std::sin(a * M_PI);
        return p.str();
    };
    auto sector = [&](double a0, double a1, const char* fill) {
        os << "  <path d=\"M " << cx << " " << cy << " L " << point(a0) << " A " << rad << " " << rad << " 0 "
           << (std::fabs(a1 - a0) > 1.0 ? 1 : 0) << " " << (a1 > a0 ? 0 : 1) << " " << point(a1) << " Z\" fill=\"" << fill
           << "\" stroke=\"white\" stroke-width=\"1\"/>\n";
    };
    if (s.breakpoints.empty()) {
        os << "  <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << rad << "\" fill=\"" << color(s.values.front())
           << "\"/>\n";
    } else {
        for (std::size_t j = 0; j + 1 < cuts.size(); ++j) {
            sector(cuts[j], cuts[j + 1], color(s.values[j]));
            sector(-cuts[j], -cuts[j + 1], color(s.values[j]));
        }
    }
    os << "  <line x1=\"" << cx << "\" y1=\"" << cy << "\" x2=\"" << cx + rad << "\" y2=\"" << cy
       << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    os << "  <text x=\"" << cx + rad + 4 << "\" y=\"" << cy + 4 << "\" font-family=\"sans-serif\" font-size=\"11\">0</text>\n";
    double y = 40;
    os << "  <text x=\"300\" y=\"" << y - 14 << "\" font-family=\"sans-serif\" font-size=\"12\">signature</text>\n";
    for (int v : distinct) {
        os << "  <rect x=\"300\" y=\"" << y - 10 << "\" width=\"12\" height=\"12\" fill=\"" << color(v) << "\"/>\n";
        os << "  <text x=\"318\" y=\"" << y << "\" font-family=\"sans-serif\" font-size=\"12\">" << v << "</text>\n";
        y += 18;
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace wittlink::cli
