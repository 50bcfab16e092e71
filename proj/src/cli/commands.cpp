#include "wittlink/cli/commands.hpp"

#include <CLI11.hpp>
#include <atomic>
#include <fstream>
#include <iostream>
#include <random>
#include <thread>
#include <variant>

#include "wittlink/algebra/errors.hpp"
#include "wittlink/cli/report.hpp"
#include "wittlink/invariants/invariants.hpp"

namespace wittlink::cli {

namespace {

struct Options {
    std::vector<std::string> words;  // positional, joined into one word
    bool have_word = false;
    std::vector<std::string> fields;
    std::optional<int> n;
    bool json = false;
    int jobs = 1;
};

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    return s.substr(a, s.find_last_not_of(" \t\r") - a + 1);
}

/// The word from the command line, or one word per non-blank stdin line ('#' starts a comment).
std::vector<BraidWord> read_words(const Options& o, std::istream& in) {
    std::vector<BraidWord> out;
    if (o.have_word) {
        std::string text;
        for (const auto& w : o.words) text += (text.empty() ? "" : " ") + w;
        out.push_back(parse_braid(text, o.n));
        return out;
    }
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        try {
            out.push_back(parse_braid(line, o.n));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

std::vector<FieldConfig> read_fields(const Options& o) {
    std::vector<FieldConfig> out;
    for (const auto& f : o.fields) out.push_back(FieldConfig::parse(f));
    if (out.empty()) out.push_back(FieldConfig::qt());
    return out;
}

/// Runs task(i) for i < count on up to `jobs` threads; results land in index order.
template <class T, class F>
std::vector<T> parallel_map(std::size_t count, int jobs, F task) {
    std::vector<T> out(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                out[i] = task(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t threads = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(1, jobs)));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

int cmd_invariant(const Options& o, std::istream& in, std::ostream& out) {
    const auto fields = read_fields(o);
    const auto words = read_words(o, in);
    const std::size_t nf = fields.size();
    auto cells = parallel_map<Report>(words.size() * nf, o.jobs,
                                      [&](std::size_t i) { return make_report(words[i / nf], {fields[i % nf]}); });
    std::vector<Report> reports;
    bool degenerate = false;
    for (std::size_t k = 0; k < words.size(); ++k) {
        const auto& w = words[k];
        Report r{w.to_string(), w.to_symbolic(), w.n, exponent_sum(w), {}, 0};
        for (std::size_t j = 0; j < nf; ++j) {
            auto& cell = cells[k * nf + j];
            r.timing_ms += cell.timing_ms;
            r.fields.push_back(std::move(cell.fields.front()));
            degenerate = degenerate || r.fields.back().status != "ok";
        }
        reports.push_back(std::move(r));
    }
    if (o.json) {
        out << report_document(reports).dump(2) << "\n";
    } else {
        for (std::size_t k = 0; k < reports.size(); ++k) out << (k ? "\n" : "") << format_text(reports[k]);
    }
    return degenerate ? kExitDegenerate : kExitOk;
}

int cmd_signature_fn(const Options& o, const std::string& svg, std::istream& in, std::ostream& out) {
    const auto words = read_words(o, in);
    auto sigs = parallel_map<SignatureReport>(words.size(), o.jobs, [&](std::size_t i) {
        return make_signature_report(signature_function(words[i]));
    });
    if (!svg.empty()) {
        if (words.size() != 1) throw ParseError("--svg needs exactly one word");
        std::ofstream f(svg);
        if (!f) throw Error("cannot write '" + svg + "'");
        f << camembert_svg(sigs.front());
    }
    if (o.json) {
        nlohmann::json items = nlohmann::json::array();
        for (std::size_t i = 0; i < words.size(); ++i) {
            items.push_back({{"word", words[i].to_string()}, {"n", words[i].n}, {"signature_function", sigs[i]}});
        }
        out << nlohmann::json{{"schema", "wittlink.signature"}, {"version", kSchemaVersion}, {"reports", items}}.dump(2)
            << "\n";
        return kExitOk;
    }
    for (std::size_t i = 0; i < words.size(); ++i) {
        const auto& s = sigs[i];
        out << (i ? "\n" : "") << "signature function of " << words[i].to_symbolic() << " on theta in [0, pi], u = 2 cos theta\n";
        out << "  jump  polynomial in u  isolating interval  theta/pi\n";
        for (std::size_t j = 0; j < s.breakpoints.size(); ++j) {
            const auto& b = s.breakpoints[j];
            out << "  " << j + 1 << "  " << b.poly << "  (" << b.lo << ", " << b.hi << ")  " << b.theta_over_pi << "\n";
        }
        out << "  values:";
        for (std::size_t j = 0; j < s.values.size(); ++j) out << (j ? " |" : "") << " " << s.values[j];
        out << "\n";
    }
    return kExitOk;
}

using Summary = std::variant<QTBattery, RationalWitt, FiniteWitt, FpTBattery>;

Summary summarize(const AnyWitt& a, bool negate) {
    return std::visit([&](const auto& x) -> Summary { return battery(negate ? neg(x) : x); }, a);
}

Summary summary(const BraidWord& w, const FieldConfig& cfg) { return summarize(theta_invariant(w, cfg), false); }

BraidWord relator_inserted(const BraidWord& w, std::mt19937_64& rng) {
    BraidWord r = w;
    std::vector<Letter> rel;
    if (w.n >= 3) {
        const int i = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(w.n - 2));
        rel = {{i, 1}, {i + 1, 1}, {i, 1}, {i + 1, -1}, {i, -1}, {i + 1, -1}};
    } else {
        rel = {{1, 1}, {1, -1}};
    }
    const auto pos = static_cast<std::ptrdiff_t>(rng() % (w.letters.size() + 1));
    r.letters.insert(r.letters.begin() + pos, rel.begin(), rel.end());
    return r;
}

struct Check {
    std::string name;
    std::string detail;
    bool ok = true;
};

std::vector<Check> verify_field(const BraidWord& w, const FieldConfig& cfg, int moves, int pairs, std::uint64_t seed) {
    std::vector<Check> out;
    const auto base = theta_invariant(w, cfg);
    const Summary s = summarize(base, false);
    auto same = [&](const BraidWord& v) { return summary(v, cfg) == s; };

    Check markov{"markov", std::to_string(pairs) + " pairs of " + std::to_string(moves) + " moves", true};
    for (int k = 0; k < pairs; ++k) markov.ok = markov.ok && same(random_markov_pair(w, seed + static_cast<std::uint64_t>(k), moves));
    out.push_back(markov);

    std::mt19937_64 rng(seed);
    Check conj{"conjugation", "every generator", true};
    for (int i = 1; i < w.n; ++i) conj.ok = conj.ok && same(conjugate(w, BraidWord{w.n, {{i, 1}}}));
    out.push_back(conj);

    out.push_back({"stabilization", "both signs", same(stabilize(w, 1)) && same(stabilize(w, -1))});
    out.push_back({"relator", "inserted braid relator", same(relator_inserted(w, rng))});
    out.push_back({"mirror", "theta(w^-1) = -theta(w)", summary(invert(w), cfg) == summarize(base, true)});
    return out;
}

int cmd_verify(const Options& o, int moves, int pairs, std::uint64_t seed, const std::string& against, std::istream& in,
               std::ostream& out) {
    const auto fields = read_fields(o);
    const auto words = read_words(o, in);
    const std::size_t nf = fields.size();
    auto results = parallel_map<std::vector<Check>>(words.size() * nf, o.jobs, [&](std::size_t i) {
        return verify_field(words[i / nf], fields[i % nf], moves, pairs, seed);
    });
    bool all = true;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& w = words[i / nf];
        for (const auto& c : results[i]) {
            all = all && c.ok;
            out << (c.ok ? "PASS " : "FAIL ") << c.name << " [" << fields[i % nf].to_string() << "] "
                << (w.empty() ? "(identity)" : w.to_string()) << ": " << c.detail << "\n";
        }
    }
    if (!against.empty()) {
        const auto other = parse_braid(against, o.n);
        for (const auto& w : words) {
            for (const auto& cfg : fields) {
                const bool eq = summary(w, cfg) == summary(other, cfg);
                const bool exact = cfg.tag != FieldTag::QT && cfg.tag != FieldTag::FPT;
                out << "COMPARE [" << cfg.to_string() << "] " << w.to_string() << " vs " << other.to_string() << ": "
                    << (eq ? (exact ? "equal" : "equal batteries") : "distinct") << "\n";
            }
        }
    }
    return all ? kExitOk : kExitFailure;
}

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("word", o.words, "braid word, e.g. \"1 1 -2\" or \"s1^2 s2^-1\"; read from stdin if absent")
        ->expected(0, -1);
    cmd->add_option("--n", o.n, "strand count (overrides inference)")->check(CLI::Range(2, 1000));
    cmd->add_flag("--json", o.json, "JSON output");
    cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1, 256));
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Witt-ring valued link invariants from braid words", "wittlink"};
    app.require_subcommand(1);
    Options o;
    auto* inv = app.add_subcommand("invariant", "Witt class of the closure and derived invariants");
    add_common(inv, o);
    inv->add_option("--field", o.fields, "qt | q | fp:<p> | fpt:<p> | fq:<p>:<u0> (repeatable)");

    std::string svg;
    auto* sig = app.add_subcommand("signature-fn", "signature step function over the unit circle");
    add_common(sig, o);
    sig->add_option("--svg", svg, "write the camembert disc as SVG");

    int moves = 20, pairs = 3;
    std::uint64_t seed = 1;
    std::string against;
    auto* ver = app.add_subcommand("verify", "Markov, relator and mirror checks on a word");
    add_common(ver, o);
    ver->add_option("--field", o.fields, "field descriptor (repeatable)");
    ver->add_option("--moves", moves, "random moves per Markov pair")->check(CLI::NonNegativeNumber);
    ver->add_option("--pairs", pairs, "number of Markov pairs")->check(CLI::NonNegativeNumber);
    ver->add_option("--seed", seed, "random seed");
    ver->add_option("--against", against, "also compare with this word");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    }
    for (auto* c : {inv, sig, ver}) {
        if (c->parsed()) o.have_word = c->count("word") > 0;
    }
    try {
        if (inv->parsed()) return cmd_invariant(o, in, out);
        if (sig->parsed()) return cmd_signature_fn(o, svg, in, out);
        return cmd_verify(o, moves, pairs, seed, against, in, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const DegenerateError& e) {
        err << "error: degenerate: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

}  // namespace wittlink::cli
