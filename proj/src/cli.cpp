#include "dehn/cli.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>

#include "dehn/cyclotomic.hpp"
#include "dehn/dedekind.hpp"
#include "dehn/lescop.hpp"
#include "dehn/parse.hpp"
#include "dehn/verifier.hpp"

namespace dehn::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kSchemaVersion = "1.0";
constexpr const char* kVerifyNote =
    "exhaustive check of Seifert candidates with 1 <= alpha < beta <= beta_max; "
    "an empty survivor list verifies the instance up to the search bound only";

constexpr const char* kUsage = R"(dehn - exact Dehn surgery obstruction calculator

Usage: dehn <command> [arguments]

Commands:
  dedekind <q> <p>                 exact Dedekind sum s(q,p)
  cyclotomic <d>                   d-th cyclotomic polynomial
  norm --d <d> <poly>              cyclotomic norm |f(t)|_d of a Laurent polynomial
  lescop-seifert <alpha> <beta> <q1> <q2> <q3>
                                   Lescop invariant of a Seifert candidate
  lescop-surgery --q <q> [--delta <poly>]
                                   Lescop invariant of 2/q-surgery (lambda(Sigma) = 0)
  verify --q <q> --beta-max <B> [--threads <N>] [--drop-norm-bound] [--json]
                                   exhaustive Seifert candidate check for one q
  sweep --q-min <a> --q-max <b> --beta-max <B> [--threads <N>] [--json]
                                   verify every admissible q in a range

Options:
  --json      machine-readable report on standard output
  --help      this text

Polynomials use the grammar "t^2-3t+1" / "t^-1 - 3 + t"; the Unicode minus
sign is accepted.  Exit codes: 0 success (no survivors), 1 survivor found,
2 usage or validation error.
)";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParsedArgs {
    std::map<std::string, std::string> values;
    std::set<std::string> flags;
    std::vector<std::string> positionals;
};

ParsedArgs collect(const std::vector<std::string>& args, std::size_t start,
                   const std::set<std::string>& value_options,
                   const std::set<std::string>& bool_flags) {
    ParsedArgs parsed;
    for (std::size_t i = start; i < args.size(); ++i) {
        const std::string& tok = args[i];
        if (tok.rfind("--", 0) == 0) {
            if (bool_flags.count(tok)) {
                parsed.flags.insert(tok);
            } else if (value_options.count(tok)) {
                if (i + 1 >= args.size())
                    throw UsageError("option " + tok + " expects a value");
                parsed.values[tok] = args[++i];
            } else {
                throw UsageError("unknown option " + tok);
            }
        } else {
            parsed.positionals.push_back(tok);
        }
    }
    return parsed;
}

std::int64_t required_value(const ParsedArgs& parsed, const std::string& key) {
    auto it = parsed.values.find(key);
    if (it == parsed.values.end())
        throw UsageError("missing required option " + key);
    return parse_int(it->second, key);
}

std::int64_t positional_int(const ParsedArgs& parsed, std::size_t index,
                            const std::string& what) {
    if (index >= parsed.positionals.size())
        throw UsageError("missing argument <" + what + ">");
    return parse_int(parsed.positionals[index], what);
}

void expect_positionals(const ParsedArgs& parsed, std::size_t count) {
    if (parsed.positionals.size() > count)
        throw UsageError("unexpected argument '" + parsed.positionals[count] + "'");
}

void emit_value(std::ostream& out, bool json_mode, const std::string& command,
                json inputs, const std::string& value) {
    if (!json_mode) {
        out << value << "\n";
        return;
    }
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = command;
    doc["inputs"] = std::move(inputs);
    doc["result"] = {{"value", value}};
    out << doc.dump(2) << "\n";
}

json survivor_json(const CandidateRecord& rec) {
    return json{{"alpha", rec.candidate.alpha},
                {"beta", rec.candidate.beta},
                {"q1", rec.candidate.q1},
                {"q2", rec.candidate.q2},
                {"q3", rec.candidate.q3},
                {"e_sign", rec.e_sign},
                {"lambda", to_string(rec.lambda)},
                {"h1", rec.h1.get_si()},
                {"ab_product", rec.ab_product},
                {"eq2_holds", rec.eq2_holds}};
}

json report_json(const VerificationReport& report) {
    json doc;
    doc["q"] = report.q;
    doc["beta_max"] = report.beta_max;
    doc["drop_norm_bound"] = report.norm_bound_dropped;
    doc["pairs_examined"] = report.pairs_examined;
    doc["candidates_examined"] = report.candidates_examined;
    doc["survivor_count"] = report.survivors.size();
    doc["no_survivors"] = report.survivors.empty();
    doc["elapsed_ms"] = report.elapsed.count();
    return doc;
}

void print_report_human(std::ostream& out, const VerificationReport& report) {
    out << "verify: q = " << report.q << ", beta_max = " << report.beta_max;
    if (report.norm_bound_dropped)
        out << " [norm bound dropped]";
    out << "\n";
    out << "  coprime pairs examined: " << report.pairs_examined << "\n";
    out << "  candidates examined:    " << report.candidates_examined << "\n";
    out << "  survivors:              " << report.survivors.size() << "\n";
    for (const CandidateRecord& rec : report.survivors) {
        out << "  SURVIVOR alpha=" << rec.candidate.alpha << " beta=" << rec.candidate.beta
            << " q1=" << rec.candidate.q1 << " q2=" << rec.candidate.q2
            << " q3=" << rec.candidate.q3 << " e_sign=" << (rec.e_sign > 0 ? "+1" : "-1")
            << " lambda=" << to_string(rec.lambda) << " alpha*beta=" << rec.ab_product
            << "\n";
    }
    if (report.survivors.empty())
        out << "  no candidate matches lambda = -q with alpha*beta > 2|q| "
               "(instance verified up to the search bound; the bound is not a proof)\n";
    out << "  elapsed: " << report.elapsed.count() << " ms\n";
}

int cmd_dedekind(const ParsedArgs& parsed, std::ostream& out, bool json_mode) {
    std::int64_t q = positional_int(parsed, 0, "q");
    std::int64_t p = positional_int(parsed, 1, "p");
    expect_positionals(parsed, 2);
    Rational s = dedekind_fast(q, p);
    emit_value(out, json_mode, "dedekind", json{{"q", q}, {"p", p}}, to_string(s));
    return 0;
}

int cmd_cyclotomic(const ParsedArgs& parsed, std::ostream& out, bool json_mode) {
    std::int64_t d = positional_int(parsed, 0, "d");
    expect_positionals(parsed, 1);
    if (d <= 0 || d > 1000000)
        throw std::invalid_argument("cyclotomic polynomial requires 1 <= d <= 1000000");
    IntPolynomial phi = cyclotomic_poly(static_cast<int>(d));
    emit_value(out, json_mode, "cyclotomic", json{{"d", d}}, render_poly(phi));
    return 0;
}

int cmd_norm(const ParsedArgs& parsed, std::ostream& out, bool json_mode) {
    std::int64_t d = required_value(parsed, "--d");
    if (parsed.positionals.empty())
        throw UsageError("missing argument <poly>");
    expect_positionals(parsed, 1);
    const std::string& text = parsed.positionals[0];
    if (d <= 0 || d > 1000000)
        throw std::invalid_argument("norm requires 1 <= d <= 1000000");
    LaurentPolynomial f = parse_laurent(text);
    Integer value = norm_d(f, static_cast<int>(d));
    emit_value(out, json_mode, "norm", json{{"d", d}, {"poly", render_laurent(f)}},
               to_string(value));
    return 0;
}

int cmd_lescop_seifert(const ParsedArgs& parsed, std::ostream& out, bool json_mode) {
    std::int64_t alpha = positional_int(parsed, 0, "alpha");
    std::int64_t beta = positional_int(parsed, 1, "beta");
    std::int64_t q1 = positional_int(parsed, 2, "q1");
    std::int64_t q2 = positional_int(parsed, 3, "q2");
    std::int64_t q3 = positional_int(parsed, 4, "q3");
    expect_positionals(parsed, 5);
    SeifertCandidate c(alpha, beta, q1, q2, q3);
    Rational lambda = lescop_seifert(c);
    emit_value(out, json_mode, "lescop-seifert",
               json{{"alpha", alpha}, {"beta", beta}, {"q1", q1}, {"q2", q2}, {"q3", q3}},
               to_string(lambda));
    return 0;
}

int cmd_lescop_surgery(const ParsedArgs& parsed, std::ostream& out, bool json_mode) {
    std::int64_t q = required_value(parsed, "--q");
    expect_positionals(parsed, 0);
    LaurentPolynomial delta = alexander_fig8();
    if (auto it = parsed.values.find("--delta"); it != parsed.values.end())
        delta = parse_laurent(it->second);
    Rational lambda = lescop_surgery_2q(SurgerySpec{q, delta, Rational(0)});
    emit_value(out, json_mode, "lescop-surgery",
               json{{"q", q}, {"delta", render_laurent(delta)}}, to_string(lambda));
    return 0;
}

int cmd_verify(const ParsedArgs& parsed, std::ostream& out, bool json_mode) {
    VerifyOptions options;
    options.drop_norm_bound = parsed.flags.count("--drop-norm-bound") > 0;
    std::int64_t q = required_value(parsed, "--q");
    std::int64_t beta_max = required_value(parsed, "--beta-max");
    if (auto it = parsed.values.find("--threads"); it != parsed.values.end()) {
        std::int64_t n = parse_int(it->second, "--threads");
        if (n < 0 || n > 1024)
            throw UsageError("--threads expects a value in [0, 1024]");
        options.threads = static_cast<int>(n);
    }
    expect_positionals(parsed, 0);

    VerificationReport report = verify_theorem(q, beta_max, options);
    if (json_mode) {
        json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["command"] = "verify";
        doc["inputs"] = {{"q", q},
                         {"beta_max", beta_max},
                         {"threads", options.threads},
                         {"drop_norm_bound", options.drop_norm_bound}};
        doc["note"] = kVerifyNote;
        doc["result"] = report_json(report);
        json survivors = json::array();
        for (const CandidateRecord& rec : report.survivors)
            survivors.push_back(survivor_json(rec));
        doc["survivors"] = std::move(survivors);
        out << doc.dump(2) << "\n";
    } else {
        print_report_human(out, report);
    }
    return report.survivors.empty() ? 0 : 1;
}

int cmd_sweep(const ParsedArgs& parsed, std::ostream& out, bool json_mode) {
    std::int64_t q_min = required_value(parsed, "--q-min");
    std::int64_t q_max = required_value(parsed, "--q-max");
    std::int64_t beta_max = required_value(parsed, "--beta-max");
    VerifyOptions options;
    if (auto it = parsed.values.find("--threads"); it != parsed.values.end()) {
        std::int64_t n = parse_int(it->second, "--threads");
        if (n < 0 || n > 1024)
            throw UsageError("--threads expects a value in [0, 1024]");
        options.threads = static_cast<int>(n);
    }
    expect_positionals(parsed, 0);
    if (q_min > q_max)
        throw UsageError("--q-min must not exceed --q-max");
    if (q_min < -1000000 || q_max > 1000000)
        throw UsageError("sweep supports q in [-1000000, 1000000]");

    std::vector<VerificationReport> reports;
    for (std::int64_t q = q_min; q <= q_max; ++q) {
        if (q % 2 == 0 || (q > -3 && q < 3))
            continue;  // only odd |q| >= 3 are theorem instances
        reports.push_back(verify_theorem(q, beta_max, options));
    }

    std::size_t total_survivors = 0;
    for (const VerificationReport& r : reports)
        total_survivors += r.survivors.size();

    if (json_mode) {
        json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["command"] = "sweep";
        doc["inputs"] = {{"q_min", q_min},
                         {"q_max", q_max},
                         {"beta_max", beta_max},
                         {"threads", options.threads}};
        doc["note"] = kVerifyNote;
        json runs = json::array();
        for (const VerificationReport& r : reports)
            runs.push_back(report_json(r));
        doc["result"] = {{"runs_performed", reports.size()},
                         {"total_survivors", total_survivors},
                         {"runs", std::move(runs)}};
        json survivors = json::array();
        for (const VerificationReport& r : reports) {
            for (const CandidateRecord& rec : r.survivors) {
                json entry = survivor_json(rec);
                entry["q"] = r.q;
                survivors.push_back(std::move(entry));
            }
        }
        doc["survivors"] = std::move(survivors);
        out << doc.dump(2) << "\n";
    } else {
        if (reports.empty())
            out << "sweep: no admissible q (odd, |q| >= 3) in [" << q_min << ", " << q_max
                << "]\n";
        for (const VerificationReport& r : reports)
            out << "q = " << r.q << ": pairs " << r.pairs_examined << ", candidates "
                << r.candidates_examined << ", survivors " << r.survivors.size() << "\n";
        out << "sweep: " << reports.size() << " coefficients checked, " << total_survivors
            << " survivors\n";
    }
    return total_survivors == 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (args.empty()) {
        err << kUsage;
        return 2;
    }
    const std::string& command = args[0];
    if (command == "--help" || command == "-h" || command == "help") {
        out << kUsage;
        return 0;
    }

    try {
        const std::set<std::string> json_flag{"--json"};
        if (command == "dedekind") {
            ParsedArgs parsed = collect(args, 1, {}, json_flag);
            return cmd_dedekind(parsed, out, parsed.flags.count("--json"));
        }
        if (command == "cyclotomic") {
            ParsedArgs parsed = collect(args, 1, {}, json_flag);
            return cmd_cyclotomic(parsed, out, parsed.flags.count("--json"));
        }
        if (command == "norm") {
            ParsedArgs parsed = collect(args, 1, {"--d"}, json_flag);
            return cmd_norm(parsed, out, parsed.flags.count("--json"));
        }
        if (command == "lescop-seifert") {
            ParsedArgs parsed = collect(args, 1, {}, json_flag);
            return cmd_lescop_seifert(parsed, out, parsed.flags.count("--json"));
        }
        if (command == "lescop-surgery") {
            ParsedArgs parsed = collect(args, 1, {"--q", "--delta"}, json_flag);
            return cmd_lescop_surgery(parsed, out, parsed.flags.count("--json"));
        }
        if (command == "verify") {
            ParsedArgs parsed = collect(args, 1, {"--q", "--beta-max", "--threads"},
                                        {"--json", "--drop-norm-bound"});
            return cmd_verify(parsed, out, parsed.flags.count("--json"));
        }
        if (command == "sweep") {
            ParsedArgs parsed =
                collect(args, 1, {"--q-min", "--q-max", "--beta-max", "--threads"}, json_flag);
            return cmd_sweep(parsed, out, parsed.flags.count("--json"));
        }
        err << "unknown command '" << command << "'\n\n" << kUsage;
        return 2;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace dehn::cli
