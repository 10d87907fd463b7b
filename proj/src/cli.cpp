#include <macmahon/cli.hpp>

#include <algorithm>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <macmahon/detector.hpp>
#include <macmahon/eisenstein.hpp>
#include <macmahon/lattice.hpp>
#include <macmahon/macmahon.hpp>

namespace macmahon::cli {

using Json = nlohmann::ordered_json;

namespace {

struct FlagSpec
{
    std::string name;
    std::string help;
};

const std::map<std::string, std::vector<FlagSpec>> &subcommand_flags()
{
    static const std::vector<FlagSpec> family = {
        {"modulus", "modulus N of the residue classes (default 1)"},
        {"residues", "comma separated residues S mod N (default 0)"},
        {"epsilon", "sign twist, +1 or -1 (default +1)"},
        {"k", "number of blocks k"},
        {"variant", "MacMahon variant A..H, replaces --modulus/--residues/--epsilon"},
        {"order", "truncation order (default 40)"},
    };
    auto with = [&](std::vector<FlagSpec> extra) {
        std::vector<FlagSpec> all = family;
        all.insert(all.end(), extra.begin(), extra.end());
        return all;
    };
    static const std::map<std::string, std::vector<FlagSpec>> flags = {
        {"series", family},
        {"mk", with({{"n", "index n of the coefficient"}, {"backend", "formula or bruteforce (default formula)"}})},
        {"verify", with({{"perturb", "add 1 to the coefficient of q^P on the direct side (main-identity)"},
                         {"lattice", "L1, L2 or E8 (lattice suite; default all)"}})},
        {"detect",
         {{"expr", "expression name, or lelievre:N:k:l"},
          {"range", "lo:hi with 2 <= lo <= hi (default 2:100)"},
          {"backend", "formula or bruteforce (default formula)"}}},
        {"lattice", {{"lattice", "L1, L2 or E8 (default E8)"}, {"order", "theta series order (default 40)"}}},
    };
    return flags;
}

const std::map<std::string, std::string> &subcommand_help()
{
    static const std::map<std::string, std::string> help = {
        {"series", "q-expansion of a generalized MacMahon function"},
        {"mk", "a single MacMahon coefficient"},
        {"verify", "run an identity verification suite"},
        {"detect", "evaluate a prime-detecting expression over a range"},
        {"lattice", "theta series of a catalog lattice against its divisor-sum formula"},
    };
    return help;
}

// Resolved parameters, recorded in the order they are read.
class Params
{
public:
    explicit Params(const std::map<std::string, std::string> &given) : m_given(given) {}

    bool has(const std::string &name) const { return m_given.count(name) != 0; }

    long integer(const std::string &name, std::optional<long> fallback, long min_value)
    {
        long v = 0;
        if (auto it = m_given.find(name); it != m_given.end()) {
            std::size_t used = 0;
            try {
                v = std::stol(it->second, &used);
            } catch (const std::exception &) {
                used = 0;
            }
            if (it->second.empty() || used != it->second.size()) {
                throw UsageError("--" + name, "expected an integer, got '" + it->second + "'");
            }
        } else if (fallback) {
            v = *fallback;
        } else {
            throw UsageError("--" + name, "is required");
        }
        if (v < min_value) {
            throw UsageError("--" + name, "must be at least " + std::to_string(min_value));
        }
        resolved[name] = v;
        return v;
    }

    std::string text(const std::string &name, std::optional<std::string> fallback)
    {
        std::string v;
        if (auto it = m_given.find(name); it != m_given.end()) {
            v = it->second;
        } else if (fallback) {
            v = *fallback;
        } else {
            throw UsageError("--" + name, "is required");
        }
        resolved[name] = v;
        return v;
    }

    Json resolved = Json::object();

private:
    const std::map<std::string, std::string> &m_given;
};

std::vector<long> parse_residue_list(const std::string &text)
{
    std::vector<long> out;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(piece, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (piece.empty() || used != piece.size()) {
            throw UsageError("--residues", "expected a comma separated list of integers, got '" + text + "'");
        }
        out.push_back(v);
    }
    if (out.empty()) {
        throw UsageError("--residues", "needs at least one residue");
    }
    return out;
}

ResidueClassSet classes_from(Params &params, long default_modulus, const std::string &default_residues)
{
    const long modulus = params.integer("modulus", default_modulus, 1);
    const auto residues = parse_residue_list(params.text("residues", default_residues));
    try {
        return ResidueClassSet(modulus, residues);
    } catch (const std::invalid_argument &e) {
        throw UsageError("--residues", e.what());
    }
}

Sign sign_from(Params &params)
{
    const std::string text = params.text("epsilon", "+1");
    try {
        return parse_sign(text);
    } catch (const std::invalid_argument &) {
        throw UsageError("--epsilon", "expected +1 or -1, got '" + text + "'");
    }
}

struct Family
{
    MacMahonParams params;
    // Extra (-1)^k of the named variants B, D, F, H.
    int sign;
    std::string label;
};

Family family_from(Params &params, long default_k)
{
    const long k = params.integer("k", default_k, 1);
    if (params.has("variant")) {
        for (const char *clash : {"modulus", "residues", "epsilon"}) {
            if (params.has(clash)) {
                throw UsageError("--variant", std::string("cannot be combined with --") + clash);
            }
        }
        const std::string v = params.text("variant", std::nullopt);
        if (v.size() != 1 || v[0] < 'A' || v[0] > 'H') {
            throw UsageError("--variant", "expected one of A..H, got '" + v + "'");
        }
        const int ki = static_cast<int>(k);
        return {variant_params(v[0], ki), variant_sign(v[0], ki), v + "_" + std::to_string(k)};
    }
    ResidueClassSet classes = classes_from(params, 1, "0");
    const Sign eps = sign_from(params);
    const std::string label = "A_{" + classes.to_string() + ", eps=" + to_string(eps) + ", k=" + std::to_string(k) + "}";
    return {MacMahonParams(std::move(classes), eps, static_cast<int>(k)), 1, label};
}

Backend backend_from(Params &params)
{
    const std::string text = params.text("backend", "formula");
    try {
        return parse_backend(text);
    } catch (const std::invalid_argument &) {
        throw UsageError("--backend", "expected formula or bruteforce, got '" + text + "'");
    }
}

struct Rendered
{
    Json doc;
    std::ostringstream text;
    int exit_code = exit_ok;

    Rendered(const std::string &command)
    {
        doc["command"] = command;
        doc["params"] = Json::object();
        doc["rows"] = Json::array();
        doc["violations"] = Json::array();
    }

    CommandResult finish(const Params &params, OutputFormat format)
    {
        doc["params"] = params.resolved;
        if (format == OutputFormat::Json) {
            return {exit_code, doc.dump(2) + "\n"};
        }
        return {exit_code, text.str()};
    }
};

// ---- series / mk ----

CommandResult run_series(const CommandRequest &req)
{
    Params params(req.params);
    Rendered out("series");
    const Family fam = family_from(params, 1);
    const int order = static_cast<int>(params.integer("order", 40, 1));
    const QSeries s = macmahon_series(fam.params, order) * Rational(fam.sign);
    for (int n = 0; n <= order; ++n) {
        out.doc["rows"].push_back({{"n", n}, {"coefficient", to_string(s[n])}});
    }
    out.text << fam.label << " = " << to_string(s) << "\n";
    return out.finish(params, req.format);
}

CommandResult run_mk(const CommandRequest &req)
{
    Params params(req.params);
    Rendered out("mk");
    const Family fam = family_from(params, 1);
    const long n = params.integer("n", std::nullopt, 1);
    const Backend backend = backend_from(params);
    BigInt value = backend == Backend::Formula
                       ? macmahon_coefficients(fam.params, static_cast<int>(n))[static_cast<std::size_t>(n)]
                       : macmahon_bruteforce(fam.params, n);
    value *= fam.sign;
    out.doc["rows"].push_back({{"n", n}, {"value", value.get_str()}, {"backend", to_string(backend)}});
    out.text << value.get_str() << "\n";
    return out.finish(params, req.format);
}

// ---- verify ----

void add_report(Rendered &out, const IdentityReport &r)
{
    Json row = {{"name", r.name},
                {"order", r.order},
                {"status", r.ok() ? "ExactMatch" : "Mismatch"},
                {"first_mismatch", r.first_mismatch ? Json(*r.first_mismatch) : Json(nullptr)}};
    out.doc["rows"].push_back(row);
    if (r.ok()) {
        out.text << r.name << ": ExactMatch through q^" << r.order << "\n";
    } else {
        out.text << r.name << ": Mismatch at q^" << *r.first_mismatch << "\n";
        out.doc["violations"].push_back(r.name);
        out.exit_code = exit_mismatch;
    }
}

void verify_main(Params &params, Rendered &out)
{
    const Family fam = family_from(params, 2);
    const int order = static_cast<int>(params.integer("order", 40, 1));
    auto sides = main_identity_sides(fam.params, order);
    if (params.has("perturb")) {
        const long p = params.integer("perturb", std::nullopt, 0);
        if (p > order) {
            throw UsageError("--perturb", "must not exceed --order");
        }
        sides.direct[static_cast<int>(p)] += 1;
    }
    const Rational sign = fam.sign;
    add_report(out, compare_series(fam.label + " = Lambda_" + std::to_string(fam.params.k) + "(G_2, ..., G_" +
                                       std::to_string(2 * fam.params.k) + ")",
                                   sides.direct * sign, sides.lehmer * sign));
}

void verify_decomposition(Params &params, Rendered &out)
{
    const int order = static_cast<int>(params.integer("order", 40, 1));
    std::vector<int> ks = {2, 3, 4};
    if (params.has("k")) {
        const long k = params.integer("k", std::nullopt, 1);
        if (k > 4) {
            throw UsageError("--k", "level 2 decompositions are available for k <= 4");
        }
        ks = {static_cast<int>(k)};
    }
    for (int k : ks) {
        const auto d = decompose_level2_macmahon(k, order);
        Json coeffs = Json::object();
        out.text << "C_" << k << ": " << to_string(d.result.status) << " through q^" << d.result.verified_order
                 << "\n";
        for (std::size_t i = 0; i < d.labels.size(); ++i) {
            const std::string c = i < d.result.coefficients.size() ? to_string(d.result.coefficients[i]) : "?";
            coeffs[d.labels[i]] = c;
            if (c != "0") {
                out.text << "  " << c << " * " << d.labels[i] << "\n";
            }
        }
        const bool ok = d.result.status == DecompositionStatus::ExactMatch;
        out.doc["rows"].push_back({{"name", "C_" + std::to_string(k)},
                                   {"order", d.result.verified_order},
                                   {"status", to_string(d.result.status)},
                                   {"coefficients", coeffs}});
        if (!ok) {
            out.doc["violations"].push_back("C_" + std::to_string(k));
            out.exit_code = exit_mismatch;
        }
    }
}

void verify_lattice(Params &params, Rendered &out)
{
    const int order = static_cast<int>(params.integer("order", 40, 1));
    std::vector<LatticeName> names = {LatticeName::L1, LatticeName::L2, LatticeName::E8Even};
    if (params.has("lattice")) {
        const std::string text = params.text("lattice", std::nullopt);
        try {
            names = {parse_lattice_name(text)};
        } catch (const std::invalid_argument &e) {
            throw UsageError("--lattice", e.what());
        }
    }
    for (LatticeName name : names) {
        const ThetaSeries theta = theta_series(catalog_lattice(name), order);
        IdentityReport r{"r_" + to_string(name) + " = divisor-sum formula", order, std::nullopt};
        for (int n = 1; n <= order; ++n) {
            if (BigInt(static_cast<long>(theta.counts[static_cast<std::size_t>(n)])) != lattice_count_formula(name, n)) {
                r.first_mismatch = n;
                break;
            }
        }
        add_report(out, r);
    }
}

CommandResult run_verify(const CommandRequest &req)
{
    Params params(req.params);
    Rendered out("verify");
    out.doc["command"] = "verify " + req.suite;
    const std::string &suite = req.suite;
    if (params.has("perturb") && suite != "main-identity") {
        throw UsageError("--perturb", "is only supported by the main-identity suite");
    }
    if (suite == "main-identity") {
        verify_main(params, out);
    } else if (suite == "ramanujan") {
        for (const auto &r : verify_ramanujan(static_cast<int>(params.integer("order", 40, 1)))) {
            add_report(out, r);
        }
    } else if (suite == "refinement") {
        const int order = static_cast<int>(params.integer("order", 40, 1));
        long lo = 1, hi = 8;
        if (params.has("k")) {
            lo = hi = params.integer("k", std::nullopt, 1);
        }
        for (long k = lo; k <= hi; ++k) {
            add_report(out, verify_refinement(static_cast<int>(k), order));
        }
    } else if (suite == "constant-term") {
        add_report(out, verify_constant_term(static_cast<int>(params.integer("order", 40, 1))));
    } else if (suite == "moebius") {
        const long modulus = params.integer("modulus", 6, 2);
        const long k = params.integer("k", 4, 4);
        const int order = static_cast<int>(params.integer("order", 40, 1));
        if (k % 2 != 0) {
            throw UsageError("--k", "must be even");
        }
        add_report(out, verify_moebius(static_cast<int>(modulus), static_cast<int>(k), order));
    } else if (suite == "epsilon") {
        const ResidueClassSet classes = classes_from(params, 2, "1");
        const long k = params.integer("k", 4, 1);
        add_report(out, verify_epsilon_relation(classes, static_cast<int>(k),
                                                static_cast<int>(params.integer("order", 40, 1))));
    } else if (suite == "e2-dilation") {
        const long modulus = params.integer("modulus", 2, 1);
        add_report(out, verify_e2_dilation(static_cast<int>(modulus), static_cast<int>(params.integer("order", 40, 1))));
    } else if (suite == "g-vs-e") {
        const long k = params.integer("k", 4, 2);
        if (k % 2 != 0) {
            throw UsageError("--k", "must be even");
        }
        add_report(out, verify_g_vs_e(static_cast<int>(k), static_cast<int>(params.integer("order", 40, 1))));
    } else if (suite == "factorization") {
        const int order = static_cast<int>(params.integer("order", 40, 1));
        add_report(out, verify_f13_factorization(order));
        add_report(out, verify_f15_factorization(order));
    } else if (suite == "decomposition") {
        verify_decomposition(params, out);
    } else if (suite == "lattice") {
        verify_lattice(params, out);
    } else {
        throw UsageError("suite", "unknown suite '" + suite + "'");
    }
    return out.finish(params, req.format);
}

// ---- detect / lattice ----

std::pair<long, long> parse_range(const std::string &text)
{
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw UsageError("--range", "expected lo:hi, got '" + text + "'");
    }
    long bounds[2];
    const std::string pieces[2] = {text.substr(0, colon), text.substr(colon + 1)};
    for (int i = 0; i < 2; ++i) {
        std::size_t used = 0;
        try {
            bounds[i] = std::stol(pieces[i], &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (pieces[i].empty() || used != pieces[i].size()) {
            throw UsageError("--range", "expected lo:hi, got '" + text + "'");
        }
    }
    if (bounds[0] < 2 || bounds[1] < bounds[0]) {
        throw UsageError("--range", "needs 2 <= lo <= hi");
    }
    return {bounds[0], bounds[1]};
}

CommandResult run_detect(const CommandRequest &req)
{
    Params params(req.params);
    Rendered out("detect");
    const std::string expr = params.text("expr", std::nullopt);
    ExpressionId id;
    try {
        id = parse_expression(expr);
    } catch (const std::invalid_argument &e) {
        throw UsageError("--expr", e.what());
    }
    const auto [lo, hi] = parse_range(params.text("range", "2:100"));
    const Backend backend = backend_from(params);
    const DetectionReport report = detect_range(id, lo, hi, backend);
    out.text << to_string(id) << " on [" << lo << ", " << hi << "] (" << to_string(backend) << ")\n";
    for (const auto &row : report.rows) {
        out.doc["rows"].push_back({{"n", row.n},
                                   {"value", row.value.get_str()},
                                   {"sign", to_string(row.outcome.value)},
                                   {"label", row.outcome.label},
                                   {"expected", to_string(row.expected)},
                                   {"consistent", row.consistent}});
        out.text << row.n << "\t" << row.value.get_str() << "\t" << to_string(row.outcome.value) << "\t"
                 << row.outcome.label << (row.consistent ? "" : "\tVIOLATION") << "\n";
    }
    for (long n : report.violations) {
        out.doc["violations"].push_back(n);
    }
    if (report.violations.empty()) {
        out.text << "violations: none\n";
    } else {
        out.text << "violations: " << report.violations.size() << "\n";
        out.exit_code = exit_mismatch;
    }
    return out.finish(params, req.format);
}

CommandResult run_lattice(const CommandRequest &req)
{
    Params params(req.params);
    Rendered out("lattice");
    const std::string text = params.text("lattice", "E8");
    LatticeName name;
    try {
        name = parse_lattice_name(text);
    } catch (const std::invalid_argument &e) {
        throw UsageError("--lattice", e.what());
    }
    const int order = static_cast<int>(params.integer("order", 40, 1));
    const ShiftedLattice lattice = catalog_lattice(name);
    const ThetaSeries theta = theta_series(lattice, order);
    const bool half = theta.convention == NormConvention::Half;
    out.text << "Theta_" << to_string(name) << " (" << (half ? "q^(|x|^2/2)" : "q^|x|^2") << ")\n";
    for (int n = 0; n <= order; ++n) {
        const BigInt count = static_cast<long>(theta.counts[static_cast<std::size_t>(n)]);
        const BigInt formula = n == 0 ? BigInt(name == LatticeName::E8Even ? 1 : 0) : lattice_count_formula(name, n);
        out.doc["rows"].push_back({{"n", n}, {"count", count.get_str()}, {"formula", formula.get_str()}});
        out.text << n << "\t" << count.get_str() << (count == formula ? "" : "\tformula " + formula.get_str()) << "\n";
        if (count != formula) {
            out.doc["violations"].push_back(n);
            out.exit_code = exit_mismatch;
        }
    }
    return out.finish(params, req.format);
}

} // namespace

std::vector<std::string> verify_suites()
{
    return {"main-identity", "ramanujan",     "refinement",    "constant-term", "moebius",
            "epsilon",       "e2-dilation",   "g-vs-e",        "factorization", "decomposition",
            "lattice"};
}

ParseOutcome parse(const std::vector<std::string> &args)
{
    CLI::App app("Exact MacMahon partition functions, q-series identities and prime-detecting expressions",
                 "macmahon");
    app.require_subcommand(1);
    std::map<std::string, std::map<std::string, std::string>> values;
    std::map<std::string, bool> json;
    std::string suite;
    for (const auto &[sub_name, flags] : subcommand_flags()) {
        CLI::App *sub = app.add_subcommand(sub_name, subcommand_help().at(sub_name));
        for (const auto &flag : flags) {
            sub->add_option("--" + flag.name, values[sub_name][flag.name], flag.help);
        }
        sub->add_flag("--json", json[sub_name], "machine-readable output");
        if (sub_name == "verify") {
            std::string names;
            for (const auto &s : verify_suites()) {
                names += (names.empty() ? "" : ", ") + s;
            }
            sub->add_option("suite", suite, "one of: " + names)->required();
        }
    }
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        return {std::nullopt, {exit_ok, app.help()}};
    } catch (const CLI::ParseError &e) {
        return {std::nullopt, {exit_usage, std::string("usage error: ") + e.what() + "\n"}};
    }
    CommandRequest req;
    const CLI::App *chosen = app.get_subcommands().front();
    req.subcommand = chosen->get_name();
    req.suite = suite;
    req.format = json[req.subcommand] ? OutputFormat::Json : OutputFormat::Text;
    for (const auto &flag : subcommand_flags().at(req.subcommand)) {
        if (chosen->get_option("--" + flag.name)->count() > 0) {
            req.params[flag.name] = values[req.subcommand][flag.name];
        }
    }
    return {req, {}};
}

CommandResult run(const CommandRequest &request)
{
    try {
        if (request.subcommand == "series") {
            return run_series(request);
        }
        if (request.subcommand == "mk") {
            return run_mk(request);
        }
        if (request.subcommand == "verify") {
            return run_verify(request);
        }
        if (request.subcommand == "detect") {
            return run_detect(request);
        }
        if (request.subcommand == "lattice") {
            return run_lattice(request);
        }
        throw UsageError("subcommand", "unknown subcommand '" + request.subcommand + "'");
    } catch (const UsageError &e) {
        return {exit_usage, std::string("usage error: ") + e.what() + "\n"};
    } catch (const std::invalid_argument &e) {
        return {exit_usage, std::string("usage error: ") + e.what() + "\n"};
    }
}

CommandResult run_command_line(const std::vector<std::string> &args)
{
    ParseOutcome parsed = parse(args);
    if (!parsed.request) {
        return parsed.result;
    }
    return run(*parsed.request);
}

} // namespace macmahon::cli
