// kfree command-line front end. Exit codes: 0 pass, 1 fail, 2 usage or budget error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kfree/enumeration.hpp"
#include "kfree/generators.hpp"
#include "kfree/harness.hpp"
#include "kfree/io.hpp"
#include "kfree/verifiers.hpp"

using namespace kfree;
using nlohmann::ordered_json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

SearchBudget budget_from_env() {
    SearchBudget budget;
    if (const char* env = std::getenv("KFREE_NODE_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || v == 0) throw UsageError("KFREE_NODE_BUDGET must be a positive integer");
        budget.max_nodes = v;
    }
    return budget;
}

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty()) out.push_back(line);
    }
    return out;
}

/// A family spec ("andrasfai:k=2") or a graph6 string.
Graph graph_argument(const std::string& text) {
    if (text.find(':') != std::string::npos) return generate(FamilySpec::parse(text));
    return from_graph6(text);
}

int verdict_code(Verdict v) {
    switch (v) {
        case Verdict::pass:
        case Verdict::vacuous: return kPass;
        case Verdict::fail: return kFail;
        case Verdict::inconclusive: return kUsage;
    }
    return kUsage;
}

// ---------------------------------------------------------------------------

struct GenArgs {
    std::string spec;
    std::string format = "graph6";
};

int run_gen(const GenArgs& a) {
    const Graph g = generate(FamilySpec::parse(a.spec));
    if (a.format == "graph6") std::cout << to_graph6(g) << '\n';
    else if (a.format == "dot") std::cout << to_dot(g);
    else std::cout << to_adjacency_json(g).dump() << '\n';
    return kPass;
}

struct VerifyArgs {
    std::string input = "-";
    std::optional<std::size_t> clique_free;
    std::optional<std::size_t> chromatic;
    std::optional<std::size_t> colorable;
    std::vector<std::string> min_degree_gt;
    bool regular = false;
    std::optional<std::size_t> regular_degree;
    std::string hom_to;
    std::string contains;
    bool json = false;
};

struct Check {
    std::string property;
    std::string measured;
    std::optional<bool> ok;  // nullopt: budget exhausted
    std::optional<Certificate> certificate;
};

std::vector<Check> verify_one(const Graph& g, const VerifyArgs& a, SearchBudget budget) {
    std::vector<Check> out;
    const auto status_ok = [](SearchStatus s, bool want_found) -> std::optional<bool> {
        if (s == SearchStatus::budget_exhausted) return std::nullopt;
        return (s == SearchStatus::found) == want_found;
    };
    if (a.clique_free) {
        const auto res = find_clique(g, *a.clique_free, budget);
        Check c{"clique-free " + std::to_string(*a.clique_free), std::string(to_string(res.status)),
                status_ok(res.status, false), std::nullopt};
        if (res.found()) c.certificate = Certificate::of(g, *res.witness);
        out.push_back(std::move(c));
    }
    if (a.chromatic) {
        const auto res = chromatic_number(g, budget);
        Check c{"chromatic " + std::to_string(*a.chromatic), "", std::nullopt, std::nullopt};
        if (res.status == SearchStatus::found) {
            c.measured = std::to_string(res.value);
            c.ok = res.value == *a.chromatic;
            c.certificate = Certificate::of(g, res.witness);
        } else {
            c.measured = "budget_exhausted";
        }
        out.push_back(std::move(c));
    }
    if (a.colorable) {
        const auto res = is_k_colorable(g, *a.colorable, budget);
        Check c{"colorable " + std::to_string(*a.colorable), std::string(to_string(res.status)),
                status_ok(res.status, true), std::nullopt};
        if (res.found()) c.certificate = Certificate::of(g, *res.witness);
        out.push_back(std::move(c));
    }
    if (!a.min_degree_gt.empty()) {
        const Rational coeff = parse_rational(a.min_degree_gt[0]);
        const bool of_n = a.min_degree_gt.size() > 1;
        const Rational bound = of_n ? coeff * static_cast<std::int64_t>(g.order()) : coeff;
        const std::size_t d = g.order() == 0 ? 0 : min_degree(g);
        out.push_back({"min-degree > " + format_rational(bound), std::to_string(d),
                       Rational(static_cast<std::int64_t>(d)) > bound, std::nullopt});
    }
    if (a.regular) {
        const auto reg = is_regular(g);
        const bool ok = reg && (!a.regular_degree || *reg == *a.regular_degree);
        out.push_back({a.regular_degree ? "regular " + std::to_string(*a.regular_degree) : "regular",
                       reg ? std::to_string(*reg) : "irregular", ok, std::nullopt});
    }
    if (!a.hom_to.empty()) {
        const Graph target = graph_argument(a.hom_to);
        const auto res = find_homomorphism(g, target, budget);
        Check c{"hom-to " + a.hom_to, std::string(to_string(res.status)), status_ok(res.status, true), std::nullopt};
        if (res.found()) c.certificate = Certificate::of(g, target, *res.witness);
        out.push_back(std::move(c));
    }
    if (!a.contains.empty()) {
        const Graph pattern = graph_argument(a.contains);
        const auto res = contains_subgraph(g, pattern, budget);
        Check c{"contains " + a.contains, std::string(to_string(res.status)), status_ok(res.status, true),
                std::nullopt};
        if (res.found()) c.certificate = Certificate::of(g, pattern, *res.witness);
        out.push_back(std::move(c));
    }
    return out;
}

int run_verify(const VerifyArgs& a) {
    const SearchBudget budget = budget_from_env();
    // Parse everything first so a malformed line fails before any output.
    std::vector<Graph> graphs;
    const auto lines = lines_of(read_all(a.input));
    for (const auto& line : lines) {
        try {
            graphs.push_back(from_graph6(line));
        } catch (const std::invalid_argument& e) {
            throw UsageError("line '" + line + "': " + e.what());
        }
    }
    bool failed = false;
    bool exhausted = false;
    auto doc = ordered_json::array();
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const auto checks = verify_one(graphs[i], a, budget);
        bool all_ok = true;
        for (const auto& c : checks) {
            if (!c.ok) exhausted = true;
            else if (!*c.ok) all_ok = false;
        }
        failed = failed || !all_ok;
        if (a.json) {
            ordered_json entry;
            entry["index"] = i;
            entry["graph6"] = lines[i];
            entry["order"] = graphs[i].order();
            auto props = ordered_json::array();
            for (const auto& c : checks) {
                ordered_json p;
                p["property"] = c.property;
                p["measured"] = c.measured;
                p["result"] = !c.ok ? "budget_exhausted" : *c.ok ? "pass" : "fail";
                if (c.certificate) p["certificate"] = c.certificate->to_json();
                props.push_back(std::move(p));
            }
            entry["checks"] = std::move(props);
            entry["result"] = all_ok ? "pass" : "fail";
            doc.push_back(std::move(entry));
        } else {
            std::cout << lines[i];
            for (const auto& c : checks)
                std::cout << "\t" << c.property << ": " << c.measured << " "
                          << (!c.ok ? "EXHAUSTED" : *c.ok ? "PASS" : "FAIL");
            std::cout << "\t" << (all_ok ? "PASS" : "FAIL") << '\n';
        }
    }
    if (a.json) std::cout << doc.dump(2) << '\n';
    if (failed) return kFail;
    return exhausted ? kUsage : kPass;
}

struct PsiArgs {
    std::size_t n = 0, r = 0, h = 0;
};

int run_psi(const PsiArgs& a) {
    const PsiResult psi = psi_oracle(a.n, a.r, a.h, budget_from_env());
    ordered_json doc;
    doc["n"] = psi.n;
    doc["r"] = psi.r;
    doc["h"] = psi.h;
    doc["value"] = psi.value ? ordered_json(*psi.value) : ordered_json(nullptr);
    doc["witness"] = psi.witness ? ordered_json(to_graph6(*psi.witness)) : ordered_json(nullptr);
    doc["graphs_scanned"] = psi.graphs_scanned;
    doc["status"] = std::string(to_string(psi.status));
    std::cout << doc.dump(2) << '\n';
    return psi.status == SearchStatus::budget_exhausted ? kUsage : kPass;
}

struct TheoremArgs {
    std::string id;
    std::size_t r = 2, k = 1;
    std::optional<std::size_t> r_max, k_max;
    std::size_t n_min = 1, n_max = 7;
    std::string mode = "exhaustive";
};

int run_theorem(const TheoremArgs& a) {
    const auto id = theorem_from_name(a.id);
    if (!id) throw UsageError("unknown theorem '" + a.id + "'");
    const auto mode = mode_from_name(a.mode);
    if (!mode) throw UsageError("unknown mode '" + a.mode + "'");
    TheoremParams p;
    p.id = *id;
    p.r_min = a.r;
    p.r_max = a.r_max.value_or(a.r);
    p.k_min = a.k;
    p.k_max = a.k_max.value_or(a.k);
    p.n_min = a.n_min;
    p.n_max = a.n_max;
    p.mode = *mode;
    p.budget = budget_from_env();
    const AuditReport report = check_theorem(p);
    std::cout << report.to_json().dump(2) << '\n';
    return verdict_code(report.verdict());
}

int run_audit(const std::string& spec) {
    const AuditReport report = audit_example(FamilySpec::parse(spec), budget_from_env());
    std::cout << report.to_json().dump(2) << '\n';
    return verdict_code(report.verdict());
}

struct SuiteArgs {
    std::string config;
    bool envelope = false;
};

int run_suite_verb(const SuiteArgs& a) {
    nlohmann::json config = default_suite_config();
    if (!a.config.empty()) {
        try {
            config = nlohmann::json::parse(read_all(a.config));
        } catch (const nlohmann::json::exception& e) {
            throw UsageError(std::string("config: ") + e.what());
        }
    }
    SuiteOptions options;
    options.include_envelope = a.envelope;
    const SuiteResult result = run_suite(config, options);
    std::cout << result.to_json(a.envelope).dump(2) << '\n';
    return result.exit_code;
}

int run_check_cert(const std::string& path) {
    Certificate cert;
    try {
        cert = Certificate::from_json(nlohmann::json::parse(read_all(path)));
    } catch (const std::exception& e) {
        throw UsageError(std::string("certificate: ") + e.what());
    }
    const bool ok = check_certificate(cert);
    std::cout << to_string(cert.kind) << ": " << (ok ? "valid" : "invalid") << '\n';
    return ok ? kPass : kFail;
}

struct ConvertArgs {
    std::string input = "-";
    std::string from = "graph6";
    std::string to = "json";
};

int run_convert(const ConvertArgs& a) {
    std::vector<Graph> graphs;
    for (const auto& line : lines_of(read_all(a.input))) {
        try {
            if (a.from == "graph6") graphs.push_back(from_graph6(line));
            else graphs.push_back(from_adjacency_json(nlohmann::json::parse(line)));
        } catch (const std::exception& e) {
            throw UsageError("line '" + line + "': " + e.what());
        }
    }
    for (const Graph& g : graphs) {
        if (a.to == "graph6") std::cout << to_graph6(g) << '\n';
        else if (a.to == "json") std::cout << to_adjacency_json(g).dump() << '\n';
        else std::cout << to_dot(g);
    }
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"K_{r+1}-free graph families: generation, exact verification, exhaustive checks"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "generate a family instance");
    gen_cmd->add_option("spec", gen.spec, "family spec, e.g. andrasfai:k=4")->required();
    gen_cmd->add_option("--format", gen.format, "graph6, dot or json")->check(CLI::IsMember({"graph6", "dot", "json"}));

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "check properties of graph6 graphs, one per line");
    verify_cmd->add_option("--input", verify.input, "graph6 file, '-' for stdin");
    verify_cmd->add_option("--clique-free", verify.clique_free, "no clique of this size");
    verify_cmd->add_option("--chromatic", verify.chromatic, "exact chromatic number");
    verify_cmd->add_option("--colorable", verify.colorable, "k-colourable");
    verify_cmd->add_option("--min-degree-gt", verify.min_degree_gt, "rational bound, optionally followed by 'of-n'")
        ->expected(1, 2);
    auto* regular_opt = verify_cmd->add_option("--regular", verify.regular_degree, "regular (optionally of degree d)")
                            ->expected(0, 1);
    verify_cmd->add_option("--hom-to", verify.hom_to, "target as family spec or graph6");
    verify_cmd->add_option("--contains", verify.contains, "pattern as family spec or graph6");
    verify_cmd->add_flag("--json", verify.json, "JSON output with certificates");

    PsiArgs psi;
    auto* psi_cmd = app.add_subcommand("psi", "max min-degree over K_{r+1}-free graphs with chromatic number >= h");
    psi_cmd->add_option("n", psi.n, "order")->required();
    psi_cmd->add_option("r", psi.r, "clique bound: K_{r+1}-free")->required();
    psi_cmd->add_option("chi", psi.h, "chromatic lower bound h")->required();

    TheoremArgs theorem;
    auto* theorem_cmd = app.add_subcommand("theorem", "scan a theorem over a graph stream");
    theorem_cmd->add_option("id", theorem.id, "extBT, extJin, extCJK, thmA, thmB, thmC, aes, lemma-redu")->required();
    theorem_cmd->add_option("--r", theorem.r);
    theorem_cmd->add_option("--r-max", theorem.r_max);
    theorem_cmd->add_option("--k", theorem.k);
    theorem_cmd->add_option("--k-max", theorem.k_max);
    theorem_cmd->add_option("--n-min", theorem.n_min);
    theorem_cmd->add_option("--n-max", theorem.n_max);
    theorem_cmd->add_option("--mode", theorem.mode, "exhaustive, iso-reduced or generated-instances");

    std::string audit_spec;
    auto* audit_cmd = app.add_subcommand("audit", "compare an instance against its closed forms");
    audit_cmd->add_option("spec", audit_spec)->required();

    SuiteArgs suite;
    auto* suite_cmd = app.add_subcommand("suite", "run a suite of checks");
    suite_cmd->add_option("--config", suite.config, "suite JSON; the built-in suite when omitted");
    suite_cmd->add_flag("--envelope", suite.envelope, "add a timestamp envelope");

    std::string cert_path;
    auto* cert_cmd = app.add_subcommand("check-cert", "re-validate a certificate file");
    cert_cmd->add_option("file", cert_path, "certificate JSON, '-' for stdin")->required();

    ConvertArgs convert;
    auto* convert_cmd = app.add_subcommand("convert", "convert between graph6, adjacency JSON and DOT");
    convert_cmd->add_option("--input", convert.input);
    convert_cmd->add_option("--from", convert.from)->check(CLI::IsMember({"graph6", "json"}));
    convert_cmd->add_option("--to", convert.to)->check(CLI::IsMember({"graph6", "json", "dot"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }
    verify.regular = regular_opt->count() > 0;
    if (verify.min_degree_gt.size() == 2 && verify.min_degree_gt[1] != "of-n") {
        std::cerr << "error: --min-degree-gt takes a rational and an optional 'of-n'\n";
        return kUsage;
    }

    try {
        if (*gen_cmd) return run_gen(gen);
        if (*verify_cmd) return run_verify(verify);
        if (*psi_cmd) return run_psi(psi);
        if (*theorem_cmd) return run_theorem(theorem);
        if (*audit_cmd) return run_audit(audit_spec);
        if (*suite_cmd) return run_suite_verb(suite);
        if (*cert_cmd) return run_check_cert(cert_path);
        if (*convert_cmd) return run_convert(convert);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
