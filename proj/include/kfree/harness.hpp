#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "kfree/generators.hpp"
#include "kfree/graph.hpp"
#include "kfree/verifiers.hpp"

namespace kfree {

enum class TheoremId { ext_bt, ext_jin, ext_cjk, thm_a, thm_b, thm_c, aes, lemma_redu };

std::string_view theorem_name(TheoremId id);
std::optional<TheoremId> theorem_from_name(std::string_view name);

enum class ScanMode { exhaustive, iso_reduced, generated };

std::string_view mode_name(ScanMode m);
std::optional<ScanMode> mode_from_name(std::string_view name);

struct TheoremParams {
    TheoremId id = TheoremId::thm_c;
    std::size_t r_min = 2;
    std::size_t r_max = 2;
    std::size_t k_min = 1;
    std::size_t k_max = 1;
    std::size_t n_min = 1;
    std::size_t n_max = 7;
    ScanMode mode = ScanMode::exhaustive;
    SearchBudget budget;

    nlohmann::ordered_json to_json() const;
};

enum class Verdict { pass, fail, vacuous, inconclusive };

std::string_view to_string(Verdict v);

/// A graph violating a claim, with everything needed to re-check it from graph6 alone.
struct Counterexample {
    std::string graph6;
    std::string claim;
    std::size_t r = 0;
    std::size_t k = 0;
    nlohmann::ordered_json measured;
    bool revalidated = false;
    std::optional<Certificate> certificate;

    nlohmann::ordered_json to_json() const;
};

struct FormulaRow {
    std::string instance;
    std::string quantity;
    std::string predicted;
    std::string relation;
    std::string measured;
    bool ok = true;
};

struct AuditReport {
    std::string claim;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    std::uint64_t instances_scanned = 0;
    std::uint64_t hypothesis_instances = 0;
    std::vector<Counterexample> counterexamples;
    std::vector<std::string> budget_exhausted;
    std::vector<FormulaRow> formula_table;
    std::vector<std::string> notes;

    /// fail iff a counterexample exists; vacuous iff no instance met the hypothesis.
    Verdict verdict() const;
    nlohmann::ordered_json to_json() const;
    void merge(AuditReport&& other);
};

/// Coefficient c of the strict hypothesis "min degree > c * n".
Rational theorem_threshold(TheoremId id, std::size_t r, std::size_t k);
/// delta > c * n, by cross-multiplication.
bool exceeds(std::size_t delta, std::size_t n, const Rational& c);
/// The theorem's main hypothesis: K_{r+1}-freeness (K_3 for thmA/B/C) and the strict degree bound.
bool hypothesis_holds(TheoremId id, std::size_t r, std::size_t k, const Graph& g, SearchBudget budget = {});

struct TheoremOutcome {
    bool hypothesis = false;
    bool holds = true;
    bool exhausted = false;
    std::optional<Certificate> certificate;
};

/// Evaluates one graph against one theorem instance.
TheoremOutcome evaluate_theorem(TheoremId id, std::size_t r, std::size_t k, const Graph& g,
                                SearchBudget budget = {});

AuditReport check_theorem(const TheoremParams& p);

/// Maximal completions of K_{r+1}-free graphs with min degree > (1-2/(2r-1))n have a lemma vertex
/// and project onto K_1 + N(u). Requires r >= 3.
AuditReport check_lemma(std::size_t r, std::size_t n_min, std::size_t n_max, ScanMode mode = ScanMode::exhaustive,
                        SearchBudget budget = {});

/// Measured order, size, degrees, clique and chromatic numbers.
nlohmann::ordered_json measure(const Graph& g, SearchBudget budget = {});

/// Re-derives the counterexample from its graph6 string and confirms it still violates its claim.
bool revalidate(const Counterexample& c, SearchBudget budget = {});

/// Builds the instance and compares measured invariants against the family's closed forms.
AuditReport audit_example(const FamilySpec& spec, SearchBudget budget = {});
/// Same audit against a caller-supplied graph standing in for generate(spec).
AuditReport audit_graph(const FamilySpec& spec, const Graph& g, SearchBudget budget = {});

/// A_{k+1} + K_{r-2} admits no homomorphism into A_k + K_{r-2}.
AuditReport audit_tightness(std::size_t k, std::size_t r, SearchBudget budget = {});

/// Exact psi values for n <= 8 against the upper bounds, plus generated lower-bound witnesses.
AuditReport psi_bounds_report(std::size_t r, std::size_t n_min, std::size_t n_max, SearchBudget budget = {});

struct SuiteOptions {
    /// Replaces generate() for audit checks; used for fault injection.
    std::function<Graph(const FamilySpec&)> generator;
    bool include_envelope = false;
};

struct SuiteResult {
    std::vector<AuditReport> reports;
    Verdict verdict = Verdict::pass;
    /// 0 pass, 1 any failure, 2 inconclusive (budget).
    int exit_code = 0;
    nlohmann::ordered_json to_json(bool include_envelope = false) const;
};

/// config: {"checks": [{"id", "params", "mode", "budget"}]}.
SuiteResult run_suite(const nlohmann::json& config, const SuiteOptions& options = {});
nlohmann::json default_suite_config();

}  // namespace kfree
