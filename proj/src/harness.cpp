#include "kfree/harness.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <stdexcept>

#include "kfree/enumeration.hpp"
#include "kfree/io.hpp"

namespace kfree {

using nlohmann::ordered_json;

namespace {

constexpr std::size_t kMaxStoredCounterexamples = 32;

struct TheoremInfo {
    TheoremId id;
    std::string_view name;
};

constexpr TheoremInfo kTheorems[] = {
    {TheoremId::ext_bt, "extBT"}, {TheoremId::ext_jin, "extJin"}, {TheoremId::ext_cjk, "extCJK"},
    {TheoremId::thm_a, "thmA"},   {TheoremId::thm_b, "thmB"},     {TheoremId::thm_c, "thmC"},
    {TheoremId::aes, "aes"},      {TheoremId::lemma_redu, "lemma-redu"},
};

bool triangle_case(TheoremId id) {
    return id == TheoremId::thm_a || id == TheoremId::thm_b || id == TheoremId::thm_c;
}

bool uses_k(TheoremId id) {
    return id == TheoremId::ext_jin || id == TheoremId::ext_cjk || id == TheoremId::thm_a || id == TheoremId::thm_b;
}

Rational one_minus(std::int64_t num, std::int64_t den) { return Rational(1) - Rational(num, den); }

Rational base_threshold(std::size_t r) {
    return one_minus(2, 2 * static_cast<std::int64_t>(r) - 1);
}

Rational andrasfai_threshold(std::size_t r, std::size_t k) {
    return one_minus(2 * static_cast<std::int64_t>(k) - 1, static_cast<std::int64_t>(andrasfai_modulus(r, k)));
}

Rational jin_threshold(std::size_t k) {
    return Rational(static_cast<std::int64_t>(k) + 1, 3 * static_cast<std::int64_t>(k) + 2);
}

/// A_k + K_{r-2}
Graph andrasfai_target(std::size_t k, std::size_t r) { return join(andrasfai(k), complete(r - 2)); }

/// M_3 + K_{r-2}
Graph mycielski_pattern(std::size_t r) { return join(mycielski(3), complete(r - 2)); }

std::optional<std::size_t> turan_min_degree(std::size_t p, std::size_t x) {
    if (x == 0) return std::nullopt;
    return x - (x + p - 1) / p;
}

std::string str(std::size_t v) { return std::to_string(v); }

}  // namespace

std::string_view theorem_name(TheoremId id) {
    for (const auto& t : kTheorems)
        if (t.id == id) return t.name;
    return "?";
}

std::optional<TheoremId> theorem_from_name(std::string_view name) {
    for (const auto& t : kTheorems)
        if (t.name == name) return t.id;
    return std::nullopt;
}

std::string_view mode_name(ScanMode m) {
    switch (m) {
        case ScanMode::exhaustive: return "exhaustive";
        case ScanMode::iso_reduced: return "iso-reduced";
        case ScanMode::generated: return "generated-instances";
    }
    return "?";
}

std::optional<ScanMode> mode_from_name(std::string_view name) {
    for (auto m : {ScanMode::exhaustive, ScanMode::iso_reduced, ScanMode::generated})
        if (mode_name(m) == name) return m;
    if (name == "generated") return ScanMode::generated;
    return std::nullopt;
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::vacuous: return "vacuous";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

ordered_json TheoremParams::to_json() const {
    ordered_json doc;
    doc["theorem"] = std::string(theorem_name(id));
    doc["r_min"] = r_min;
    doc["r_max"] = r_max;
    if (uses_k(id)) {
        doc["k_min"] = k_min;
        doc["k_max"] = k_max;
    }
    doc["n_min"] = n_min;
    doc["n_max"] = n_max;
    doc["mode"] = std::string(mode_name(mode));
    doc["budget"] = budget.max_nodes;
    return doc;
}

ordered_json Counterexample::to_json() const {
    ordered_json doc;
    doc["graph6"] = graph6;
    doc["claim"] = claim;
    doc["r"] = r;
    doc["k"] = k;
    doc["measured"] = measured;
    doc["revalidated"] = revalidated;
    if (certificate) doc["certificate"] = certificate->to_json();
    return doc;
}

Verdict AuditReport::verdict() const {
    if (!counterexamples.empty()) return Verdict::fail;
    if (!budget_exhausted.empty()) return Verdict::inconclusive;
    if (hypothesis_instances == 0) return Verdict::vacuous;
    return Verdict::pass;
}

ordered_json AuditReport::to_json() const {
    ordered_json doc;
    doc["claim"] = claim;
    doc["params"] = params;
    doc["verdict"] = std::string(to_string(verdict()));
    doc["instances_scanned"] = instances_scanned;
    doc["hypothesis_instances"] = hypothesis_instances;
    auto cex = ordered_json::array();
    for (const auto& c : counterexamples) cex.push_back(c.to_json());
    doc["counterexamples"] = std::move(cex);
    doc["budget_exhausted"] = budget_exhausted;
    auto rows = ordered_json::array();
    for (const auto& row : formula_table) {
        ordered_json r;
        r["instance"] = row.instance;
        r["quantity"] = row.quantity;
        r["predicted"] = row.predicted;
        r["relation"] = row.relation;
        r["measured"] = row.measured;
        r["ok"] = row.ok;
        rows.push_back(std::move(r));
    }
    doc["formula_table"] = std::move(rows);
    doc["notes"] = notes;
    return doc;
}

void AuditReport::merge(AuditReport&& other) {
    instances_scanned += other.instances_scanned;
    hypothesis_instances += other.hypothesis_instances;
    for (auto& c : other.counterexamples)
        if (counterexamples.size() < kMaxStoredCounterexamples) counterexamples.push_back(std::move(c));
    for (auto& b : other.budget_exhausted)
        if (budget_exhausted.size() < kMaxStoredCounterexamples) budget_exhausted.push_back(std::move(b));
    for (auto& row : other.formula_table) formula_table.push_back(std::move(row));
    for (auto& note : other.notes)
        if (std::find(notes.begin(), notes.end(), note) == notes.end()) notes.push_back(std::move(note));
}

// ---------------------------------------------------------------------------
// Hypotheses and conclusions

Rational theorem_threshold(TheoremId id, std::size_t r, std::size_t k) {
    switch (id) {
        case TheoremId::thm_c:
        case TheoremId::thm_b: return Rational(1, 3);
        case TheoremId::thm_a: return jin_threshold(k);
        case TheoremId::ext_bt:
        case TheoremId::ext_cjk:
        case TheoremId::lemma_redu: return base_threshold(r);
        case TheoremId::ext_jin: return andrasfai_threshold(r, k);
        case TheoremId::aes: return one_minus(3, 3 * static_cast<std::int64_t>(r) - 1);
    }
    throw std::logic_error("unknown theorem");
}

bool exceeds(std::size_t delta, std::size_t n, const Rational& c) {
    return static_cast<std::int64_t>(delta) * c.denominator() > c.numerator() * static_cast<std::int64_t>(n);
}

bool hypothesis_holds(TheoremId id, std::size_t r, std::size_t k, const Graph& g, SearchBudget budget) {
    const auto outcome = evaluate_theorem(id, triangle_case(id) ? 2 : r, k, g, budget);
    return outcome.hypothesis;
}

TheoremOutcome evaluate_theorem(TheoremId id, std::size_t r, std::size_t k, const Graph& g, SearchBudget budget) {
    TheoremOutcome out;
    if (triangle_case(id)) r = 2;
    const std::size_t n = g.order();
    if (n == 0) return out;
    const std::size_t delta = min_degree(g);

    if (id == TheoremId::lemma_redu) {
        // g itself must be maximal K_{r+1}-free.
        if (!exceeds(delta, n, base_threshold(r))) return out;
        if (!is_maximal_clique_free(g, r + 1, budget)) return out;
        out.hypothesis = true;
        const auto u = lemma_vertex(g);
        if (!u) {
            out.holds = false;
            return out;
        }
        const auto dec = decompose_by_lemma(g, u->vertex);
        const auto solved = find_homomorphism(g, dec.quotient_target, budget);
        if (solved.exhausted()) out.exhausted = true;
        out.holds = dec.independent_part.edge_count() == 0 &&
                    check_homomorphism(g, dec.quotient_target, dec.projection) && !solved.absent();
        out.certificate = Certificate::of(g, *u);
        return out;
    }

    if (!exceeds(delta, n, theorem_threshold(id, r, k))) return out;
    const auto clique = find_clique(g, r + 1, budget);
    if (clique.exhausted()) {
        out.exhausted = true;
        return out;
    }
    if (clique.found()) return out;
    out.hypothesis = true;

    auto colorable = [&](std::size_t c) {
        auto res = is_k_colorable(g, c, budget);
        if (res.exhausted()) out.exhausted = true;
        if (res.found()) out.certificate = Certificate::of(g, *res.witness);
        return res;
    };
    auto homomorphic_to = [&](const Graph& target) {
        auto res = find_homomorphism(g, target, budget);
        if (res.exhausted()) out.exhausted = true;
        if (res.found()) out.certificate = Certificate::of(g, target, *res.witness);
        out.holds = !res.absent();
    };
    auto contains = [&](const Graph& pattern) {
        auto res = contains_subgraph(g, pattern, budget);
        if (res.exhausted()) out.exhausted = true;
        if (res.found()) out.certificate = Certificate::of(g, pattern, *res.witness);
        out.holds = !res.absent();
    };

    switch (id) {
        case TheoremId::thm_c: out.holds = !colorable(4).absent(); break;
        case TheoremId::ext_bt: out.holds = !colorable(r + 2).absent(); break;
        case TheoremId::aes: out.holds = !colorable(r).absent(); break;
        case TheoremId::thm_a: homomorphic_to(andrasfai(k)); break;
        case TheoremId::ext_jin: homomorphic_to(andrasfai_target(k, r)); break;
        case TheoremId::thm_b: {
            const auto three = colorable(3);
            if (three.absent()) {
                contains(mycielski(3));
            } else if (three.found() && colorable(2).absent() && exceeds(delta, n, jin_threshold(k))) {
                homomorphic_to(andrasfai(k));
            }
            break;
        }
        case TheoremId::ext_cjk: {
            const auto res = colorable(r + 1);
            if (res.absent()) {
                contains(mycielski_pattern(r));
            } else if (res.found() && exceeds(delta, n, andrasfai_threshold(r, k))) {
                homomorphic_to(andrasfai_target(k, r));
            }
            break;
        }
        case TheoremId::lemma_redu: break;
    }
    if (out.exhausted && out.holds) out.holds = true;
    return out;
}

ordered_json measure(const Graph& g, SearchBudget budget) {
    ordered_json doc;
    doc["order"] = g.order();
    doc["edges"] = g.edge_count();
    if (g.order() == 0) return doc;
    doc["min_degree"] = min_degree(g);
    doc["max_degree"] = max_degree(g);
    const auto reg = is_regular(g);
    doc["regular"] = reg ? ordered_json(*reg) : ordered_json(nullptr);
    const auto omega = clique_number(g, budget);
    doc["clique_number"] = omega.status == SearchStatus::found ? ordered_json(omega.value) : ordered_json("budget_exhausted");
    const auto chi = chromatic_number(g, budget);
    doc["chromatic_number"] = chi.status == SearchStatus::found ? ordered_json(chi.value) : ordered_json("budget_exhausted");
    return doc;
}

bool revalidate(const Counterexample& c, SearchBudget budget) {
    const Graph g = from_graph6(c.graph6);
    if (auto id = theorem_from_name(c.claim)) {
        const auto outcome = evaluate_theorem(*id, c.r, c.k, g, budget);
        return outcome.hypothesis && !outcome.holds && !outcome.exhausted;
    }
    return measure(g, budget) == c.measured;
}

// ---------------------------------------------------------------------------
// Scans

namespace {

std::vector<std::size_t> range(std::size_t lo, std::size_t hi) {
    std::vector<std::size_t> out;
    for (std::size_t v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

/// Structured instances for generated-instances mode.
std::vector<Graph> generated_corpus(std::size_t r_max) {
    std::vector<Graph> base;
    for (std::size_t k = 1; k <= 5; ++k) base.push_back(andrasfai(k));
    for (std::size_t k = 2; k <= 3; ++k) base.push_back(blow_up(andrasfai(k), 2));
    for (std::size_t i = 2; i <= 3; ++i) base.push_back(mycielski(i));
    base.push_back(haggkvist(1));
    base.push_back(kneser(2, 1));
    base.push_back(hajnal(17, 2, 1));
    base.push_back(cycle(7));

    std::vector<Graph> corpus = base;
    for (std::size_t r = 3; r <= r_max; ++r) {
        for (const auto& g : base)
            for (std::size_t s : {r - 2, 2 * (r - 2)}) corpus.push_back(join(turan(r - 2, s), g));
        corpus.push_back(haggkvist_extended(r, haggkvist_modulus(r)));
        for (std::size_t k = 1; k <= 3; ++k) corpus.push_back(andrasfai_blowup_example(r, k, andrasfai_modulus(r, k)));
    }
    return corpus;
}

/// Calls visit(graph, report) for every graph in scope; per-shard reports merge in a fixed order.
void scan(ScanMode mode, std::size_t n_min, std::size_t n_max, std::size_t r_max, AuditReport& report,
          const std::function<void(const Graph&, AuditReport&)>& visit) {
    switch (mode) {
        case ScanMode::exhaustive: {
            if (n_max > kMaxLabeledOrder) throw std::invalid_argument("exhaustive scans are limited to n <= 7");
            for (std::size_t n = n_min; n <= n_max; ++n) {
                std::vector<AuditReport> shards(shard_count());
                parallel_for_shards(shard_count(), [&](std::size_t s) {
                    for_each_labeled_graph_in_shard(n, s, [&](const Graph& g) { visit(g, shards[s]); });
                });
                for (auto& part : shards) report.merge(std::move(part));
            }
            break;
        }
        case ScanMode::iso_reduced: {
            if (n_max > kMaxIsoReducedOrder) throw std::invalid_argument("iso-reduced scans are limited to n <= 9");
            for (std::size_t n = n_min; n <= n_max; ++n)
                for (const Graph& g : iso_reduced_graphs(n)) visit(g, report);
            break;
        }
        case ScanMode::generated: {
            for (const Graph& g : generated_corpus(r_max)) visit(g, report);
            break;
        }
    }
}

void add_counterexample(AuditReport& report, Counterexample c, SearchBudget budget) {
    c.revalidated = revalidate(c, budget);
    if (report.counterexamples.size() < kMaxStoredCounterexamples) report.counterexamples.push_back(std::move(c));
}

void validate_k(TheoremId id, std::size_t k_max) {
    if ((id == TheoremId::thm_a || id == TheoremId::ext_jin) && k_max > 9)
        throw std::invalid_argument(std::string(theorem_name(id)) +
                                    " is stated only for 1 <= k <= 9; extended Haggkvist graphs show the "
                                    "homomorphism conclusion can fail for k >= 10");
}

}  // namespace

AuditReport check_theorem(const TheoremParams& p) {
    if (p.id == TheoremId::lemma_redu) {
        AuditReport merged;
        for (std::size_t r = p.r_min; r <= p.r_max; ++r) merged.merge(check_lemma(r, p.n_min, p.n_max, p.mode, p.budget));
        merged.claim = "lemma-redu";
        merged.params = p.to_json();
        return merged;
    }
    if (p.k_min < 1 && uses_k(p.id)) throw std::invalid_argument("k must be at least 1");
    if (p.n_min > p.n_max) throw std::invalid_argument("empty n range");
    validate_k(p.id, p.k_max);

    std::vector<std::size_t> rs = triangle_case(p.id) ? std::vector<std::size_t>{2} : range(p.r_min, p.r_max);
    if (rs.empty() || rs.front() < 2) throw std::invalid_argument("r must be at least 2");
    const std::vector<std::size_t> ks = uses_k(p.id) ? range(p.k_min, p.k_max) : std::vector<std::size_t>{0};

    AuditReport report;
    report.claim = std::string(theorem_name(p.id));
    report.params = p.to_json();
    if (p.id == TheoremId::ext_cjk)
        report.notes.push_back("second clause checked as written: chromatic number <= r+1 together with the k-threshold");

    scan(p.mode, p.n_min, p.n_max, rs.back(), report, [&](const Graph& g, AuditReport& part) {
        ++part.instances_scanned;
        for (std::size_t r : rs) {
            for (std::size_t k : ks) {
                const auto outcome = evaluate_theorem(p.id, r, k, g, p.budget);
                if (outcome.exhausted) part.budget_exhausted.push_back(to_graph6(g));
                if (!outcome.hypothesis) continue;
                ++part.hypothesis_instances;
                if (outcome.holds || outcome.exhausted) continue;
                Counterexample c;
                c.graph6 = to_graph6(g);
                c.claim = report.claim;
                c.r = r;
                c.k = k;
                c.measured = measure(g, p.budget);
                add_counterexample(part, std::move(c), p.budget);
            }
        }
    });
    return report;
}

AuditReport check_lemma(std::size_t r, std::size_t n_min, std::size_t n_max, ScanMode mode, SearchBudget budget) {
    if (r < 3) throw std::invalid_argument("check_lemma requires r >= 3");
    AuditReport report;
    report.claim = "lemma-redu";
    report.params = {{"r", r}, {"n_min", n_min}, {"n_max", n_max}, {"mode", std::string(mode_name(mode))}};
    const Rational threshold = base_threshold(r);

    scan(mode, n_min, n_max, r, report, [&](const Graph& g, AuditReport& part) {
        ++part.instances_scanned;
        const auto clique = find_clique(g, r + 1, budget);
        if (clique.exhausted()) part.budget_exhausted.push_back(to_graph6(g));
        if (!clique.absent() || g.order() == 0) return;
        const Graph completed = maximal_completion(g, r + 1, budget);
        if (!exceeds(min_degree(completed), completed.order(), threshold)) return;
        ++part.hypothesis_instances;

        bool ok = false;
        const auto u = lemma_vertex(completed);
        if (u) {
            const auto dec = decompose_by_lemma(completed, u->vertex);
            const auto solved = find_homomorphism(completed, dec.quotient_target, budget);
            if (solved.exhausted()) {
                part.budget_exhausted.push_back(to_graph6(completed));
                return;
            }
            ok = dec.independent_part.edge_count() == 0 &&
                 check_homomorphism(completed, dec.quotient_target, dec.projection) && solved.found();
        }
        if (ok) return;
        Counterexample c;
        c.graph6 = to_graph6(completed);
        c.claim = "lemma-redu";
        c.r = r;
        c.measured = measure(completed, budget);
        if (u) c.certificate = Certificate::of(completed, *u);
        add_counterexample(part, std::move(c), budget);
    });
    return report;
}

// ---------------------------------------------------------------------------
// Example audits

namespace {

class AuditBuilder {
public:
    AuditBuilder(const FamilySpec& spec, const Graph& g, SearchBudget budget)
        : spec_(spec), g_(g), budget_(budget), label_(spec.to_string()) {
        report_.claim = "audit:" + label_;
        report_.params = {{"spec", label_}};
        report_.instances_scanned = 1;
        report_.hypothesis_instances = 1;
    }

    const Graph& graph() const { return g_; }
    std::size_t order() const { return g_.order(); }
    std::size_t delta() const { return g_.order() == 0 ? 0 : min_degree(g_); }

    void row(std::string quantity, std::string predicted, std::string relation, std::string measured, bool ok) {
        report_.formula_table.push_back(
            {label_, std::move(quantity), std::move(predicted), std::move(relation), std::move(measured), ok});
    }

    void note(std::string text) { report_.notes.push_back(std::move(text)); }

    void exhausted(const std::string& what) { report_.budget_exhausted.push_back(what + " @ " + label_); }

    void expect_order(std::size_t n) { row("order", str(n), "=", str(order()), order() == n); }

    void expect_regular(std::size_t d) {
        const auto reg = is_regular(g_);
        row("regular degree", str(d), "=", reg ? str(*reg) : "irregular", reg && *reg == d);
    }

    void expect_min_degree(std::size_t d) { row("min degree", str(d), "=", str(delta()), delta() == d); }

    /// Clique number at most bound.
    void expect_clique_free(std::size_t bound) {
        const auto omega = clique_number(g_, budget_);
        if (omega.status != SearchStatus::found) return exhausted("clique number");
        row("clique number", str(bound), "<=", str(omega.value), omega.value <= bound);
    }

    void expect_clique_number(std::size_t value) {
        const auto omega = clique_number(g_, budget_);
        if (omega.status != SearchStatus::found) return exhausted("clique number");
        row("clique number", str(value), "=", str(omega.value), omega.value == value);
    }

    std::optional<std::size_t> chromatic() {
        if (!chi_) {
            const auto res = chromatic_number(g_, budget_);
            if (res.status != SearchStatus::found) {
                exhausted("chromatic number");
                return std::nullopt;
            }
            chi_ = res.value;
        }
        return chi_;
    }

    void expect_chromatic(std::size_t value) {
        if (auto chi = chromatic()) row("chromatic number", str(value), "=", str(*chi), *chi == value);
    }

    void expect_chromatic_at_least(std::size_t value) {
        if (auto chi = chromatic()) row("chromatic number", str(value), ">=", str(*chi), *chi >= value);
    }

    void expect_homomorphism(const std::string& target_name, const Graph& target, bool exists) {
        const auto res = find_homomorphism(g_, target, budget_);
        if (res.exhausted()) return exhausted("homomorphism to " + target_name);
        row("homomorphism to " + target_name, exists ? "found" : "absent", "=", res.found() ? "found" : "absent",
            res.found() == exists);
    }

    void expect_subgraph(const std::string& pattern_name, const Graph& pattern) {
        const auto res = contains_subgraph(g_, pattern, budget_);
        if (res.exhausted()) return exhausted("subgraph " + pattern_name);
        row("contains " + pattern_name, "found", "=", res.found() ? "found" : "absent", res.found());
    }

    /// Strict "delta + 1 > coeff * n" with coeff = 1 - num/den, i.e. delta > (1 - num/den) n - 1.
    void expect_minus_one_bound(const std::string& name, std::int64_t num, std::int64_t den) {
        const Rational coeff = one_minus(num, den);
        const std::int64_t n = static_cast<std::int64_t>(order());
        const std::int64_t d = static_cast<std::int64_t>(delta());
        const bool ok = (d + 1) * coeff.denominator() > coeff.numerator() * n;
        row(name, "(" + format_rational(coeff) + ")n - 1 = " + format_rational(coeff * n - 1), ">", str(delta()), ok);
    }

    /// delta == (1 - num/den) n when den divides n.
    void expect_divisible_equality(std::int64_t num, std::int64_t den) {
        const std::int64_t n = static_cast<std::int64_t>(order());
        if (n % den != 0) return;
        const std::int64_t value = n - num * (n / den);
        row("min degree (divisible case)", std::to_string(value), "=", str(delta()),
            static_cast<std::int64_t>(delta()) == value);
    }

    AuditReport finish() {
        bool failed = false;
        for (const auto& r : report_.formula_table) failed = failed || !r.ok;
        if (failed) {
            Counterexample c;
            c.graph6 = to_graph6(g_);
            c.claim = report_.claim;
            c.measured = measure(g_, budget_);
            add_counterexample(report_, std::move(c), budget_);
        }
        return std::move(report_);
    }

private:
    const FamilySpec& spec_;
    const Graph& g_;
    SearchBudget budget_;
    std::string label_;
    std::optional<std::size_t> chi_;
    AuditReport report_;
};

std::size_t hajnal_predicted_min_degree(std::size_t n, std::size_t m, std::size_t h) {
    const HajnalBlocks blocks = hajnal_blocks(n, m, h);
    std::size_t d = static_cast<std::size_t>(binomial(m + h, m)) + m * blocks.scale;
    d = std::min(d, blocks.b + static_cast<std::size_t>(binomial(2 * m + h - 1, m - 1)));
    if (blocks.b > 0) d = std::min(d, (2 * m + h) * blocks.scale);
    return d;
}

std::size_t mycielski_order(std::size_t i) {
    std::size_t n = 2;
    for (std::size_t s = 1; s < i; ++s) n = 2 * n + 1;
    return n;
}

}  // namespace

AuditReport audit_example(const FamilySpec& spec, SearchBudget budget) {
    return audit_graph(spec, generate(spec), budget);
}

AuditReport audit_graph(const FamilySpec& spec, const Graph& g, SearchBudget budget) {
    AuditBuilder a(spec, g, budget);
    switch (spec.family) {
        case Family::andrasfai: {
            const std::size_t k = spec.size_at("k");
            a.expect_order(3 * k - 1);
            a.expect_regular(k);
            a.expect_clique_number(2);
            a.expect_chromatic(k == 1 ? 2 : 3);
            break;
        }
        case Family::mycielski: {
            const std::size_t i = spec.size_at("i");
            a.expect_order(mycielski_order(i));
            a.expect_clique_number(2);
            a.expect_chromatic(i + 1);
            break;
        }
        case Family::kneser: {
            const std::size_t m = spec.size_at("m");
            const std::size_t h = spec.size_at("h");
            a.expect_order(static_cast<std::size_t>(binomial(2 * m + h, m)));
            a.expect_regular(static_cast<std::size_t>(binomial(m + h, m)));
            const auto omega = clique_number(g, budget);
            if (omega.status == SearchStatus::found) {
                const bool triangle_free = omega.value <= 2;
                a.row("triangle-free", m > h ? "yes" : "no", "=", triangle_free ? "yes" : "no", triangle_free == (m > h));
            } else {
                a.exhausted("clique number");
            }
            if (g.order() <= 64)
                a.expect_chromatic(h + 2);
            else
                a.note("chromatic number not computed above 64 vertices");
            break;
        }
        case Family::turan: {
            const std::size_t p = spec.size_at("p");
            const std::size_t n = spec.size_at("n");
            a.expect_order(n);
            if (n > 0) {
                a.expect_min_degree(*turan_min_degree(p, n));
                a.expect_clique_number(std::min(p, n));
                a.expect_chromatic(std::min(p, n));
            }
            break;
        }
        case Family::hajnal: {
            const std::size_t n = spec.size_at("n");
            const std::size_t m = spec.size_at("m");
            const std::size_t h = spec.size_at("h");
            const auto blocks = hajnal_blocks(n, m, h);
            a.expect_order(n);
            a.row("block sizes |K|,|A|,|B|", "", "=",
                  str(blocks.kneser) + "," + str(blocks.a) + "," + str(blocks.b), true);
            if (m > h) a.expect_clique_free(2);
            else a.note("m <= h: the Kneser block contains triangles");
            a.expect_chromatic_at_least(h + 2);
            a.expect_min_degree(hajnal_predicted_min_degree(n, m, h));
            a.row("min degree lower bound m*floor(n1/(3m+h))", str(m * blocks.scale), "<=", str(a.delta()),
                  a.delta() >= m * blocks.scale);
            break;
        }
        case Family::hajnal_extended: {
            const std::size_t r = spec.size_at("r");
            const std::size_t n = spec.size_at("n");
            const std::size_t m = spec.size_at("m");
            const std::size_t h = spec.size_at("h");
            const std::size_t n1 = hajnal_extended_turan_order(r, n);
            const std::size_t n2 = n - n1;
            a.expect_order(n);
            a.expect_clique_free(r);
            a.expect_chromatic_at_least(h);
            std::size_t predicted = hajnal_predicted_min_degree(n2, m, h - r) + n1;
            if (auto t = turan_min_degree(r - 2, n1)) predicted = std::min(predicted, *t + n2);
            a.expect_min_degree(predicted);
            const Rational base = base_threshold(r);
            const Rational margin = base - Rational(static_cast<std::int64_t>(a.delta()), static_cast<std::int64_t>(n));
            a.row("epsilon margin (1-2/(2r-1)) - delta/n", "", "info", format_rational(margin), true);
            if (spec.epsilon) {
                const Rational coeff = base - *spec.epsilon;
                a.row("min degree vs (1-2/(2r-1)-eps)n", format_rational(coeff * static_cast<std::int64_t>(n)), ">",
                      str(a.delta()), exceeds(a.delta(), n, coeff));
            }
            if (m <= h - r) a.note("m <= h-r: the Kneser block of the Hajnal part contains triangles");
            break;
        }
        case Family::haggkvist: {
            const std::size_t k = spec.size_at("k");
            a.expect_order(29 * k);
            a.expect_regular(10 * k);
            a.expect_clique_number(2);
            a.expect_chromatic(4);
            const Graph m3 = mycielski(3);
            a.expect_homomorphism("M_3", m3, true);
            a.expect_subgraph("M_3", m3);
            break;
        }
        case Family::haggkvist_extended: {
            const std::size_t r = spec.size_at("r");
            const std::size_t n = spec.size_at("n");
            const std::size_t d = haggkvist_modulus(r);
            const std::size_t q = n / d;
            const std::size_t x = n - 29 * q;
            a.expect_order(n);
            a.expect_clique_free(r);
            a.expect_chromatic(r + 2);
            std::size_t predicted = 10 * q + x;
            if (auto t = turan_min_degree(r - 2, x)) predicted = std::min(predicted, *t + 29 * q);
            a.expect_min_degree(predicted);
            a.expect_minus_one_bound("min degree vs (1-19/(19r-9))n - 1", 19, static_cast<std::int64_t>(d));
            a.expect_divisible_equality(19, static_cast<std::int64_t>(d));
            if (x >= r - 2) a.expect_subgraph("M_3 + K_{r-2}", mycielski_pattern(r));
            a.note("second join part is the Haggkvist graph H(q), q = floor(n/(19r-9)): its 29-vertex, "
                   "10-regular unit is what the degree count uses");
            break;
        }
        case Family::andrasfai_blowup: {
            const std::size_t r = spec.size_at("r");
            const std::size_t k = spec.size_at("k");
            const std::size_t n = spec.size_at("n");
            const std::size_t d = andrasfai_modulus(r, k);
            const std::size_t t = n / d;
            const std::size_t x = n - (3 * k - 1) * t;
            a.expect_order(n);
            a.expect_clique_free(r);
            a.expect_chromatic((k == 1 ? 2 : 3) + r - 2);
            if (k == 1) a.note("A_1 = K_2 is bipartite, so the chromatic number is r rather than r+1");
            std::size_t predicted = k * t + x;
            if (auto tm = turan_min_degree(r - 2, x)) predicted = std::min(predicted, *tm + (3 * k - 1) * t);
            a.expect_min_degree(predicted);
            a.expect_minus_one_bound("min degree vs (1-(2k-1)/((2k-1)r-k+1))n - 1", 2 * static_cast<std::int64_t>(k) - 1,
                                     static_cast<std::int64_t>(d));
            a.expect_divisible_equality(2 * static_cast<std::int64_t>(k) - 1, static_cast<std::int64_t>(d));
            a.expect_homomorphism("A_" + str(k) + " + K_" + str(r - 2), andrasfai_target(k, r), true);
            if (k >= 2) {
                a.expect_homomorphism("A_" + str(k - 1) + " + K_" + str(r - 2), andrasfai_target(k - 1, r), false);
                a.note("tightness is witnessed one index up: this instance (parameter k) is not homomorphic "
                       "to A_{k-1} + K_{r-2}");
            }
            break;
        }
    }
    return a.finish();
}

AuditReport audit_tightness(std::size_t k, std::size_t r, SearchBudget budget) {
    if (k < 1 || r < 2) throw std::invalid_argument("audit_tightness requires k >= 1 and r >= 2");
    AuditReport report;
    report.claim = "tightness";
    report.params = {{"k", k}, {"r", r}};
    report.instances_scanned = 1;
    report.hypothesis_instances = 1;
    const Graph source = andrasfai_target(k + 1, r);
    const Graph target = andrasfai_target(k, r);
    const std::string label = "A_" + str(k + 1) + " + K_" + str(r - 2) + " -> A_" + str(k) + " + K_" + str(r - 2);
    const auto res = find_homomorphism(source, target, budget);
    if (res.exhausted()) {
        report.budget_exhausted.push_back(label);
        return report;
    }
    report.formula_table.push_back({label, "homomorphism", "absent", "=", res.found() ? "found" : "absent", res.absent()});
    report.notes.push_back("the blow-up family with parameter k maps onto A_k + K_{r-2}; the non-homomorphism "
                           "is therefore audited with A_{k+1} as source");
    if (res.found()) {
        Counterexample c;
        c.graph6 = to_graph6(source);
        c.claim = report.claim;
        c.r = r;
        c.k = k;
        c.measured = measure(source, budget);
        c.certificate = Certificate::of(source, target, *res.witness);
        add_counterexample(report, std::move(c), budget);
    }
    return report;
}

// ---------------------------------------------------------------------------
// psi bounds

AuditReport psi_bounds_report(std::size_t r, std::size_t n_min, std::size_t n_max, SearchBudget budget) {
    if (r < 2) throw std::invalid_argument("psi_bounds_report requires r >= 2");
    AuditReport report;
    report.claim = "psi-bounds";
    report.params = {{"r", r}, {"n_min", n_min}, {"n_max", n_max}};
    report.notes.push_back("upper bound (1-3/(3r-1))n is applied at h = r+1; at h = r the Turan graph T_r(n) "
                           "already exceeds it");

    auto upper_row = [&](std::size_t n, std::size_t h, const Rational& coeff) {
        const PsiResult psi = psi_oracle(n, r, h, budget);
        ++report.instances_scanned;
        if (psi.status == SearchStatus::budget_exhausted) {
            report.budget_exhausted.push_back("psi(" + str(n) + "," + str(r) + "," + str(h) + ")");
            return;
        }
        const std::string label = "psi(" + str(n) + "," + str(r) + "," + str(h) + ")";
        const Rational bound = coeff * static_cast<std::int64_t>(n);
        if (!psi.value) {
            report.formula_table.push_back({label, "value", format_rational(bound), ">=", "none", true});
            return;
        }
        ++report.hypothesis_instances;
        const bool ok = Rational(static_cast<std::int64_t>(*psi.value)) <= bound;
        report.formula_table.push_back({label, "value", format_rational(bound), ">=", str(*psi.value), ok});
        if (!ok) {
            Counterexample c;
            c.graph6 = to_graph6(*psi.witness);
            c.claim = report.claim;
            c.r = r;
            c.measured = measure(*psi.witness, budget);
            add_counterexample(report, std::move(c), budget);
        }
    };

    const std::int64_t ri = static_cast<std::int64_t>(r);
    for (std::size_t n = std::max<std::size_t>(n_min, 1); n <= std::min<std::size_t>(n_max, 8); ++n) {
        upper_row(n, r + 1, one_minus(3, 3 * ri - 1));
        if (r >= 3) upper_row(n, r + 2, one_minus(19, 19 * ri - 9));
    }

    // Witnesses for the lower-bound lines.
    auto witness_row = [&](const std::string& label, const Graph& g, std::size_t h, const Rational& coeff) {
        ++report.instances_scanned;
        ++report.hypothesis_instances;
        const std::size_t n = g.order();
        const std::size_t d = min_degree(g);
        const auto clique = find_clique(g, r + 1, budget);
        const auto colorable = is_k_colorable(g, h - 1, budget);
        if (clique.exhausted() || colorable.exhausted()) {
            report.budget_exhausted.push_back(label);
            return;
        }
        const bool qualifies = clique.absent() && colorable.absent();
        const bool ok = qualifies && Rational(static_cast<std::int64_t>(d)) >= coeff * static_cast<std::int64_t>(n) - 1;
        report.formula_table.push_back({label, "psi(" + str(n) + "," + str(r) + "," + str(h) + ") lower bound",
                                        format_rational(coeff * static_cast<std::int64_t>(n) - 1), "<=",
                                        str(d) + (qualifies ? "" : " (witness does not qualify)"), ok});
        if (!ok) {
            Counterexample c;
            c.graph6 = to_graph6(g);
            c.claim = report.claim;
            c.r = r;
            c.measured = measure(g, budget);
            add_counterexample(report, std::move(c), budget);
        }
    };

    if (r == 2) {
        for (std::size_t t = 1; t <= 3; ++t)
            witness_row("blow_up(A_2," + str(t) + ")", blow_up(andrasfai(2), t), 3, one_minus(3, 5));
    } else {
        for (std::size_t t = 1; t <= 2; ++t) {
            const std::size_t n1 = andrasfai_modulus(r, 2) * t;
            witness_row("andrasfai-blowup:r=" + str(r) + ",k=2,n=" + str(n1), andrasfai_blowup_example(r, 2, n1), r + 1,
                        one_minus(3, 3 * ri - 1));
            const std::size_t n2 = haggkvist_modulus(r) * t;
            witness_row("haggkvist-ext:r=" + str(r) + ",n=" + str(n2), haggkvist_extended(r, n2), r + 2,
                        one_minus(19, 19 * ri - 9));
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Suites

namespace {

std::size_t param(const nlohmann::json& params, const char* key, std::size_t fallback) {
    if (!params.contains(key)) return fallback;
    const auto& v = params.at(key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
        throw std::invalid_argument(std::string("parameter '") + key + "' must be a non-negative integer");
    return v.get<std::size_t>();
}

AuditReport run_check(const nlohmann::json& check, const SuiteOptions& options) {
    if (!check.is_object() || !check.contains("id")) throw std::invalid_argument("each check needs an 'id'");
    const auto id = check.at("id").get<std::string>();
    const nlohmann::json params = check.value("params", nlohmann::json::object());
    SearchBudget budget;
    if (check.contains("budget")) budget.max_nodes = check.at("budget").get<std::uint64_t>();
    ScanMode mode = ScanMode::exhaustive;
    if (check.contains("mode")) {
        auto m = mode_from_name(check.at("mode").get<std::string>());
        if (!m) throw std::invalid_argument("unknown mode '" + check.at("mode").get<std::string>() + "'");
        mode = *m;
    }

    if (auto theorem = theorem_from_name(id)) {
        TheoremParams p;
        p.id = *theorem;
        const std::size_t r = param(params, "r", 2);
        p.r_min = param(params, "r_min", r);
        p.r_max = param(params, "r_max", r);
        const std::size_t k = param(params, "k", 1);
        p.k_min = param(params, "k_min", k);
        p.k_max = param(params, "k_max", k);
        p.n_min = param(params, "n_min", 1);
        p.n_max = param(params, "n_max", 7);
        p.mode = mode;
        p.budget = budget;
        return check_theorem(p);
    }
    if (id == "audit") {
        if (!params.contains("spec")) throw std::invalid_argument("audit check needs params.spec");
        const FamilySpec spec = FamilySpec::parse(params.at("spec").get<std::string>());
        const Graph g = options.generator ? options.generator(spec) : generate(spec);
        return audit_graph(spec, g, budget);
    }
    if (id == "tightness") return audit_tightness(param(params, "k", 1), param(params, "r", 3), budget);
    if (id == "psi-bounds")
        return psi_bounds_report(param(params, "r", 2), param(params, "n_min", 1), param(params, "n_max", 8), budget);
    throw std::invalid_argument("unknown check id '" + id + "'");
}

}  // namespace

ordered_json SuiteResult::to_json(bool include_envelope) const {
    ordered_json doc;
    doc["schema"] = 1;
    doc["verdict"] = std::string(to_string(verdict));
    doc["exit_code"] = exit_code;
    auto checks = ordered_json::array();
    for (const auto& r : reports) checks.push_back(r.to_json());
    doc["checks"] = std::move(checks);
    if (include_envelope) {
        const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
        doc["envelope"] = {{"generated_at", buf}};
    }
    return doc;
}

SuiteResult run_suite(const nlohmann::json& config, const SuiteOptions& options) {
    if (!config.is_object()) throw std::invalid_argument("suite config must be a JSON object");
    SuiteResult result;
    const nlohmann::json checks = config.value("checks", nlohmann::json::array());
    if (!checks.is_array()) throw std::invalid_argument("'checks' must be an array");
    for (const auto& check : checks) result.reports.push_back(run_check(check, options));

    bool failed = false;
    bool inconclusive = false;
    for (const auto& r : result.reports) {
        failed = failed || r.verdict() == Verdict::fail;
        inconclusive = inconclusive || r.verdict() == Verdict::inconclusive;
    }
    result.verdict = failed ? Verdict::fail : inconclusive ? Verdict::inconclusive : Verdict::pass;
    result.exit_code = failed ? 1 : inconclusive ? 2 : 0;
    return result;
}

nlohmann::json default_suite_config() {
    using nlohmann::json;
    json checks = json::array();
    checks.push_back({{"id", "thmC"}, {"params", {{"n_max", 7}}}, {"mode", "exhaustive"}});
    checks.push_back({{"id", "extBT"}, {"params", {{"r", 3}, {"n_max", 7}}}, {"mode", "exhaustive"}});
    checks.push_back({{"id", "extJin"}, {"params", {{"r", 3}, {"k", 1}, {"n_max", 7}}}, {"mode", "exhaustive"}});
    checks.push_back({{"id", "lemma-redu"}, {"params", {{"r", 3}, {"n_max", 7}}}, {"mode", "exhaustive"}});
    checks.push_back({{"id", "thmA"}, {"params", {{"k_min", 1}, {"k_max", 3}, {"n_max", 8}}}, {"mode", "iso-reduced"}});
    checks.push_back({{"id", "thmB"}, {"params", {{"k_min", 1}, {"k_max", 3}, {"n_max", 8}}}, {"mode", "iso-reduced"}});
    checks.push_back({{"id", "aes"}, {"params", {{"r_min", 2}, {"r_max", 3}, {"n_max", 8}}}, {"mode", "iso-reduced"}});
    checks.push_back({{"id", "extCJK"}, {"params", {{"r", 3}, {"k", 2}}}, {"mode", "generated-instances"}});
    for (const char* spec : {"andrasfai:k=5", "mycielski:i=4", "kneser:m=2,h=1", "kneser:m=2,h=2", "haggkvist:k=1",
                             "haggkvist:k=2", "hajnal:n=24,m=2,h=1", "hajnal-ext:r=3,n=112,m=3,h=5",
                             "haggkvist-ext:r=3,n=48", "haggkvist-ext:r=3,n=49", "andrasfai-blowup:r=3,k=2,n=16",
                             "andrasfai-blowup:r=3,k=2,n=17"})
        checks.push_back({{"id", "audit"}, {"params", {{"spec", spec}}}});
    for (auto [k, r] : {std::pair{1, 3}, std::pair{2, 3}, std::pair{1, 4}})
        checks.push_back({{"id", "tightness"}, {"params", {{"k", k}, {"r", r}}}});
    checks.push_back({{"id", "psi-bounds"}, {"params", {{"r", 2}, {"n_min", 3}, {"n_max", 8}}}});
    checks.push_back({{"id", "psi-bounds"}, {"params", {{"r", 3}, {"n_min", 4}, {"n_max", 7}}}});
    return {{"checks", checks}};
}

}  // namespace kfree
