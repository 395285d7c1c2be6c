// Acceptance run: one PASS/FAIL line per criterion.
// Usage: acceptance [--expect-fail N]...   exit 0 iff the failing set equals the expected set.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "kfree/enumeration.hpp"
#include "kfree/generators.hpp"
#include "kfree/harness.hpp"
#include "kfree/io.hpp"
#include "kfree/verifiers.hpp"
#include "oracles.hpp"

using namespace kfree;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << " [" << what << "]";
        }
    }
};

std::size_t chi(const Graph& g) {
    const auto res = chromatic_number(g);
    return res.status == SearchStatus::found ? res.value : 0;
}

bool k_free(const Graph& g, std::size_t s) { return find_clique(g, s).absent(); }

void criterion1(Outcome& o) {
    for (std::size_t k = 1; k <= 12; ++k) {
        const Graph g = andrasfai(k);
        o.expect(g.order() == 3 * k - 1 && is_regular(g) == std::optional<std::size_t>(k) && k_free(g, 3),
                 "andrasfai(" + std::to_string(k) + ") invariants");
    }
    for (std::size_t k = 2; k <= 8; ++k) o.expect(chi(andrasfai(k)) == 3, "chi(andrasfai(" + std::to_string(k) + "))");
    for (std::size_t i = 1; i <= 4; ++i) {
        const Graph g = mycielski(i);
        o.expect(k_free(g, 3) && chi(g) == i + 1, "mycielski(" + std::to_string(i) + ")");
    }
    o.expect(mycielski(4).order() == 23, "M_4 order");
    o.expect(isomorphic(kneser(2, 1), from_graph6("IheA@GUAo")) && chi(kneser(2, 1)) == 3, "Petersen");
    o.expect(chi(kneser(2, 2)) == 4, "chi(kneser(2,2))");
    for (std::size_t m = 1; m <= 4; ++m)
        for (std::size_t h = 1; h <= 4; ++h)
            o.expect(k_free(kneser(m, h), 3) == (m > h), "kneser(" + std::to_string(m) + "," + std::to_string(h) + ")");
}

void criterion2(Outcome& o) {
    const Graph m3 = mycielski(3);
    for (std::size_t k = 1; k <= 2; ++k) {
        const Graph g = haggkvist(k);
        const std::string tag = "haggkvist(" + std::to_string(k) + ")";
        o.expect(g.order() == 29 * k && is_regular(g) == std::optional<std::size_t>(10 * k), tag + " regularity");
        o.expect(k_free(g, 3), tag + " triangle-free");
        o.expect(twin_reduce(g).quotient == twin_reduce(haggkvist(1)).quotient, tag + " twin quotient");
        o.expect(chi(g) == 4, tag + " chi");
        const auto hom = find_homomorphism(g, m3);
        o.expect(hom.found() && check_homomorphism(g, m3, *hom.witness), tag + " -> M_3");
        const auto emb = contains_subgraph(g, m3);
        o.expect(emb.found() && check_embedding(g, m3, *emb.witness), tag + " contains M_3");
    }
}

void criterion3(Outcome& o) {
    const Graph h48 = haggkvist_extended(3, 48);
    o.expect(min_degree(h48) == 29, "haggkvist_extended(3,48) delta");
    o.expect(k_free(h48, 4), "haggkvist_extended(3,48) K4-free");
    o.expect(chi(h48) == 5, "haggkvist_extended(3,48) chi");
    const Graph a16 = andrasfai_blowup_example(3, 2, 16);
    o.expect(min_degree(a16) == 10, "andrasfai_blowup_example(3,2,16) delta");
    o.expect(k_free(a16, 4), "andrasfai_blowup_example(3,2,16) K4-free");
    o.expect(chi(a16) == 4, "andrasfai_blowup_example(3,2,16) chi");
    o.expect(find_homomorphism(a16, join(andrasfai(2), complete(1))).found(), "-> A_2 + K_1");
    auto minus_one = [](const Graph& g, Rational coeff) {
        const std::int64_t n = static_cast<std::int64_t>(g.order());
        return Rational(static_cast<std::int64_t>(min_degree(g))) > coeff * n - 1;
    };
    for (std::size_t n : {49, 97, 145})
        o.expect(minus_one(haggkvist_extended(3, n), Rational(29, 48)), "haggkvist-ext n=" + std::to_string(n));
    for (std::size_t n : {17, 25, 33})
        o.expect(minus_one(andrasfai_blowup_example(3, 2, n), Rational(5, 8)), "andrasfai-blowup n=" + std::to_string(n));
}

void criterion4(Outcome& o) {
    const Graph h = hajnal(24, 2, 1);
    const auto blocks = hajnal_blocks(24, 2, 1);
    o.expect(h.order() == 24 && k_free(h, 3), "hajnal(24,2,1) triangle-free of order 24");
    o.expect(chi(h) >= 3, "hajnal(24,2,1) chi >= 3");
    o.expect(min_degree(h) == 7, "hajnal(24,2,1) delta");
    o.expect(blocks.kneser == 10 && blocks.a == 10 && blocks.b == 4, "hajnal(24,2,1) blocks");
    const Graph ext = hajnal_extended(3, 60, 2, 5);
    const auto omega = clique_number(ext);
    o.expect(omega.value <= 3, "hajnal_extended(3,60,2,5) K4-free: clique number " + std::to_string(omega.value));
    o.expect(chi(ext) >= 5, "hajnal_extended(3,60,2,5) chi >= 5");
    const Graph alt = hajnal_extended(3, 112, 3, 5);
    o.detail << " alt hajnal_extended(3,112,3,5): clique number " << clique_number(alt).value;
}

void criterion5(Outcome& o) {
    auto scan = [&](TheoremId id, std::size_t r, std::size_t k, bool vacuous_ok) {
        TheoremParams p;
        p.id = id;
        p.r_min = p.r_max = r;
        p.k_min = p.k_max = k;
        p.n_max = 7;
        const auto report = check_theorem(p);
        const Verdict v = report.verdict();
        o.detail << " " << theorem_name(id) << "=" << to_string(v) << "(" << report.hypothesis_instances << ")";
        o.expect(v == Verdict::pass || (vacuous_ok && v == Verdict::vacuous), std::string(theorem_name(id)));
    };
    scan(TheoremId::thm_c, 2, 1, false);
    scan(TheoremId::ext_bt, 3, 1, false);
    scan(TheoremId::ext_jin, 3, 1, true);
    const auto lemma = check_lemma(3, 1, 7);
    o.detail << " lemma-redu=" << to_string(lemma.verdict()) << "(" << lemma.hypothesis_instances << ")";
    o.expect(lemma.verdict() == Verdict::pass, "lemma-redu");
}

void criterion6(Outcome& o) {
    const auto five = psi_oracle(5, 2, 3);
    o.expect(five.value == std::optional<std::size_t>(2) && five.witness && isomorphic(*five.witness, cycle(5)),
             "psi(5,2,3)");
    o.expect(!psi_oracle(4, 2, 3).value, "psi(4,2,3) = none");
    for (std::size_t n = 3; n <= 8; ++n) {
        const auto psi = psi_oracle(n, 2, 3);
        o.detail << " psi(" << n << ")=" << (psi.value ? std::to_string(*psi.value) : "none");
        o.expect(!psi.value || *psi.value <= 2 * n / 5, "psi(" + std::to_string(n) + ",2,3) bound");
    }
}

void criterion7(Outcome& o) {
    o.expect(find_homomorphism(andrasfai(3), andrasfai(2)).absent(), "A_3 -/-> A_2");
    o.expect(find_homomorphism(join(andrasfai(3), complete(1)), join(andrasfai(2), complete(1))).absent(),
             "A_3 + K_1 -/-> A_2 + K_1");
    const Graph b = blow_up(andrasfai(3), 2);
    const auto proj = find_homomorphism(b, andrasfai(3));
    o.expect(proj.found() && check_homomorphism(b, andrasfai(3), *proj.witness), "blow_up(A_3,2) -> A_3");
}

void criterion8(Outcome& o) {
    const std::vector<Graph> targets{complete(1), complete(2), complete(3), complete(4), cycle(5),
                                     Graph::from_edges(3, std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 2}})};
    std::size_t mismatches = 0;
    std::size_t graphs = 0;
    for (std::size_t n = 1; n <= 6; ++n)
        for_each_labeled_graph(n, [&](const Graph& g) {
            ++graphs;
            for (std::size_t s = 1; s <= n; ++s) mismatches += find_clique(g, s).found() != oracle::has_clique(g, s);
            for (std::size_t c = 1; c <= 4; ++c)
                mismatches += is_k_colorable(g, c).found() != oracle::homomorphic_dfs(g, complete(c));
            for (const Graph& t : targets) mismatches += find_homomorphism(g, t).found() != oracle::homomorphic_dfs(g, t);
        });
    o.detail << " graphs=" << graphs << " mismatches=" << mismatches;
    o.expect(mismatches == 0, "solver/oracle mismatch");
    const std::vector<std::size_t> counts{1, 2, 4, 11, 34, 156, 1044};
    for (std::size_t n = 1; n <= 7; ++n)
        o.expect(iso_reduced_graphs(n).size() == counts[n - 1], "iso_reduced(" + std::to_string(n) + ")");
}

void criterion9(Outcome& o) {
    for (const char* text : {"andrasfai:k=7", "hajnal:n=24,m=2,h=1", "haggkvist-ext:r=3,n=49",
                             "andrasfai-blowup:r=4,k=3,n=40", "kneser:m=3,h=2"}) {
        const auto a = FamilySpec::parse(text);
        const auto b = FamilySpec::parse(a.to_string());
        o.expect(to_graph6(generate(a)) == to_graph6(generate(b)), std::string("spec ") + text);
    }
    for (const Graph& g : iso_reduced_graphs(6)) {
        const std::string text = to_graph6(g);
        if (to_graph6(from_graph6(text)) != text) o.expect(false, "round trip " + text);
    }
    nlohmann::json config = {{"checks",
                              {{{"id", "thmC"}, {"params", {{"n_max", 6}}}},
                               {{"id", "audit"}, {"params", {{"spec", "haggkvist-ext:r=3,n=48"}}}},
                               {{"id", "tightness"}, {"params", {{"k", 2}, {"r", 3}}}},
                               {{"id", "psi-bounds"}, {"params", {{"r", 3}, {"n_min", 4}, {"n_max", 6}}}}}}};
    o.expect(run_suite(config).to_json().dump() == run_suite(config).to_json().dump(), "suite byte-stable");
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> expected_failures;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--expect-fail") == 0 && i + 1 < argc) {
            expected_failures.insert(std::atoi(argv[++i]));
        } else {
            std::fprintf(stderr, "usage: %s [--expect-fail N]...\n", argv[0]);
            return 2;
        }
    }

    const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
        {"family invariants", criterion1},      {"haggkvist audit", criterion2},
        {"extended-example equalities", criterion3}, {"hajnal audit", criterion4},
        {"exhaustive theorem scans", criterion5}, {"psi oracle", criterion6},
        {"tightness / non-homomorphism", criterion7}, {"solver oracle equivalence", criterion8},
        {"determinism and round-trip", criterion9},
    };

    std::set<int> failures;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail << " [exception: " << e.what() << "]";
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %zu %-30s %s (%.2fs)%s\n", i + 1, criteria[i].first, o.ok ? "PASS" : "FAIL", secs,
                    o.detail.str().c_str());
        std::fflush(stdout);
        if (!o.ok) failures.insert(static_cast<int>(i + 1));
    }
    if (failures != expected_failures) {
        std::printf("failing criteria differ from the expected set\n");
        return 1;
    }
    if (!failures.empty()) std::printf("only the expected criteria failed\n");
    return 0;
}
