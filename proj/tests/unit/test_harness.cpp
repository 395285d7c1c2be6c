#include <doctest.h>

#include "kfree/harness.hpp"
#include "kfree/io.hpp"

using namespace kfree;

TEST_CASE("thresholds") {
    CHECK(theorem_threshold(TheoremId::thm_c, 2, 1) == Rational(1, 3));
    CHECK(theorem_threshold(TheoremId::ext_bt, 3, 1) == Rational(3, 5));
    CHECK(theorem_threshold(TheoremId::ext_jin, 3, 1) == Rational(2, 3));
    CHECK(theorem_threshold(TheoremId::ext_jin, 3, 2) == Rational(5, 8));
    CHECK(theorem_threshold(TheoremId::thm_a, 2, 2) == Rational(3, 8));
    CHECK(theorem_threshold(TheoremId::aes, 3, 1) == Rational(5, 8));
    CHECK(exceeds(3, 8, Rational(3, 8)) == false);
    CHECK(exceeds(4, 8, Rational(3, 8)));
}

TEST_CASE("equality at the threshold is not a hypothesis instance") {
    // A_{k+1} has delta / n = (k+1)/(3k+2) exactly; the same holds for its blow-ups.
    for (std::size_t k = 1; k <= 4; ++k)
        for (std::size_t t = 1; t <= 2; ++t) {
            const Graph g = blow_up(andrasfai(k + 1), t);
            CHECK(Rational(static_cast<std::int64_t>(min_degree(g)), static_cast<std::int64_t>(g.order())) ==
                  theorem_threshold(TheoremId::thm_a, 2, k));
            CHECK_FALSE(evaluate_theorem(TheoremId::thm_a, 2, k, g).hypothesis);
        }
}

TEST_CASE("single graph evaluation") {
    const auto petersen_like = evaluate_theorem(TheoremId::thm_c, 2, 1, andrasfai(3));
    CHECK(petersen_like.hypothesis);
    CHECK(petersen_like.holds);
    REQUIRE(petersen_like.certificate);
    CHECK(check_certificate(*petersen_like.certificate));

    const auto hom = evaluate_theorem(TheoremId::thm_a, 2, 3, andrasfai(2));
    CHECK(hom.hypothesis);
    CHECK(hom.holds);

    const auto k4 = evaluate_theorem(TheoremId::thm_c, 2, 1, complete(4));
    CHECK_FALSE(k4.hypothesis);
}

TEST_CASE("small exhaustive scans") {
    TheoremParams p;
    p.id = TheoremId::thm_c;
    p.n_max = 5;
    const auto report = check_theorem(p);
    CHECK(report.verdict() == Verdict::pass);
    CHECK(report.instances_scanned == 1 + 2 + 8 + 64 + 1024);
    CHECK(report.hypothesis_instances > 0);

    const auto lemma = check_lemma(3, 1, 5);
    CHECK(lemma.verdict() == Verdict::pass);

    p.id = TheoremId::thm_a;
    p.k_max = 10;
    CHECK_THROWS_AS(check_theorem(p), std::invalid_argument);
    CHECK_THROWS_AS(check_lemma(2, 1, 4), std::invalid_argument);
}

TEST_CASE("iso-reduced and generated scans") {
    TheoremParams p;
    p.id = TheoremId::aes;
    p.r_min = 2;
    p.r_max = 3;
    p.n_max = 7;
    p.mode = ScanMode::iso_reduced;
    CHECK(check_theorem(p).verdict() == Verdict::pass);

    p.id = TheoremId::ext_bt;
    p.r_min = p.r_max = 3;
    p.mode = ScanMode::generated;
    const auto report = check_theorem(p);
    CHECK(report.verdict() == Verdict::pass);
    CHECK(report.hypothesis_instances > 0);
}

TEST_CASE("family audits") {
    CHECK(audit_example(FamilySpec::parse("haggkvist-ext:r=3,n=48")).verdict() == Verdict::pass);
    CHECK(audit_example(FamilySpec::parse("andrasfai-blowup:r=3,k=2,n=17")).verdict() == Verdict::pass);
    CHECK(audit_example(FamilySpec::parse("hajnal:n=24,m=2,h=1")).verdict() == Verdict::pass);

    const auto miss = audit_example(FamilySpec::parse("haggkvist-ext:r=3,n=50"));
    CHECK(miss.verdict() == Verdict::fail);
    REQUIRE(miss.counterexamples.size() == 1);
    CHECK(miss.counterexamples[0].revalidated);

    const auto k4 = audit_example(FamilySpec::parse("hajnal-ext:r=3,n=60,m=2,h=5"));
    CHECK(k4.verdict() == Verdict::fail);
}

TEST_CASE("tightness") {
    CHECK(audit_tightness(1, 3).verdict() == Verdict::pass);
    CHECK(audit_tightness(2, 2).verdict() == Verdict::pass);
}

TEST_CASE("injected fault is caught and revalidated") {
    SuiteOptions options;
    options.generator = [](const FamilySpec& spec) {
        GraphBuilder b = generate(spec).to_builder();
        b.remove_edge(0, generate(spec).neighbors(0).first());
        return std::move(b).build();
    };
    nlohmann::json config = {{"checks", {{{"id", "audit"}, {"params", {{"spec", "haggkvist:k=1"}}}}}}};
    const auto result = run_suite(config, options);
    CHECK(result.verdict == Verdict::fail);
    CHECK(result.exit_code == 1);
    REQUIRE(result.reports.size() == 1);
    REQUIRE(result.reports[0].counterexamples.size() == 1);
    CHECK(result.reports[0].counterexamples[0].revalidated);

    const auto clean = run_suite(config);
    CHECK(clean.verdict == Verdict::pass);
}

TEST_CASE("suite output is deterministic") {
    nlohmann::json config = {{"checks",
                              {{{"id", "thmC"}, {"params", {{"n_max", 5}}}},
                               {{"id", "audit"}, {"params", {{"spec", "andrasfai:k=3"}}}},
                               {{"id", "psi-bounds"}, {"params", {{"r", 2}, {"n_min", 3}, {"n_max", 6}}}}}}};
    const std::string a = run_suite(config).to_json().dump(2);
    const std::string b = run_suite(config).to_json().dump(2);
    CHECK(a == b);
    CHECK(a.find("envelope") == std::string::npos);
    CHECK(run_suite(config).to_json(true).contains("envelope"));
    CHECK_THROWS_AS(run_suite({{"checks", {{{"id", "nope"}}}}}), std::invalid_argument);
    CHECK(run_suite(nlohmann::json::object()).exit_code == 0);
}

TEST_CASE("budget exhaustion makes a report inconclusive") {
    nlohmann::json config = {{"checks", {{{"id", "audit"}, {"budget", 1}, {"params", {{"spec", "mycielski:i=4"}}}}}}};
    const auto result = run_suite(config);
    CHECK(result.verdict == Verdict::inconclusive);
    CHECK(result.exit_code == 2);
}

TEST_CASE("default suite leaves out the K4-containing instance") {
    const std::string text = default_suite_config().dump();
    CHECK(text.find("hajnal-ext:r=3,n=60,m=2,h=5") == std::string::npos);
    CHECK(text.find("hajnal-ext:r=3,n=112,m=3,h=5") != std::string::npos);
}
