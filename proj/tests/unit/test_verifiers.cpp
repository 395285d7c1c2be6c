#include <doctest.h>

#include "kfree/enumeration.hpp"
#include "kfree/generators.hpp"
#include "kfree/io.hpp"
#include "kfree/verifiers.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace kfree;

TEST_CASE("clique search agrees with subset scan on all graphs up to 5 vertices") {
    for (std::size_t n = 1; n <= 5; ++n)
        for_each_labeled_graph(n, [&](const Graph& g) {
            for (std::size_t s = 1; s <= n; ++s) {
                const auto res = find_clique(g, s);
                REQUIRE(res.found() == oracle::has_clique(g, s));
                if (res.found()) CHECK(check_clique(g, *res.witness));
            }
            CHECK(clique_number(g).value == oracle::clique_number(g));
        });
}

TEST_CASE("colouring agrees with assignment scan on all graphs up to 5 vertices") {
    for (std::size_t n = 1; n <= 5; ++n)
        for_each_labeled_graph(n, [&](const Graph& g) {
            const std::size_t chi = oracle::chromatic_number(g);
            for (std::size_t c = 1; c <= 4; ++c) {
                const auto res = is_k_colorable(g, c);
                REQUIRE(res.found() == (c >= chi));
                if (res.found()) CHECK(check_coloring(g, *res.witness, c));
            }
            const auto direct = chromatic_number_direct(g);
            const auto reduced = chromatic_number(g);
            CHECK(direct.value == chi);
            CHECK(reduced.value == chi);
            CHECK(check_coloring(g, reduced.witness, chi));
        });
}

TEST_CASE("homomorphism search agrees with map scan") {
    const std::vector<Graph> targets{complete(1), complete(2), complete(3), cycle(5), andrasfai(2)};
    for (std::size_t n = 1; n <= 5; ++n)
        for_each_labeled_graph(n, [&](const Graph& g) {
            for (const Graph& t : targets) {
                const auto res = find_homomorphism(g, t);
                REQUIRE(res.found() == oracle::homomorphic(g, t));
                if (res.found()) CHECK(check_homomorphism(g, t, *res.witness));
            }
        });
}

TEST_CASE("subgraph embedding agrees with permutation scan") {
    const std::vector<Graph> patterns{
        complete(3), cycle(4), Graph::from_edges(3, std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 2}}),
        cycle(5), Graph(2)};
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 150; ++trial) {
        const Graph g = support::random_graph(4 + rng() % 4, 0.5, rng);
        for (const Graph& p : patterns) {
            const auto res = contains_subgraph(g, p);
            REQUIRE(res.found() == oracle::contains(g, p));
            if (res.found()) CHECK(check_embedding(g, p, *res.witness));
        }
    }
}

TEST_CASE("named chromatic numbers") {
    CHECK(chromatic_number(support::petersen()).value == 3);
    CHECK(chromatic_number(kneser(2, 2)).value == 4);
    CHECK(chromatic_number(mycielski(4)).value == 5);
    CHECK(chromatic_number(haggkvist(1)).value == 4);
    CHECK(chromatic_number(haggkvist(2)).value == 4);
    CHECK(chromatic_number(join(turan(2, 4), cycle(7))).value == 5);
}

TEST_CASE("witness checkers reject bad witnesses") {
    const Graph c5 = cycle(5);
    CHECK_FALSE(check_clique(c5, Clique{{0, 2}}));
    CHECK_FALSE(check_coloring(c5, Coloring{{0, 1, 0, 1, 0}}));
    CHECK_FALSE(check_coloring(c5, Coloring{{0, 1, 0, 1, 2}}, 2));
    CHECK_FALSE(check_homomorphism(c5, complete(2), Homomorphism{{0, 1, 0, 1, 0}}));
    CHECK_FALSE(check_embedding(c5, complete(2), Embedding{{0, 0}}));
}

TEST_CASE("budget exhaustion is never reported as absent") {
    const Graph g = kneser(3, 3);
    const auto res = is_k_colorable(g, 4, SearchBudget{1});
    CHECK(res.exhausted());
    CHECK(chromatic_number(g, SearchBudget{1}).status == SearchStatus::budget_exhausted);
    CHECK(find_homomorphism(mycielski(4), complete(4), SearchBudget{1}).exhausted());
}

TEST_CASE("maximal completion and lemma vertex") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = support::random_graph(7, 0.3, rng);
        if (!find_clique(g, 4).absent()) continue;
        const Graph c = maximal_completion(g, 4);
        CHECK(is_maximal_clique_free(c, 4));
        for (auto [u, v] : g.edges()) CHECK(c.adjacent(u, v));
        if (auto u = lemma_vertex(c)) {
            CHECK(check_lemma_vertex(c, u->vertex));
            const auto dec = decompose_by_lemma(c, u->vertex);
            CHECK(dec.independent_part.edge_count() == 0);
            CHECK(check_homomorphism(c, dec.quotient_target, dec.projection));
        }
    }
    CHECK_THROWS(maximal_completion(complete(4), 4));
    CHECK_THROWS(maximal_completion(cycle(5), 1));
}

TEST_CASE("certificates round trip") {
    const Graph m3 = mycielski(3);
    const auto col = is_k_colorable(m3, 4);
    REQUIRE(col.found());
    const Certificate cert = Certificate::of(m3, *col.witness);
    const auto text = cert.to_json().dump();
    const Certificate back = Certificate::from_json(nlohmann::json::parse(text));
    CHECK(check_certificate(back));
    CHECK(back.to_json().dump() == text);

    const auto emb = contains_subgraph(haggkvist(1), m3);
    REQUIRE(emb.found());
    CHECK(check_certificate(Certificate::of(haggkvist(1), m3, *emb.witness)));

    Certificate bad = cert;
    bad.payload[0] = bad.payload[1];
    CHECK_FALSE(check_certificate(bad));
}

TEST_CASE("embedding respects twin class sizes") {
    const Graph k22 = blow_up(complete(2), 2);
    const Graph k23 = Graph::from_edges(5, std::vector<std::pair<Vertex, Vertex>>{
                                               {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    CHECK(contains_subgraph(k22, cycle(4)).found());
    CHECK(contains_subgraph(blow_up(complete(2), 3), k23).found());
    CHECK(contains_subgraph(join(Graph(2), Graph(4)), k23).found());
    CHECK(contains_subgraph(join(Graph(1), Graph(5)), k23).absent());
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 80; ++trial) {
        const Graph host = blow_up(support::random_graph(3 + rng() % 2, 0.6, rng), 2);
        const Graph pattern = support::random_graph(4 + rng() % 2, 0.5, rng);
        const auto res = contains_subgraph(host, pattern);
        REQUIRE(res.found() == oracle::contains(host, pattern));
        if (res.found()) CHECK(check_embedding(host, pattern, *res.witness));
    }
}
