#include <doctest.h>

#include <set>

#include "kfree/enumeration.hpp"
#include "kfree/generators.hpp"
#include "kfree/io.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace kfree;

TEST_CASE("edge slots follow graph6 order") {
    CHECK(edge_slots(5) == 10);
    CHECK(edge_slot(0) == std::pair<Vertex, Vertex>{0, 1});
    CHECK(edge_slot(1) == std::pair<Vertex, Vertex>{0, 2});
    CHECK(edge_slot(2) == std::pair<Vertex, Vertex>{1, 2});
    CHECK(edge_slot(3) == std::pair<Vertex, Vertex>{0, 3});
    CHECK(labeled_graph(3, 0b111) == complete(3));
}

TEST_CASE("labeled counts") {
    CHECK(labeled_graph_count(4) == 64);
    CHECK(labeled_graph_count(7) == 2097152);
    CHECK_THROWS(labeled_graph_count(8));
    std::size_t triangle_free = 0;
    for_each_labeled_graph(5, [&](const Graph& g) { triangle_free += !oracle::has_clique(g, 3); });
    CHECK(triangle_free == 388);
}

TEST_CASE("shards partition the labeled graphs") {
    std::multiset<std::string> seen;
    for (std::size_t s = 0; s < shard_count(); ++s)
        for_each_labeled_graph_in_shard(4, s, [&](const Graph& g) { seen.insert(to_graph6(g)); });
    CHECK(seen.size() == 64);
    CHECK(std::set<std::string>(seen.begin(), seen.end()).size() == 64);
}

TEST_CASE("iso-reduced counts") {
    const std::vector<std::size_t> expected{1, 1, 2, 4, 11, 34, 156};
    for (std::size_t n = 0; n <= 6; ++n) CHECK(iso_reduced_graphs(n).size() == expected[n]);
}

TEST_CASE("iso-reduced representatives are pairwise non-isomorphic") {
    const auto& reps = iso_reduced_graphs(5);
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j) CHECK_FALSE(oracle::isomorphic(reps[i], reps[j]));
}

TEST_CASE("canonical form is invariant under random relabelling") {
    std::mt19937_64 rng(2024);
    const std::vector<Graph> graphs{support::petersen(), mycielski(3), andrasfai(4), kneser(2, 2),
                                    support::random_graph(12, 0.4, rng), haggkvist(1), cycle(9)};
    for (const Graph& g : graphs) {
        const std::string form = canonical_form(g);
        for (int t = 0; t < 100; ++t) {
            const auto perm = support::random_permutation(g.order(), rng);
            REQUIRE(canonical_form(permute(g, perm)) == form);
        }
    }
}

TEST_CASE("canonical form separates non-isomorphic graphs") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        const Graph a = support::random_graph(6, 0.5, rng);
        const Graph b = support::random_graph(6, 0.5, rng);
        CHECK(isomorphic(a, b) == oracle::isomorphic(a, b));
    }
    const auto lab = canonical_labeling(cycle(6));
    CHECK(permute(cycle(6), lab) == from_graph6(canonical_form(cycle(6))));
}

TEST_CASE("psi oracle") {
    const auto five = psi_oracle(5, 2, 3);
    REQUIRE(five.value);
    CHECK(*five.value == 2);
    CHECK(isomorphic(*five.witness, cycle(5)));
    CHECK_FALSE(psi_oracle(4, 2, 3).value);
    CHECK(*psi_oracle(6, 2, 3).value == 2);
    CHECK(*psi_oracle(8, 2, 3).value == 3);
    CHECK(*psi_oracle(4, 2, 1).value == 2);
    CHECK_THROWS(psi_oracle(9, 2, 3));
}

TEST_CASE("parallel shards rethrow") {
    CHECK_THROWS_AS(parallel_for_shards(8,
                                        [](std::size_t s) {
                                            if (s == 5) throw std::runtime_error("boom");
                                        }),
                    std::runtime_error);
}
