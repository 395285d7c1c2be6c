#include <doctest.h>

#include "kfree/graph.hpp"
#include "kfree/verifiers.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace kfree;

TEST_CASE("vertex set basics") {
    VertexSet s(130, {0, 64, 129});
    CHECK(s.count() == 3);
    CHECK(s.test(64));
    CHECK_FALSE(s.test(63));
    CHECK(s.first() == 0);
    CHECK(s.next(1) == 64);
    CHECK(s.members() == std::vector<Vertex>{0, 64, 129});
    const auto c = s.complemented();
    CHECK(c.count() == 127);
    CHECK_FALSE(c.intersects(s.words()));
    CHECK(VertexSet::full(130).count() == 130);
    s.reset(64);
    CHECK(s.count() == 2);
    CHECK(s.is_subset_of(VertexSet::full(130)));
}

TEST_CASE("builder and accessors") {
    GraphBuilder b(5);
    b.add_edge(0, 1);
    b.add_edge(1, 2);
    b.add_edge(2, 1);
    b.add_edge(3, 4);
    b.remove_edge(3, 4);
    const Graph g = std::move(b).build();
    CHECK(g.edge_count() == 2);
    CHECK(g.adjacent(2, 1));
    CHECK(g.degree(1) == 2);
    CHECK(g.edges() == std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 2}});
    CHECK_THROWS(GraphBuilder(3).add_edge(1, 1));
}

TEST_CASE("standard graphs") {
    CHECK(complete(6).edge_count() == 15);
    CHECK(cycle(7).edge_count() == 7);
    CHECK(is_regular(cycle_power(9, 2)) == std::optional<std::size_t>(4));
    CHECK(complement(complete(4)).edge_count() == 0);
    CHECK(turan(1, 5).edge_count() == 0);
    CHECK(turan_classes(3, 8) == std::vector<std::size_t>{0, 0, 0, 1, 1, 1, 2, 2});
    CHECK(min_degree(turan(3, 8)) == 5);
    CHECK(oracle::clique_number(turan(3, 7)) == 3);
    CHECK_THROWS(cycle_power(2, 1));
    CHECK_THROWS(min_degree(Graph(0)));
}

TEST_CASE("join minimum degree formula on random pairs") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n1 = 1 + rng() % 7;
        const std::size_t n2 = 1 + rng() % 7;
        const Graph a = support::random_graph(n1, 0.4, rng);
        const Graph b = support::random_graph(n2, 0.6, rng);
        const Graph j = join(a, b);
        CHECK(j.order() == n1 + n2);
        CHECK(min_degree(j) == std::min(min_degree(a) + n2, min_degree(b) + n1));
        CHECK(j.edge_count() == a.edge_count() + b.edge_count() + n1 * n2);
    }
}

TEST_CASE("blow-up labels and degrees") {
    const Graph c5 = cycle(5);
    const Graph g = blow_up(c5, 3);
    CHECK(g.order() == 15);
    CHECK(is_regular(g) == std::optional<std::size_t>(6));
    CHECK(g.adjacent(0 * 3 + 2, 1 * 3 + 0));
    CHECK_FALSE(g.adjacent(0, 1));
    CHECK_THROWS(blow_up(c5, 0));
}

TEST_CASE("permute and induced subgraph") {
    const Graph p = Graph::from_edges(3, std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 2}});
    const std::vector<Vertex> perm{2, 0, 1};
    const Graph q = permute(p, perm);
    CHECK(q.adjacent(2, 0));
    CHECK(q.adjacent(0, 1));
    CHECK_FALSE(q.adjacent(2, 1));
    const std::vector<Vertex> keep{0, 2};
    CHECK(induced_subgraph(p, keep).edge_count() == 0);
}

TEST_CASE("twin reduction preserves chromatic number") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph base = support::random_graph(4 + rng() % 3, 0.5, rng);
        const Graph g = blow_up(base, 1 + rng() % 2);
        const auto tr = twin_reduce(g);
        CHECK(tr.quotient.order() <= base.order());
        CHECK(oracle::chromatic_number(tr.quotient) == oracle::chromatic_number(g));
        for (Vertex v = 0; v < g.order(); ++v) {
            const auto& cls = tr.classes[tr.class_of[v]];
            CHECK(std::find(cls.begin(), cls.end(), v) != cls.end());
        }
    }
}

TEST_CASE("join decomposition and components") {
    const Graph g = join(join(cycle(5), Graph(2)), complete(1));
    const auto parts = join_decompose(g);
    CHECK(parts.size() == 3);
    std::size_t total = 0;
    for (const auto& part : parts) total += part.graph.order();
    CHECK(total == 8);
    CHECK(connected_components(Graph(3)).size() == 3);
    CHECK(connected_components(cycle(6)).size() == 1);
}
