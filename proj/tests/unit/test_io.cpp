#include <doctest.h>

#include "kfree/enumeration.hpp"
#include "kfree/io.hpp"
#include "support.hpp"

using namespace kfree;

TEST_CASE("graph6 reference strings") {
    CHECK(to_graph6(Graph(0)) == "?");
    CHECK(to_graph6(Graph(1)) == "@");
    CHECK(to_graph6(complete(3)) == "Bw");
    CHECK(to_graph6(complete(4)) == "C~");
    CHECK(to_graph6(cycle(5)) == "Dhc");
    CHECK(to_graph6(support::petersen()) == "IheA@GUAo");
}

TEST_CASE("graph6 long header") {
    const Graph g = cycle(70);
    const std::string text = to_graph6(g);
    CHECK(text.substr(0, 4) == std::string{'~', '?', '@', 'E'});
    CHECK(from_graph6(text) == g);
}

TEST_CASE("graph6 decoding") {
    CHECK(from_graph6(">>graph6<<Bw\n") == complete(3));
    CHECK_THROWS_AS(from_graph6("C"), std::invalid_argument);
    CHECK_THROWS_AS(from_graph6("Bw?"), std::invalid_argument);
    CHECK_THROWS_AS(from_graph6("B\x01"), std::invalid_argument);
    // padding bits must be zero
    CHECK_THROWS_AS(from_graph6("Bx"), std::invalid_argument);
}

TEST_CASE("graph6 round trip is byte identical over iso-reduced graphs on 6 vertices") {
    for (const Graph& g : iso_reduced_graphs(6)) {
        const std::string text = to_graph6(g);
        CHECK(to_graph6(from_graph6(text)) == text);
        CHECK(from_graph6(text) == g);
    }
}

TEST_CASE("dot and json") {
    const Graph p = Graph::from_edges(3, std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 2}});
    CHECK(to_dot(p) == "graph G {\n  0;\n  1;\n  2;\n  0 -- 1;\n  1 -- 2;\n}\n");
    const auto doc = to_adjacency_json(p);
    CHECK(doc.dump() == R"({"order":3,"edges":[[0,1],[1,2]]})");
    CHECK(from_adjacency_json(nlohmann::json::parse(doc.dump())) == p);
    CHECK_THROWS(from_adjacency_json(nlohmann::json::parse(R"({"order":2,"edges":[[0,2]]})")));
}
