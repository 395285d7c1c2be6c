#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "kfree/graph.hpp"

namespace support {

inline kfree::Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    kfree::GraphBuilder b(n);
    for (kfree::Vertex u = 0; u < n; ++u)
        for (kfree::Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) b.add_edge(u, v);
    return std::move(b).build();
}

inline std::vector<kfree::Vertex> random_permutation(std::size_t n, std::mt19937_64& rng) {
    std::vector<kfree::Vertex> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

inline kfree::Graph petersen() {
    kfree::GraphBuilder b(10);
    for (kfree::Vertex i = 0; i < 5; ++i) {
        b.add_edge(i, (i + 1) % 5);
        b.add_edge(i, i + 5);
        b.add_edge(i + 5, 5 + (i + 2) % 5);
    }
    return std::move(b).build();
}

}  // namespace support
