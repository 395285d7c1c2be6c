#include "kfree/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <string>

namespace kfree {

namespace {

void check_order(std::size_t n) {
    if (n > kMaxOrder)
        throw std::invalid_argument("graph order " + std::to_string(n) + " exceeds " +
                                    std::to_string(kMaxOrder));
}

void check_vertex(std::size_t n, Vertex v) {
    if (v >= n) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

}  // namespace

GraphBuilder::GraphBuilder(std::size_t order)
    : order_(order), stride_(words_for(order)), bits_((check_order(order), order * stride_), 0) {}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
    check_vertex(order_, u);
    check_vertex(order_, v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    row(u)[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
    row(v)[u / kWordBits] |= std::uint64_t{1} << (u % kWordBits);
}

void GraphBuilder::remove_edge(Vertex u, Vertex v) {
    check_vertex(order_, u);
    check_vertex(order_, v);
    row(u)[v / kWordBits] &= ~(std::uint64_t{1} << (v % kWordBits));
    row(v)[u / kWordBits] &= ~(std::uint64_t{1} << (u % kWordBits));
}

bool GraphBuilder::adjacent(Vertex u, Vertex v) const {
    return (row(u)[v / kWordBits] >> (v % kWordBits)) & 1U;
}

Graph GraphBuilder::build() && {
    Graph g;
    g.order_ = order_;
    g.stride_ = stride_;
    g.bits_ = std::move(bits_);
    return g;
}

Graph GraphBuilder::build() const& { return GraphBuilder(*this).build(); }

Graph::Graph(std::size_t order) : Graph(GraphBuilder(order).build()) {}

Graph Graph::from_edges(std::size_t order, std::span<const std::pair<Vertex, Vertex>> edges) {
    GraphBuilder b(order);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return std::move(b).build();
}

std::size_t Graph::degree(Vertex u) const {
    std::size_t d = 0;
    for (auto w : row(u)) d += static_cast<std::size_t>(std::popcount(w));
    return d;
}

std::vector<std::size_t> Graph::degrees() const {
    std::vector<std::size_t> out(order_);
    for (Vertex u = 0; u < order_; ++u) out[u] = degree(u);
    return out;
}

std::size_t Graph::edge_count() const {
    std::size_t total = 0;
    for (Vertex u = 0; u < order_; ++u) total += degree(u);
    return total / 2;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < order_; ++u)
        neighbors(u).for_each([&](Vertex v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

GraphBuilder Graph::to_builder() const {
    GraphBuilder b(order_);
    b.bits_ = bits_;
    return b;
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph complete(std::size_t n) {
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
    return std::move(b).build();
}

Graph cycle_power(std::size_t n, std::size_t p) {
    if (n < 3) throw std::invalid_argument("cycle_power requires n >= 3");
    if (p < 1) throw std::invalid_argument("cycle_power requires p >= 1");
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (std::min(v - u, n - (v - u)) <= p) b.add_edge(u, v);
    return std::move(b).build();
}

Graph cycle(std::size_t n) { return cycle_power(n, 1); }

Graph complement(const Graph& g) {
    const std::size_t n = g.order();
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) b.add_edge(u, v);
    return std::move(b).build();
}

Graph join(const Graph& g1, const Graph& g2) {
    const std::size_t n1 = g1.order();
    const std::size_t n = n1 + g2.order();
    GraphBuilder b(n);
    for (auto [u, v] : g1.edges()) b.add_edge(u, v);
    for (auto [u, v] : g2.edges()) b.add_edge(n1 + u, n1 + v);
    for (Vertex u = 0; u < n1; ++u)
        for (Vertex v = n1; v < n; ++v) b.add_edge(u, v);
    return std::move(b).build();
}

Graph blow_up(const Graph& g, std::size_t t) {
    if (t == 0) throw std::invalid_argument("blow_up factor must be at least 1");
    GraphBuilder b(g.order() * t);
    for (auto [u, v] : g.edges())
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t j = 0; j < t; ++j) b.add_edge(u * t + i, v * t + j);
    return std::move(b).build();
}

std::vector<std::size_t> turan_classes(std::size_t p, std::size_t n) {
    if (p == 0) {
        if (n != 0) throw std::invalid_argument("turan graph with 0 parts needs n = 0");
        return {};
    }
    std::vector<std::size_t> cls(n);
    const std::size_t small = n / p;
    const std::size_t big_count = n % p;
    Vertex v = 0;
    for (std::size_t c = 0; c < p; ++c) {
        const std::size_t size = small + (c < big_count ? 1 : 0);
        for (std::size_t i = 0; i < size; ++i) cls[v++] = c;
    }
    return cls;
}

Graph turan(std::size_t p, std::size_t n) {
    const auto cls = turan_classes(p, n);
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (cls[u] != cls[v]) b.add_edge(u, v);
    return std::move(b).build();
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    GraphBuilder b(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (g.adjacent(vertices[i], vertices[j])) b.add_edge(i, j);
    return std::move(b).build();
}

Graph induced_subgraph(const Graph& g, const VertexSet& vertices) {
    const auto members = vertices.members();
    return induced_subgraph(g, std::span<const Vertex>(members));
}

Graph permute(const Graph& g, std::span<const Vertex> perm) {
    if (perm.size() != g.order()) throw std::invalid_argument("permutation size mismatch");
    GraphBuilder b(g.order());
    for (auto [u, v] : g.edges()) b.add_edge(perm[u], perm[v]);
    return std::move(b).build();
}

VertexSet common_neighborhood(const Graph& g, const VertexSet& s) {
    if (s.empty()) throw std::invalid_argument("common_neighborhood of an empty set");
    VertexSet out = VertexSet::full(g.order());
    s.for_each([&](Vertex v) { out &= g.row(v); });
    return out;
}

std::size_t min_degree(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("min_degree of the empty graph");
    std::size_t best = g.order();
    for (Vertex u = 0; u < g.order(); ++u) best = std::min(best, g.degree(u));
    return best;
}

std::size_t max_degree(const Graph& g) {
    std::size_t best = 0;
    for (Vertex u = 0; u < g.order(); ++u) best = std::max(best, g.degree(u));
    return best;
}

std::optional<std::size_t> is_regular(const Graph& g) {
    if (g.order() == 0) return std::nullopt;
    const std::size_t d = g.degree(0);
    for (Vertex u = 1; u < g.order(); ++u)
        if (g.degree(u) != d) return std::nullopt;
    return d;
}

TwinReduction twin_reduce(const Graph& g) {
    const std::size_t n = g.order();
    TwinReduction out;
    out.class_of.assign(n, 0);
    std::map<std::vector<std::uint64_t>, Vertex> seen;
    for (Vertex v = 0; v < n; ++v) {
        std::vector<std::uint64_t> key(g.row(v).begin(), g.row(v).end());
        auto [it, inserted] = seen.emplace(std::move(key), out.classes.size());
        if (inserted) out.classes.emplace_back();
        out.class_of[v] = it->second;
        out.classes[it->second].push_back(v);
    }
    std::vector<Vertex> reps;
    reps.reserve(out.classes.size());
    for (const auto& c : out.classes) reps.push_back(c.front());
    out.quotient = induced_subgraph(g, std::span<const Vertex>(reps));
    return out;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<std::vector<Vertex>> comps;
    VertexSet unvisited = VertexSet::full(n);
    while (!unvisited.empty()) {
        const Vertex start = unvisited.first();
        VertexSet comp(n);
        VertexSet frontier(n);
        frontier.set(start);
        unvisited.reset(start);
        while (!frontier.empty()) {
            comp |= frontier;
            VertexSet next(n);
            frontier.for_each([&](Vertex v) {
                VertexSet nb = g.neighbors(v);
                nb &= unvisited;
                next |= nb;
            });
            unvisited.subtract(next);
            frontier = std::move(next);
        }
        comps.push_back(comp.members());
    }
    return comps;
}

std::vector<JoinPart> join_decompose(const Graph& g) {
    std::vector<JoinPart> parts;
    for (auto& comp : connected_components(complement(g))) {
        JoinPart part;
        part.graph = induced_subgraph(g, std::span<const Vertex>(comp));
        part.vertices = std::move(comp);
        parts.push_back(std::move(part));
    }
    return parts;
}

}  // namespace kfree
