#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "kfree/vertex_set.hpp"

namespace kfree {

inline constexpr std::size_t kMaxOrder = 4096;

class Graph;

/// Mutable staging area for a Graph. Graph values themselves never change.
class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t order);

    std::size_t order() const { return order_; }
    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);
    bool adjacent(Vertex u, Vertex v) const;

    Graph build() &&;
    Graph build() const&;

private:
    friend class Graph;
    std::uint64_t* row(Vertex u) { return bits_.data() + u * stride_; }
    const std::uint64_t* row(Vertex u) const { return bits_.data() + u * stride_; }

    std::size_t order_;
    std::size_t stride_;
    std::vector<std::uint64_t> bits_;
};

/// Simple undirected graph on vertices 0..n-1, one packed adjacency row per vertex.
class Graph {
public:
    Graph() = default;
    /// Edgeless graph of the given order.
    explicit Graph(std::size_t order);

    static Graph from_edges(std::size_t order, std::span<const std::pair<Vertex, Vertex>> edges);

    std::size_t order() const { return order_; }
    std::size_t stride() const { return stride_; }
    bool adjacent(Vertex u, Vertex v) const {
        return (bits_[u * stride_ + v / kWordBits] >> (v % kWordBits)) & 1U;
    }
    std::span<const std::uint64_t> row(Vertex u) const {
        return {bits_.data() + u * stride_, stride_};
    }
    VertexSet neighbors(Vertex u) const { return VertexSet(order_, row(u)); }
    std::size_t degree(Vertex u) const;
    std::vector<std::size_t> degrees() const;
    std::size_t edge_count() const;
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    GraphBuilder to_builder() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend class GraphBuilder;

    std::size_t order_ = 0;
    std::size_t stride_ = 0;
    std::vector<std::uint64_t> bits_;
};

Graph empty_graph(std::size_t n);
Graph complete(std::size_t n);
/// Vertices adjacent iff their circular distance on Z_n is at most p.
Graph cycle_power(std::size_t n, std::size_t p);
Graph cycle(std::size_t n);
Graph complement(const Graph& g);
/// Disjoint union plus all cross edges; g1 keeps labels, g2 is shifted by |g1|.
Graph join(const Graph& g1, const Graph& g2);
/// Copies (u, i) get label u*t + i.
Graph blow_up(const Graph& g, std::size_t t);
/// Complete p-partite graph on n vertices; the first n mod p classes get ceil(n/p) vertices.
Graph turan(std::size_t p, std::size_t n);
/// Class index of each vertex of turan(p, n).
std::vector<std::size_t> turan_classes(std::size_t p, std::size_t n);

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
Graph induced_subgraph(const Graph& g, const VertexSet& vertices);
/// Relabels vertex v as perm[v].
Graph permute(const Graph& g, std::span<const Vertex> perm);

/// Intersection of the neighborhoods of the members of s.
VertexSet common_neighborhood(const Graph& g, const VertexSet& s);

std::size_t min_degree(const Graph& g);
std::size_t max_degree(const Graph& g);
std::optional<std::size_t> is_regular(const Graph& g);

struct TwinReduction {
    Graph quotient;
    /// class_of[v] is the quotient vertex representing v.
    std::vector<Vertex> class_of;
    /// Original vertices of each class, ascending.
    std::vector<std::vector<Vertex>> classes;
};

/// Quotient by equal open neighborhoods. Classes are numbered by their smallest member.
TwinReduction twin_reduce(const Graph& g);

struct JoinPart {
    Graph graph;
    /// Original labels of the part's vertices, ascending.
    std::vector<Vertex> vertices;
};

/// Splits g along the connected components of its complement; g is the join of the parts.
std::vector<JoinPart> join_decompose(const Graph& g);

std::vector<std::vector<Vertex>> connected_components(const Graph& g);

}  // namespace kfree
