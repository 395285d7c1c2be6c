#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kfree/graph.hpp"
#include "kfree/verifiers.hpp"

namespace kfree {

/// canonical_labeling(g)[v] is the canonical position of vertex v.
std::vector<Vertex> canonical_labeling(const Graph& g);
/// graph6 of the canonically relabelled graph; equal iff isomorphic.
std::string canonical_form(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

inline constexpr std::size_t kMaxLabeledOrder = 7;
inline constexpr std::size_t kMaxIsoReducedOrder = 9;
inline constexpr std::size_t kShardBits = 12;

std::size_t edge_slots(std::size_t n);
/// Edge slot i <-> pair, in graph6 order (0,1), (0,2), (1,2), (0,3), ...
std::pair<Vertex, Vertex> edge_slot(std::size_t index);
Graph labeled_graph(std::size_t n, std::uint64_t mask);
std::uint64_t labeled_graph_count(std::size_t n);
std::size_t shard_count();

/// Visits every labeled graph on n vertices in increasing edge-mask order.
void for_each_labeled_graph(std::size_t n, const std::function<void(const Graph&)>& visit);
/// Visits the graphs whose low 12 mask bits equal shard, in increasing mask order.
void for_each_labeled_graph_in_shard(std::size_t n, std::size_t shard,
                                     const std::function<void(const Graph&)>& visit);

/// Labeled graphs on n <= 7 vertices, edge-mask order.
std::vector<Graph> all_graphs(std::size_t n);

/// One canonical representative per isomorphism class, n <= 9. Results are cached.
const std::vector<Graph>& iso_reduced_graphs(std::size_t n);

/// Runs job(shard) for every shard id, using the available hardware threads.
void parallel_for_shards(std::size_t count, const std::function<void(std::size_t)>& job);

struct PsiResult {
    std::size_t n = 0;
    std::size_t r = 0;
    std::size_t h = 0;
    std::optional<std::size_t> value;
    std::optional<Graph> witness;
    std::size_t graphs_scanned = 0;
    SearchStatus status = SearchStatus::found;
};

/// max{ min degree : K_{r+1}-free, order n, chromatic number >= h } over iso_reduced_graphs(n), n <= 8.
PsiResult psi_oracle(std::size_t n, std::size_t r, std::size_t h, SearchBudget budget = {});

}  // namespace kfree
