#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kfree/graph.hpp"

namespace kfree {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

/// Upper bound on search nodes for one solver invocation.
struct SearchBudget {
    std::uint64_t max_nodes = kDefaultNodeBudget;
};

enum class SearchStatus { found, absent, budget_exhausted };

std::string_view to_string(SearchStatus s);

/// Outcome of an exact search. Budget exhaustion is never reported as absent.
template <typename Witness>
struct SearchResult {
    SearchStatus status = SearchStatus::absent;
    std::optional<Witness> witness;
    std::uint64_t nodes = 0;

    bool found() const { return status == SearchStatus::found; }
    bool absent() const { return status == SearchStatus::absent; }
    bool exhausted() const { return status == SearchStatus::budget_exhausted; }
};

struct Clique {
    std::vector<Vertex> vertices;
};

struct Coloring {
    std::vector<std::size_t> colors;
    std::size_t color_count() const;
};

/// map[v] is the image of source vertex v.
struct Homomorphism {
    std::vector<Vertex> map;
};

/// map[p] is the host vertex of pattern vertex p.
struct Embedding {
    std::vector<Vertex> map;
};

struct LemmaVertex {
    Vertex vertex = 0;
};

bool check_clique(const Graph& g, const Clique& c);
bool check_coloring(const Graph& g, const Coloring& c, std::optional<std::size_t> max_colors = std::nullopt);
bool check_homomorphism(const Graph& source, const Graph& target, const Homomorphism& h);
bool check_embedding(const Graph& host, const Graph& pattern, const Embedding& e);
bool check_lemma_vertex(const Graph& g, Vertex u);

/// Lexicographically least s-clique under ascending vertex branching.
SearchResult<Clique> find_clique(const Graph& g, std::size_t s, SearchBudget budget = {});

struct CliqueNumber {
    SearchStatus status = SearchStatus::found;
    std::size_t value = 0;
    Clique witness;
};
CliqueNumber clique_number(const Graph& g, SearchBudget budget = {});

/// Exact DSATUR backtracking; a new color is opened only as the next unused index.
SearchResult<Coloring> is_k_colorable(const Graph& g, std::size_t colors, SearchBudget budget = {});

/// Greedy DSATUR coloring (an upper bound for the chromatic number).
Coloring dsatur_coloring(const Graph& g);

struct ChromaticResult {
    SearchStatus status = SearchStatus::found;
    std::size_t value = 0;
    Coloring witness;
    std::uint64_t nodes = 0;
};

/// Twin reduction, then join decomposition, then per-part branch and bound.
ChromaticResult chromatic_number(const Graph& g, SearchBudget budget = {});
/// The same branch and bound, without twin reduction or join decomposition.
ChromaticResult chromatic_number_direct(const Graph& g, SearchBudget budget = {});

/// Backtracking over the twin-reduced source with forward checking.
SearchResult<Homomorphism> find_homomorphism(const Graph& source, const Graph& target, SearchBudget budget = {});

/// Injective edge-preserving map pattern -> host (not necessarily induced).
SearchResult<Embedding> contains_subgraph(const Graph& host, const Graph& pattern, SearchBudget budget = {});

/// Adds non-edges in lexicographic order whenever no K_q arises. Throws if g contains K_q.
Graph maximal_completion(const Graph& g, std::size_t q, SearchBudget budget = {});
/// True when every non-edge uv has a (q-2)-clique in its common neighborhood.
bool is_maximal_clique_free(const Graph& g, std::size_t q, SearchBudget budget = {});

/// Smallest vertex whose non-neighborhood (excluding itself) spans no edge.
std::optional<LemmaVertex> lemma_vertex(const Graph& g);

struct LemmaDecomposition {
    Vertex vertex = 0;
    Graph independent_part;             ///< induced on V \ (N(u) + u), edgeless
    std::vector<Vertex> independent_vertices;
    Graph neighborhood;                 ///< induced on N(u)
    std::vector<Vertex> neighborhood_vertices;
    /// K_1 + neighborhood: vertex 0 absorbs u and its non-neighbors.
    Graph quotient_target;
    /// Explicit homomorphism g -> quotient_target.
    Homomorphism projection;
};

/// Throws std::invalid_argument if u is not a lemma vertex of g.
LemmaDecomposition decompose_by_lemma(const Graph& g, Vertex u);

enum class CertificateKind { clique, coloring, homomorphism, subgraph_embedding, lemma_vertex };

std::string_view to_string(CertificateKind k);

/// Self-contained witness: subject graphs plus the payload vector.
struct Certificate {
    CertificateKind kind = CertificateKind::clique;
    std::vector<Graph> subjects;
    std::vector<std::size_t> payload;

    static Certificate of(const Graph& g, const Clique& c);
    static Certificate of(const Graph& g, const Coloring& c);
    static Certificate of(const Graph& source, const Graph& target, const Homomorphism& h);
    static Certificate of(const Graph& host, const Graph& pattern, const Embedding& e);
    static Certificate of(const Graph& g, const LemmaVertex& u);

    nlohmann::ordered_json to_json() const;
    static Certificate from_json(const nlohmann::json& doc);
};

/// Re-validates a certificate against its own subject graphs.
bool check_certificate(const Certificate& c);

}  // namespace kfree
