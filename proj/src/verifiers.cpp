#include "kfree/verifiers.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "kfree/io.hpp"

namespace kfree {

std::string_view to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::found: return "found";
        case SearchStatus::absent: return "absent";
        case SearchStatus::budget_exhausted: return "budget_exhausted";
    }
    return "?";
}

std::size_t Coloring::color_count() const {
    if (colors.empty()) return 0;
    return *std::max_element(colors.begin(), colors.end()) + 1;
}

// ---------------------------------------------------------------------------
// Certificate checks

bool check_clique(const Graph& g, const Clique& c) {
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
        if (c.vertices[i] >= g.order()) return false;
        for (std::size_t j = i + 1; j < c.vertices.size(); ++j)
            if (!g.adjacent(c.vertices[i], c.vertices[j])) return false;
    }
    return true;
}

bool check_coloring(const Graph& g, const Coloring& c, std::optional<std::size_t> max_colors) {
    if (c.colors.size() != g.order()) return false;
    if (max_colors && c.color_count() > *max_colors) return false;
    for (auto [u, v] : g.edges())
        if (c.colors[u] == c.colors[v]) return false;
    return true;
}

bool check_homomorphism(const Graph& source, const Graph& target, const Homomorphism& h) {
    if (h.map.size() != source.order()) return false;
    for (Vertex x : h.map)
        if (x >= target.order()) return false;
    for (auto [u, v] : source.edges())
        if (!target.adjacent(h.map[u], h.map[v])) return false;
    return true;
}

bool check_embedding(const Graph& host, const Graph& pattern, const Embedding& e) {
    if (e.map.size() != pattern.order()) return false;
    VertexSet used(host.order());
    for (Vertex x : e.map) {
        if (x >= host.order() || used.test(x)) return false;
        used.set(x);
    }
    for (auto [u, v] : pattern.edges())
        if (!host.adjacent(e.map[u], e.map[v])) return false;
    return true;
}

bool check_lemma_vertex(const Graph& g, Vertex u) {
    if (u >= g.order()) return false;
    VertexSet outside = g.neighbors(u).complemented();
    outside.reset(u);
    bool independent = true;
    outside.for_each([&](Vertex v) {
        if (outside.intersects(g.row(v))) independent = false;
    });
    return independent;
}

// ---------------------------------------------------------------------------
// Cliques

namespace {

struct NodeCounter {
    std::uint64_t nodes = 0;
    std::uint64_t limit = kDefaultNodeBudget;
    bool exhausted = false;

    /// Counts one node; false once the budget is spent.
    bool tick() {
        if (++nodes > limit) exhausted = true;
        return !exhausted;
    }
};

/// Number of colors used by a greedy coloring of cand; an upper bound on its clique number.
template <typename Rows>
std::size_t greedy_color_bound(const Rows& rows, const VertexSet& cand) {
    std::size_t colors = 0;
    VertexSet uncolored = cand;
    while (!uncolored.empty()) {
        ++colors;
        VertexSet open = uncolored;
        while (!open.empty()) {
            const Vertex v = open.first();
            uncolored.reset(v);
            open.reset(v);
            open.subtract(rows(v));
        }
    }
    return colors;
}

template <typename Rows>
bool extend_clique(const Rows& rows, std::vector<Vertex>& chosen, VertexSet cand, std::size_t target,
                   NodeCounter& counter) {
    if (!counter.tick()) return false;
    if (chosen.size() == target) return true;
    if (chosen.size() + cand.count() < target) return false;
    if (chosen.size() + greedy_color_bound(rows, cand) < target) return false;
    while (!cand.empty()) {
        if (chosen.size() + cand.count() < target) return false;
        const Vertex v = cand.first();
        VertexSet next = cand;
        next &= rows(v);
        chosen.push_back(v);
        if (extend_clique(rows, chosen, std::move(next), target, counter)) return true;
        if (counter.exhausted) return false;
        chosen.pop_back();
        cand.reset(v);
    }
    return false;
}

template <typename Rows>
SearchResult<Clique> clique_in(const Rows& rows, const VertexSet& cand, std::size_t s, NodeCounter& counter) {
    SearchResult<Clique> result;
    std::vector<Vertex> chosen;
    const bool ok = extend_clique(rows, chosen, cand, s, counter);
    result.nodes = counter.nodes;
    if (ok) {
        result.status = SearchStatus::found;
        result.witness = Clique{std::move(chosen)};
    } else {
        result.status = counter.exhausted ? SearchStatus::budget_exhausted : SearchStatus::absent;
    }
    return result;
}

}  // namespace

SearchResult<Clique> find_clique(const Graph& g, std::size_t s, SearchBudget budget) {
    NodeCounter counter{0, budget.max_nodes};
    auto rows = [&g](Vertex v) { return g.row(v); };
    return clique_in(rows, VertexSet::full(g.order()), s, counter);
}

CliqueNumber clique_number(const Graph& g, SearchBudget budget) {
    CliqueNumber out;
    for (std::size_t s = 1; s <= g.order(); ++s) {
        auto r = find_clique(g, s, budget);
        if (r.exhausted()) {
            out.status = SearchStatus::budget_exhausted;
            return out;
        }
        if (!r.found()) break;
        out.value = s;
        out.witness = std::move(*r.witness);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Coloring

namespace {

class DsaturSearch {
public:
    DsaturSearch(const Graph& g, std::size_t colors, std::uint64_t limit)
        : g_(g),
          n_(g.order()),
          k_(colors),
          color_(n_, kNone),
          seen_(n_ * colors, 0),
          satur_(n_, 0),
          degree_(g.degrees()),
          counter_{0, limit} {}

    bool run() { return assign(0); }
    bool exhausted() const { return counter_.exhausted; }
    std::uint64_t nodes() const { return counter_.nodes; }
    Coloring coloring() const { return Coloring{color_}; }

private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    Vertex select() const {
        Vertex best = n_;
        for (Vertex v = 0; v < n_; ++v) {
            if (color_[v] != kNone) continue;
            if (best == n_ || satur_[v] > satur_[best] ||
                (satur_[v] == satur_[best] && degree_[v] > degree_[best]))
                best = v;
        }
        return best;
    }

    void paint(Vertex v, std::size_t c) {
        color_[v] = c;
        g_.neighbors(v).for_each([&](Vertex w) {
            if (seen_[w * k_ + c]++ == 0) ++satur_[w];
        });
    }

    void unpaint(Vertex v, std::size_t c) {
        color_[v] = kNone;
        g_.neighbors(v).for_each([&](Vertex w) {
            if (--seen_[w * k_ + c] == 0) --satur_[w];
        });
    }

    bool assign(std::size_t colored) {
        if (!counter_.tick()) return false;
        if (colored == n_) return true;
        const Vertex v = select();
        const std::size_t open = std::min(used_ + 1, k_);
        for (std::size_t c = 0; c < open; ++c) {
            if (seen_[v * k_ + c] != 0) continue;
            const std::size_t saved = used_;
            used_ = std::max(used_, c + 1);
            paint(v, c);
            if (assign(colored + 1)) return true;
            unpaint(v, c);
            used_ = saved;
            if (counter_.exhausted) return false;
        }
        return false;
    }

    const Graph& g_;
    std::size_t n_;
    std::size_t k_;
    std::vector<std::size_t> color_;
    std::vector<std::uint32_t> seen_;
    std::vector<std::size_t> satur_;
    std::vector<std::size_t> degree_;
    std::size_t used_ = 0;
    NodeCounter counter_;
};

}  // namespace

SearchResult<Coloring> is_k_colorable(const Graph& g, std::size_t colors, SearchBudget budget) {
    SearchResult<Coloring> result;
    const std::size_t n = g.order();
    if (n == 0) {
        result.status = SearchStatus::found;
        result.witness = Coloring{};
        return result;
    }
    if (colors == 0) return result;
    if (colors >= n) {
        std::vector<std::size_t> c(n);
        std::iota(c.begin(), c.end(), 0);
        result.status = SearchStatus::found;
        result.witness = Coloring{std::move(c)};
        return result;
    }
    DsaturSearch search(g, colors, budget.max_nodes);
    const bool ok = search.run();
    result.nodes = search.nodes();
    if (ok) {
        result.status = SearchStatus::found;
        result.witness = search.coloring();
    } else if (search.exhausted()) {
        result.status = SearchStatus::budget_exhausted;
    }
    return result;
}

Coloring dsatur_coloring(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<std::size_t> color(n, static_cast<std::size_t>(-1));
    std::vector<VertexSet> forbidden(n, VertexSet(n + 1));
    std::vector<std::size_t> satur(n, 0);
    const auto degree = g.degrees();
    for (std::size_t step = 0; step < n; ++step) {
        Vertex best = n;
        for (Vertex v = 0; v < n; ++v) {
            if (color[v] != static_cast<std::size_t>(-1)) continue;
            if (best == n || satur[v] > satur[best] || (satur[v] == satur[best] && degree[v] > degree[best]))
                best = v;
        }
        std::size_t c = 0;
        while (forbidden[best].test(c)) ++c;
        color[best] = c;
        g.neighbors(best).for_each([&](Vertex w) {
            if (!forbidden[w].test(c)) {
                forbidden[w].set(c);
                ++satur[w];
            }
        });
    }
    return Coloring{std::move(color)};
}

ChromaticResult chromatic_number_direct(const Graph& g, SearchBudget budget) {
    if (g.order() == 0) throw std::invalid_argument("chromatic_number of the empty graph");
    ChromaticResult out;
    out.witness = dsatur_coloring(g);
    const std::size_t upper = out.witness.color_count();
    const auto omega = clique_number(g, budget);
    if (omega.status == SearchStatus::budget_exhausted) {
        out.status = SearchStatus::budget_exhausted;
        return out;
    }
    for (std::size_t k = omega.value; k < upper; ++k) {
        auto r = is_k_colorable(g, k, budget);
        out.nodes += r.nodes;
        if (r.exhausted()) {
            out.status = SearchStatus::budget_exhausted;
            return out;
        }
        if (r.found()) {
            out.value = k;
            out.witness = std::move(*r.witness);
            return out;
        }
    }
    out.value = upper;
    return out;
}

ChromaticResult chromatic_number(const Graph& g, SearchBudget budget) {
    if (g.order() == 0) throw std::invalid_argument("chromatic_number of the empty graph");
    const TwinReduction twins = twin_reduce(g);
    const auto parts = join_decompose(twins.quotient);

    ChromaticResult out;
    std::vector<std::size_t> quotient_color(twins.quotient.order(), 0);
    for (const auto& part : parts) {
        auto r = chromatic_number_direct(part.graph, budget);
        out.nodes += r.nodes;
        if (r.status == SearchStatus::budget_exhausted) {
            out.status = SearchStatus::budget_exhausted;
            return out;
        }
        for (std::size_t i = 0; i < part.vertices.size(); ++i)
            quotient_color[part.vertices[i]] = out.value + r.witness.colors[i];
        out.value += r.value;
    }
    out.witness.colors.resize(g.order());
    for (Vertex v = 0; v < g.order(); ++v) out.witness.colors[v] = quotient_color[twins.class_of[v]];
    return out;
}

// ---------------------------------------------------------------------------
// Homomorphisms

namespace {

class HomomorphismSearch {
public:
    HomomorphismSearch(const Graph& source, const Graph& target, std::uint64_t limit)
        : src_(source), dst_(target), map_(source.order(), 0), assigned_(source.order(), false),
          degree_(source.degrees()), counter_{0, limit} {}

    bool run() {
        VertexSet all = VertexSet::full(dst_.order());
        VertexSet non_isolated(dst_.order());
        for (Vertex x = 0; x < dst_.order(); ++x)
            if (dst_.degree(x) > 0) non_isolated.set(x);
        std::vector<VertexSet> domains;
        domains.reserve(src_.order());
        for (Vertex v = 0; v < src_.order(); ++v) {
            domains.push_back(degree_[v] > 0 ? non_isolated : all);
            if (domains.back().empty()) return false;
        }
        return assign(domains, 0);
    }

    bool exhausted() const { return counter_.exhausted; }
    std::uint64_t nodes() const { return counter_.nodes; }
    const std::vector<Vertex>& map() const { return map_; }

private:
    bool assign(const std::vector<VertexSet>& domains, std::size_t done) {
        if (!counter_.tick()) return false;
        if (done == src_.order()) return true;

        Vertex v = src_.order();
        std::size_t best_size = 0;
        for (Vertex w = 0; w < src_.order(); ++w) {
            if (assigned_[w]) continue;
            const std::size_t size = domains[w].count();
            if (v == src_.order() || size < best_size || (size == best_size && degree_[w] > degree_[v])) {
                v = w;
                best_size = size;
            }
        }

        assigned_[v] = true;
        bool ok = false;
        domains[v].for_each([&](Vertex x) {
            if (ok || counter_.exhausted) return;
            std::vector<VertexSet> next = domains;
            bool wiped = false;
            src_.neighbors(v).for_each([&](Vertex w) {
                if (wiped || assigned_[w]) return;
                next[w] &= dst_.row(x);
                if (next[w].empty()) wiped = true;
            });
            if (wiped) return;
            map_[v] = x;
            if (assign(next, done + 1)) ok = true;
        });
        if (!ok) assigned_[v] = false;
        return ok;
    }

    const Graph& src_;
    const Graph& dst_;
    std::vector<Vertex> map_;
    std::vector<bool> assigned_;
    std::vector<std::size_t> degree_;
    NodeCounter counter_;
};

}  // namespace

SearchResult<Homomorphism> find_homomorphism(const Graph& source, const Graph& target, SearchBudget budget) {
    SearchResult<Homomorphism> result;
    if (source.order() == 0) {
        result.status = SearchStatus::found;
        result.witness = Homomorphism{};
        return result;
    }
    if (target.order() == 0) return result;

    const TwinReduction twins = twin_reduce(source);
    HomomorphismSearch search(twins.quotient, target, budget.max_nodes);
    const bool ok = search.run();
    result.nodes = search.nodes();
    if (ok) {
        Homomorphism h;
        h.map.resize(source.order());
        for (Vertex v = 0; v < source.order(); ++v) h.map[v] = search.map()[twins.class_of[v]];
        result.status = SearchStatus::found;
        result.witness = std::move(h);
    } else if (search.exhausted()) {
        result.status = SearchStatus::budget_exhausted;
    }
    return result;
}

// ---------------------------------------------------------------------------
// Subgraph containment

namespace {

/// Highest degree first, then vertices with the most already-ordered neighbors.
std::vector<Vertex> pattern_order(const Graph& pattern) {
    const std::size_t n = pattern.order();
    const auto degree = pattern.degrees();
    std::vector<Vertex> order;
    std::vector<std::size_t> links(n, 0);
    std::vector<bool> placed(n, false);
    for (std::size_t step = 0; step < n; ++step) {
        Vertex best = n;
        for (Vertex v = 0; v < n; ++v) {
            if (placed[v]) continue;
            if (best == n || links[v] > links[best] || (links[v] == links[best] && degree[v] > degree[best]))
                best = v;
        }
        placed[best] = true;
        order.push_back(best);
        pattern.neighbors(best).for_each([&](Vertex w) { ++links[w]; });
    }
    return order;
}

/// Embeds the pattern into the twin quotient of the host: each quotient vertex can absorb as many
/// pattern vertices as its twin class has members, which lifts to an injective map.
class EmbeddingSearch {
public:
    EmbeddingSearch(const Graph& host, const Graph& pattern, std::uint64_t limit)
        : host_(host), twins_(twin_reduce(host)), pattern_(pattern), order_(pattern_order(pattern)),
          map_(pattern.order(), 0), used_(twins_.quotient.order(), 0), counter_{0, limit} {}

    bool run() {
        const Graph& q = twins_.quotient;
        std::vector<VertexSet> domains;
        for (Vertex p = 0; p < pattern_.order(); ++p) {
            VertexSet d(q.order());
            const std::size_t need = pattern_.degree(p);
            for (Vertex x = 0; x < q.order(); ++x)
                if (host_.degree(twins_.classes[x].front()) >= need) d.set(x);
            if (d.empty()) return false;
            domains.push_back(std::move(d));
        }
        return assign(domains, 0);
    }

    bool exhausted() const { return counter_.exhausted; }
    std::uint64_t nodes() const { return counter_.nodes; }

    /// Host vertex of each pattern vertex.
    std::vector<Vertex> lifted() const {
        std::vector<std::size_t> next(twins_.quotient.order(), 0);
        std::vector<Vertex> out(pattern_.order());
        for (Vertex p : order_) out[p] = twins_.classes[map_[p]][next[map_[p]]++];
        return out;
    }

private:
    bool assign(const std::vector<VertexSet>& domains, std::size_t depth) {
        if (!counter_.tick()) return false;
        if (depth == order_.size()) return true;
        const Vertex p = order_[depth];
        bool ok = false;
        domains[p].for_each([&](Vertex x) {
            if (ok || counter_.exhausted) return;
            const bool full = ++used_[x] == twins_.classes[x].size();
            std::vector<VertexSet> next = domains;
            bool wiped = false;
            for (std::size_t later = depth + 1; later < order_.size() && !wiped; ++later) {
                const Vertex q = order_[later];
                if (full) next[q].reset(x);
                if (pattern_.adjacent(p, q)) next[q] &= twins_.quotient.row(x);
                if (next[q].empty()) wiped = true;
            }
            if (!wiped) {
                map_[p] = x;
                if (assign(next, depth + 1)) ok = true;
            }
            --used_[x];
        });
        return ok;
    }

    const Graph& host_;
    TwinReduction twins_;
    const Graph& pattern_;
    std::vector<Vertex> order_;
    std::vector<Vertex> map_;
    std::vector<std::size_t> used_;
    NodeCounter counter_;
};

}  // namespace

SearchResult<Embedding> contains_subgraph(const Graph& host, const Graph& pattern, SearchBudget budget) {
    SearchResult<Embedding> result;
    if (pattern.order() == 0) {
        result.status = SearchStatus::found;
        result.witness = Embedding{};
        return result;
    }
    if (pattern.order() > host.order() || pattern.edge_count() > host.edge_count()) return result;
    EmbeddingSearch search(host, pattern, budget.max_nodes);
    const bool ok = search.run();
    result.nodes = search.nodes();
    if (ok) {
        result.status = SearchStatus::found;
        result.witness = Embedding{search.lifted()};
    } else if (search.exhausted()) {
        result.status = SearchStatus::budget_exhausted;
    }
    return result;
}

// ---------------------------------------------------------------------------
// Maximal K_q-free completion and the lemma vertex

Graph maximal_completion(const Graph& g, std::size_t q, SearchBudget budget) {
    if (q < 2) throw std::invalid_argument("maximal_completion requires q >= 2");
    const auto existing = find_clique(g, q, budget);
    if (existing.exhausted()) throw std::runtime_error("maximal_completion: node budget exhausted");
    if (existing.found()) throw std::invalid_argument("maximal_completion: input already contains K_q");

    const std::size_t n = g.order();
    std::vector<VertexSet> rows;
    rows.reserve(n);
    for (Vertex v = 0; v < n; ++v) rows.push_back(g.neighbors(v));
    auto row_of = [&rows](Vertex v) { return rows[v].words(); };

    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (rows[u].test(v)) continue;
            VertexSet common = rows[u];
            common &= rows[v];
            NodeCounter counter{0, budget.max_nodes};
            const auto blocker = clique_in(row_of, common, q - 2, counter);
            if (blocker.exhausted()) throw std::runtime_error("maximal_completion: node budget exhausted");
            if (blocker.found()) continue;
            rows[u].set(v);
            rows[v].set(u);
        }
    }
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        rows[u].for_each([&](Vertex v) {
            if (u < v) b.add_edge(u, v);
        });
    return std::move(b).build();
}

bool is_maximal_clique_free(const Graph& g, std::size_t q, SearchBudget budget) {
    if (q < 2) throw std::invalid_argument("is_maximal_clique_free requires q >= 2");
    if (!find_clique(g, q, budget).absent()) return false;
    for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = u + 1; v < g.order(); ++v) {
            if (g.adjacent(u, v)) continue;
            VertexSet pair(g.order(), {u, v});
            const VertexSet common = common_neighborhood(g, pair);
            NodeCounter counter{0, budget.max_nodes};
            auto rows = [&g](Vertex w) { return g.row(w); };
            if (!clique_in(rows, common, q - 2, counter).found()) return false;
        }
    }
    return true;
}

std::optional<LemmaVertex> lemma_vertex(const Graph& g) {
    for (Vertex u = 0; u < g.order(); ++u)
        if (check_lemma_vertex(g, u)) return LemmaVertex{u};
    return std::nullopt;
}

LemmaDecomposition decompose_by_lemma(const Graph& g, Vertex u) {
    if (!check_lemma_vertex(g, u)) throw std::invalid_argument("decompose_by_lemma: not a lemma vertex");
    LemmaDecomposition out;
    out.vertex = u;
    VertexSet outside = g.neighbors(u).complemented();
    outside.reset(u);
    out.independent_vertices = outside.members();
    out.neighborhood_vertices = g.neighbors(u).members();
    out.independent_part = induced_subgraph(g, std::span<const Vertex>(out.independent_vertices));
    out.neighborhood = induced_subgraph(g, std::span<const Vertex>(out.neighborhood_vertices));
    out.quotient_target = join(complete(1), out.neighborhood);
    out.projection.map.assign(g.order(), 0);
    for (std::size_t i = 0; i < out.neighborhood_vertices.size(); ++i)
        out.projection.map[out.neighborhood_vertices[i]] = 1 + i;
    return out;
}

// ---------------------------------------------------------------------------
// Certificates

std::string_view to_string(CertificateKind k) {
    switch (k) {
        case CertificateKind::clique: return "clique";
        case CertificateKind::coloring: return "coloring";
        case CertificateKind::homomorphism: return "homomorphism";
        case CertificateKind::subgraph_embedding: return "subgraph_embedding";
        case CertificateKind::lemma_vertex: return "lemma_vertex";
    }
    return "?";
}

namespace {

std::string_view payload_key(CertificateKind k) {
    switch (k) {
        case CertificateKind::clique: return "vertices";
        case CertificateKind::coloring: return "colors";
        case CertificateKind::homomorphism:
        case CertificateKind::subgraph_embedding: return "map";
        case CertificateKind::lemma_vertex: return "vertex";
    }
    return "?";
}

std::size_t subject_count(CertificateKind k) {
    return k == CertificateKind::homomorphism || k == CertificateKind::subgraph_embedding ? 2 : 1;
}

}  // namespace

Certificate Certificate::of(const Graph& g, const Clique& c) {
    return {CertificateKind::clique, {g}, c.vertices};
}
Certificate Certificate::of(const Graph& g, const Coloring& c) {
    return {CertificateKind::coloring, {g}, c.colors};
}
Certificate Certificate::of(const Graph& source, const Graph& target, const Homomorphism& h) {
    return {CertificateKind::homomorphism, {source, target}, h.map};
}
Certificate Certificate::of(const Graph& host, const Graph& pattern, const Embedding& e) {
    return {CertificateKind::subgraph_embedding, {host, pattern}, e.map};
}
Certificate Certificate::of(const Graph& g, const LemmaVertex& u) {
    return {CertificateKind::lemma_vertex, {g}, {u.vertex}};
}

nlohmann::ordered_json Certificate::to_json() const {
    nlohmann::ordered_json doc;
    doc["kind"] = std::string(to_string(kind));
    auto subj = nlohmann::ordered_json::array();
    for (const auto& g : subjects) subj.push_back(to_graph6(g));
    doc["subjects"] = std::move(subj);
    nlohmann::ordered_json payload_doc;
    if (kind == CertificateKind::lemma_vertex)
        payload_doc[std::string(payload_key(kind))] = payload.empty() ? 0 : payload.front();
    else
        payload_doc[std::string(payload_key(kind))] = payload;
    doc["payload"] = std::move(payload_doc);
    return doc;
}

Certificate Certificate::from_json(const nlohmann::json& doc) {
    Certificate c;
    const auto kind = doc.at("kind").get<std::string>();
    bool known = false;
    for (auto k : {CertificateKind::clique, CertificateKind::coloring, CertificateKind::homomorphism,
                   CertificateKind::subgraph_embedding, CertificateKind::lemma_vertex}) {
        if (to_string(k) == kind) {
            c.kind = k;
            known = true;
        }
    }
    if (!known) throw std::invalid_argument("unknown certificate kind '" + kind + "'");
    for (const auto& s : doc.at("subjects")) c.subjects.push_back(from_graph6(s.get<std::string>()));
    if (c.subjects.size() != subject_count(c.kind))
        throw std::invalid_argument("certificate has the wrong number of subjects");
    const auto& value = doc.at("payload").at(std::string(payload_key(c.kind)));
    if (c.kind == CertificateKind::lemma_vertex)
        c.payload = {value.get<std::size_t>()};
    else
        c.payload = value.get<std::vector<std::size_t>>();
    return c;
}

bool check_certificate(const Certificate& c) {
    if (c.subjects.size() != subject_count(c.kind)) return false;
    switch (c.kind) {
        case CertificateKind::clique: return check_clique(c.subjects[0], Clique{c.payload});
        case CertificateKind::coloring: return check_coloring(c.subjects[0], Coloring{c.payload});
        case CertificateKind::homomorphism:
            return check_homomorphism(c.subjects[0], c.subjects[1], Homomorphism{c.payload});
        case CertificateKind::subgraph_embedding:
            return check_embedding(c.subjects[0], c.subjects[1], Embedding{c.payload});
        case CertificateKind::lemma_vertex:
            return c.payload.size() == 1 && check_lemma_vertex(c.subjects[0], c.payload[0]);
    }
    return false;
}

}  // namespace kfree
