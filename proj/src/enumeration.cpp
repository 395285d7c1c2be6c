#include "kfree/enumeration.hpp"

#include <array>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "kfree/io.hpp"

namespace kfree {

std::size_t edge_slots(std::size_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

std::pair<Vertex, Vertex> edge_slot(std::size_t index) {
    Vertex j = 1;
    while (j * (j + 1) / 2 <= index) ++j;
    return {index - j * (j - 1) / 2, j};
}

Graph labeled_graph(std::size_t n, std::uint64_t mask) {
    GraphBuilder b(n);
    std::size_t slot = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++slot)
            if ((mask >> slot) & 1U) b.add_edge(i, j);
    return std::move(b).build();
}

std::uint64_t labeled_graph_count(std::size_t n) {
    if (n > kMaxLabeledOrder) throw std::invalid_argument("labeled enumeration is limited to n <= 7");
    return std::uint64_t{1} << edge_slots(n);
}

std::size_t shard_count() { return std::size_t{1} << kShardBits; }

void for_each_labeled_graph(std::size_t n, const std::function<void(const Graph&)>& visit) {
    const std::uint64_t total = labeled_graph_count(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) visit(labeled_graph(n, mask));
}

void for_each_labeled_graph_in_shard(std::size_t n, std::size_t shard,
                                     const std::function<void(const Graph&)>& visit) {
    const std::uint64_t total = labeled_graph_count(n);
    if (shard >= shard_count()) throw std::out_of_range("shard id out of range");
    if (shard >= total) return;
    const std::uint64_t step = std::uint64_t{1} << kShardBits;
    for (std::uint64_t mask = shard; mask < total; mask += step) visit(labeled_graph(n, mask));
}

std::vector<Graph> all_graphs(std::size_t n) {
    std::vector<Graph> out;
    out.reserve(labeled_graph_count(n));
    for_each_labeled_graph(n, [&out](const Graph& g) { out.push_back(g); });
    return out;
}

const std::vector<Graph>& iso_reduced_graphs(std::size_t n) {
    if (n > kMaxIsoReducedOrder) throw std::invalid_argument("iso-reduced enumeration is limited to n <= 9");
    static std::mutex lock;
    static std::array<std::optional<std::vector<Graph>>, kMaxIsoReducedOrder + 1> cache;
    std::scoped_lock guard(lock);
    if (cache[n]) return *cache[n];
    // Each order extends every representative of the previous order by one vertex.
    for (std::size_t m = 0; m <= n; ++m) {
        if (cache[m]) continue;
        if (m == 0) {
            cache[0] = std::vector<Graph>{Graph(0)};
            continue;
        }
        std::vector<Graph> reps;
        std::unordered_set<std::string> seen;
        for (const Graph& base : *cache[m - 1]) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m - 1)); ++mask) {
                GraphBuilder b(m);
                for (auto [u, v] : base.edges()) b.add_edge(u, v);
                for (Vertex u = 0; u + 1 < m; ++u)
                    if ((mask >> u) & 1U) b.add_edge(u, m - 1);
                std::string form = canonical_form(std::move(b).build());
                if (seen.insert(form).second) reps.push_back(from_graph6(form));
            }
        }
        cache[m] = std::move(reps);
    }
    return *cache[n];
}

void parallel_for_shards(std::size_t count, const std::function<void(std::size_t)>& job) {
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(count, std::thread::hardware_concurrency()));
    if (workers == 1) {
        for (std::size_t s = 0; s < count; ++s) job(s);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (true) {
                const std::size_t s = next.fetch_add(1);
                if (s >= count) return;
                try {
                    job(s);
                } catch (...) {
                    std::scoped_lock guard(failure_lock);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    }
    pool.clear();
    if (failure) std::rethrow_exception(failure);
}

PsiResult psi_oracle(std::size_t n, std::size_t r, std::size_t h, SearchBudget budget) {
    if (n < 1 || n > 8) throw std::invalid_argument("psi_oracle supports 1 <= n <= 8");
    if (r < 2) throw std::invalid_argument("psi_oracle requires r >= 2");
    if (h < 1) throw std::invalid_argument("psi_oracle requires h >= 1");
    PsiResult out{n, r, h};
    for (const Graph& g : iso_reduced_graphs(n)) {
        ++out.graphs_scanned;
        const std::size_t d = min_degree(g);
        if (out.value && d <= *out.value) continue;
        const auto clique = find_clique(g, r + 1, budget);
        if (clique.exhausted()) out.status = SearchStatus::budget_exhausted;
        if (!clique.absent()) continue;
        if (h > 1) {
            const auto coloring = is_k_colorable(g, h - 1, budget);
            if (coloring.exhausted()) out.status = SearchStatus::budget_exhausted;
            if (!coloring.absent()) continue;
        }
        out.value = d;
        out.witness = g;
    }
    return out;
}

}  // namespace kfree
