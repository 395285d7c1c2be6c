#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "kfree/enumeration.hpp"
#include "kfree/io.hpp"

namespace kfree {

namespace {

using Cell = std::vector<Vertex>;
using Partition = std::vector<Cell>;

/// Splits cells by neighbor counts into every current cell until the partition is equitable.
void refine(const Graph& g, Partition& cells) {
    const std::size_t n = g.order();
    std::vector<std::size_t> cell_of(n);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t c = 0; c < cells.size(); ++c)
            for (Vertex v : cells[c]) cell_of[v] = c;
        Partition next;
        next.reserve(n);
        for (const auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            std::map<std::vector<std::size_t>, Cell> groups;
            for (Vertex v : cell) {
                std::vector<std::size_t> signature(cells.size(), 0);
                g.neighbors(v).for_each([&](Vertex w) { ++signature[cell_of[w]]; });
                groups[std::move(signature)].push_back(v);
            }
            if (groups.size() > 1) changed = true;
            for (auto& [signature, members] : groups) next.push_back(std::move(members));
        }
        cells = std::move(next);
    }
}

class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {}

    std::vector<Vertex> run() {
        Partition root;
        if (n_ > 0) {
            root.emplace_back(n_);
            std::iota(root.front().begin(), root.front().end(), 0);
        }
        refine(g_, root);
        std::vector<Vertex> path;
        search(root, path);
        std::vector<Vertex> position(n_);
        for (std::size_t i = 0; i < n_; ++i) position[best_order_[i]] = i;
        return position;
    }

private:
    std::string certificate(const std::vector<Vertex>& order) const {
        std::string bits;
        bits.reserve(n_ * (n_ > 0 ? n_ - 1 : 0) / 2);
        for (std::size_t j = 1; j < n_; ++j)
            for (std::size_t i = 0; i < j; ++i) bits.push_back(g_.adjacent(order[i], order[j]) ? '1' : '0');
        return bits;
    }

    void leaf(const Partition& cells) {
        std::vector<Vertex> order;
        order.reserve(n_);
        for (const auto& cell : cells) order.push_back(cell.front());
        std::string cert = certificate(order);
        if (best_order_.empty() || cert < best_cert_) {
            best_cert_ = std::move(cert);
            best_order_ = std::move(order);
        } else if (cert == best_cert_) {
            std::vector<Vertex> automorphism(n_);
            for (std::size_t i = 0; i < n_; ++i) automorphism[best_order_[i]] = order[i];
            automorphisms_.push_back(std::move(automorphism));
        }
    }

    /// Orbit representative of each vertex under the stored automorphisms fixing path pointwise.
    std::vector<Vertex> orbits(const std::vector<Vertex>& path) const {
        std::vector<Vertex> parent(n_);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&parent](Vertex v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        for (const auto& gamma : automorphisms_) {
            bool fixes = std::all_of(path.begin(), path.end(), [&](Vertex p) { return gamma[p] == p; });
            if (!fixes) continue;
            for (Vertex v = 0; v < n_; ++v) {
                const Vertex a = find(v);
                const Vertex b = find(gamma[v]);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        }
        for (Vertex v = 0; v < n_; ++v) parent[v] = find(v);
        return parent;
    }

    void search(const Partition& cells, std::vector<Vertex>& path) {
        if (cells.size() == n_) {
            leaf(cells);
            return;
        }
        std::size_t target = 0;
        while (cells[target].size() == 1) ++target;
        const Cell cell = cells[target];

        std::vector<Vertex> tried;
        for (Vertex v : cell) {
            if (!tried.empty()) {
                const auto orbit = orbits(path);
                const bool covered =
                    std::any_of(tried.begin(), tried.end(), [&](Vertex w) { return orbit[w] == orbit[v]; });
                if (covered) continue;
            }
            Partition child;
            child.reserve(cells.size() + 1);
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (c != target) {
                    child.push_back(cells[c]);
                    continue;
                }
                child.push_back({v});
                Cell rest;
                for (Vertex w : cell)
                    if (w != v) rest.push_back(w);
                child.push_back(std::move(rest));
            }
            refine(g_, child);
            path.push_back(v);
            search(child, path);
            path.pop_back();
            tried.push_back(v);
        }
    }

    const Graph& g_;
    std::size_t n_;
    std::string best_cert_;
    std::vector<Vertex> best_order_;
    std::vector<std::vector<Vertex>> automorphisms_;
};

}  // namespace

std::vector<Vertex> canonical_labeling(const Graph& g) { return CanonicalSearch(g).run(); }

std::string canonical_form(const Graph& g) {
    const auto position = canonical_labeling(g);
    return to_graph6(permute(g, position));
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace kfree
