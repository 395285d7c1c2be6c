#include "kfree/io.hpp"

#include <sstream>
#include <stdexcept>

namespace kfree {

namespace {

constexpr char kBias = 63;

void append_size(std::string& out, std::size_t n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
}

int sextet(char c) {
    const int v = static_cast<unsigned char>(c) - kBias;
    if (v < 0 || v > 63) throw std::invalid_argument(std::string("graph6: invalid character '") + c + "'");
    return v;
}

}  // namespace

std::string to_graph6(const Graph& g) {
    const std::size_t n = g.order();
    std::string out;
    append_size(out, n);
    int acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
    return out;
}

Graph from_graph6(std::string_view text) {
    constexpr std::string_view kHeader = ">>graph6<<";
    if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("graph6: empty input");

    std::size_t pos = 0;
    std::size_t n = 0;
    if (text[0] != 126) {
        n = static_cast<std::size_t>(sextet(text[0]));
        pos = 1;
    } else if (text.size() >= 2 && text[1] != 126) {
        if (text.size() < 4) throw std::invalid_argument("graph6: truncated size header");
        for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(sextet(text[i]));
        pos = 4;
    } else {
        if (text.size() < 8) throw std::invalid_argument("graph6: truncated size header");
        for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | static_cast<std::size_t>(sextet(text[i]));
        pos = 8;
    }
    if (n > kMaxOrder) throw std::invalid_argument("graph6: order exceeds supported maximum");

    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t expected = pos + (bits + 5) / 6;
    if (text.size() != expected)
        throw std::invalid_argument("graph6: expected " + std::to_string(expected) + " bytes, got " +
                                    std::to_string(text.size()));

    GraphBuilder b(n);
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            const int chunk = sextet(text[pos + k / 6]);
            if ((chunk >> (5 - k % 6)) & 1) b.add_edge(i, j);
        }
    }
    if (bits % 6 != 0) {
        const int tail = sextet(text.back());
        if ((tail & ((1 << (6 - bits % 6)) - 1)) != 0) throw std::invalid_argument("graph6: nonzero padding bits");
    }
    return std::move(b).build();
}

std::string to_dot(const Graph& g, std::string_view name) {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (Vertex v = 0; v < g.order(); ++v) os << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

nlohmann::ordered_json to_adjacency_json(const Graph& g) {
    nlohmann::ordered_json doc;
    doc["order"] = g.order();
    auto edges = nlohmann::ordered_json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    doc["edges"] = std::move(edges);
    return doc;
}

Graph from_adjacency_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("order") || !doc.contains("edges"))
        throw std::invalid_argument("adjacency JSON needs 'order' and 'edges'");
    const auto n = doc.at("order").get<std::size_t>();
    GraphBuilder b(n);
    for (const auto& e : doc.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("adjacency JSON: edge must be [u, v]");
        const auto u = e[0].get<std::size_t>();
        const auto v = e[1].get<std::size_t>();
        if (u >= n || v >= n || u == v) throw std::invalid_argument("adjacency JSON: bad edge");
        b.add_edge(u, v);
    }
    return std::move(b).build();
}

}  // namespace kfree
