#include "kfree/generators.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <stdexcept>

namespace kfree {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
    return result;
}

Graph andrasfai(std::size_t k) {
    require(k >= 1, "andrasfai requires k >= 1");
    if (k == 1) return complete(2);
    return complement(cycle_power(3 * k - 1, k - 1));
}

Graph mycielski(std::size_t i) {
    require(i >= 1, "mycielski requires i >= 1");
    Graph g = complete(2);
    for (std::size_t step = 1; step < i; ++step) {
        const std::size_t n = g.order();
        GraphBuilder b(2 * n + 1);
        for (auto [u, v] : g.edges()) {
            b.add_edge(u, v);
            b.add_edge(n + u, v);
            b.add_edge(u, n + v);
        }
        for (Vertex j = 0; j < n; ++j) b.add_edge(n + j, 2 * n);
        g = std::move(b).build();
    }
    return g;
}

std::vector<std::uint64_t> kneser_vertices(std::size_t m, std::size_t h) {
    const std::size_t ground = 2 * m + h;
    require(m >= 1, "kneser requires m >= 1");
    require(ground < 64, "kneser ground set too large");
    require(binomial(ground, m) <= kMaxOrder, "kneser graph exceeds the supported order");
    std::vector<std::uint64_t> subsets;
    // Gosper's hack enumerates fixed-popcount masks in increasing numeric (colex) order.
    std::uint64_t s = (std::uint64_t{1} << m) - 1;
    const std::uint64_t limit = std::uint64_t{1} << ground;
    while (s < limit) {
        subsets.push_back(s);
        const std::uint64_t c = s & (~s + 1);
        const std::uint64_t r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
    return subsets;
}

Graph kneser(std::size_t m, std::size_t h) {
    const auto subsets = kneser_vertices(m, h);
    GraphBuilder b(subsets.size());
    for (std::size_t i = 0; i < subsets.size(); ++i)
        for (std::size_t j = i + 1; j < subsets.size(); ++j)
            if ((subsets[i] & subsets[j]) == 0) b.add_edge(i, j);
    return std::move(b).build();
}

std::size_t hajnal_min_order(std::size_t m, std::size_t h) {
    return 3 * m + h + static_cast<std::size_t>(binomial(2 * m + h, m));
}

HajnalBlocks hajnal_blocks(std::size_t n, std::size_t m, std::size_t h) {
    require(m >= 1, "hajnal requires m >= 1");
    require(n >= hajnal_min_order(m, h), "hajnal requires n >= 3m+h+C(2m+h,m) = " +
                                             std::to_string(hajnal_min_order(m, h)));
    HajnalBlocks blocks;
    blocks.kneser = static_cast<std::size_t>(binomial(2 * m + h, m));
    const std::size_t n1 = n - blocks.kneser;
    blocks.scale = n1 / (3 * m + h);
    blocks.a = (2 * m + h) * blocks.scale;
    blocks.b = n1 - blocks.a;
    return blocks;
}

Graph hajnal(std::size_t n, std::size_t m, std::size_t h) {
    const HajnalBlocks blocks = hajnal_blocks(n, m, h);
    const auto subsets = kneser_vertices(m, h);
    const std::size_t ground = 2 * m + h;
    const std::size_t a0 = blocks.kneser;
    const std::size_t b0 = a0 + blocks.a;
    require(b0 + blocks.b == n, "hajnal block sizes do not sum to n");

    GraphBuilder b(n);
    for (std::size_t i = 0; i < subsets.size(); ++i)
        for (std::size_t j = i + 1; j < subsets.size(); ++j)
            if ((subsets[i] & subsets[j]) == 0) b.add_edge(i, j);
    for (std::size_t i = 0; i < ground; ++i) {
        for (std::size_t j = 0; j < blocks.scale; ++j) {
            const Vertex vij = a0 + i * blocks.scale + j;
            for (std::size_t l = 0; l < subsets.size(); ++l)
                if ((subsets[l] >> i) & 1U) b.add_edge(vij, l);
            for (Vertex w = b0; w < n; ++w) b.add_edge(vij, w);
        }
    }
    return std::move(b).build();
}

std::size_t hajnal_extended_turan_order(std::size_t r, std::size_t n) {
    return (2 * r - 4) * n / (2 * r - 1);
}

Graph hajnal_extended(std::size_t r, std::size_t n, std::size_t m, std::size_t h) {
    require(r >= 3, "hajnal_extended requires r >= 3");
    require(h > r, "hajnal_extended requires h > r");
    const std::size_t n1 = hajnal_extended_turan_order(r, n);
    const std::size_t n2 = n - n1;
    require(n2 >= hajnal_min_order(m, h - r),
            "hajnal_extended: n too small for the Hajnal part H(" + std::to_string(n2) + ", " +
                std::to_string(m) + ", " + std::to_string(h - r) + ")");
    return join(turan(r - 2, n1), hajnal(n2, m, h - r));
}

Graph haggkvist(std::size_t k) {
    require(k >= 1, "haggkvist requires k >= 1");
    // Offsets of A_1..A_5, B_1..B_5, C.
    const auto a_start = [k](std::size_t i) { return i * 3 * k; };
    const auto b_start = [k](std::size_t i) { return 15 * k + i * 2 * k; };
    const std::size_t c_start = 25 * k;
    const std::size_t n = 29 * k;

    GraphBuilder b(n);
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = 0; j < 5; ++j) {
            if ((i + 1) % 5 != j && (j + 1) % 5 != i) continue;
            for (std::size_t x = 0; x < 3 * k; ++x) {
                if (i < j)
                    for (std::size_t y = 0; y < 3 * k; ++y) b.add_edge(a_start(i) + x, a_start(j) + y);
                for (std::size_t y = 0; y < 2 * k; ++y) b.add_edge(a_start(i) + x, b_start(j) + y);
            }
        }
    }
    for (Vertex c = c_start; c < n; ++c)
        for (Vertex v = b_start(0); v < c_start; ++v) b.add_edge(c, v);
    return std::move(b).build();
}

std::size_t haggkvist_modulus(std::size_t r) { return 19 * r - 9; }

Graph haggkvist_extended(std::size_t r, std::size_t n) {
    require(r >= 3, "haggkvist_extended requires r >= 3");
    const std::size_t d = haggkvist_modulus(r);
    require(n >= d, "haggkvist_extended requires n >= 19r-9 = " + std::to_string(d));
    const std::size_t q = n / d;
    return join(turan(r - 2, n - 29 * q), haggkvist(q));
}

std::size_t andrasfai_modulus(std::size_t r, std::size_t k) { return (2 * k - 1) * r - k + 1; }

Graph andrasfai_blowup_example(std::size_t r, std::size_t k, std::size_t n) {
    require(r >= 3, "andrasfai_blowup_example requires r >= 3");
    require(k >= 1, "andrasfai_blowup_example requires k >= 1");
    const std::size_t d = andrasfai_modulus(r, k);
    require(n >= d, "andrasfai_blowup_example requires n >= (2k-1)r-k+1 = " + std::to_string(d));
    const std::size_t t = n / d;
    return join(turan(r - 2, n - (3 * k - 1) * t), blow_up(andrasfai(k), t));
}

namespace {

struct FamilyInfo {
    Family family;
    std::string_view name;
    std::vector<std::string> params;
};

const std::vector<FamilyInfo>& family_table() {
    static const std::vector<FamilyInfo> table = {
        {Family::andrasfai, "andrasfai", {"k"}},
        {Family::mycielski, "mycielski", {"i"}},
        {Family::kneser, "kneser", {"m", "h"}},
        {Family::turan, "turan", {"p", "n"}},
        {Family::hajnal, "hajnal", {"n", "m", "h"}},
        {Family::hajnal_extended, "hajnal-ext", {"r", "n", "m", "h"}},
        {Family::haggkvist, "haggkvist", {"k"}},
        {Family::haggkvist_extended, "haggkvist-ext", {"r", "n"}},
        {Family::andrasfai_blowup, "andrasfai-blowup", {"r", "k", "n"}},
    };
    return table;
}

const FamilyInfo& info(Family f) {
    for (const auto& row : family_table())
        if (row.family == f) return row;
    throw std::logic_error("unknown family");
}

std::int64_t parse_integer(std::string_view text, std::string_view what) {
    std::int64_t value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty())
        throw std::invalid_argument("bad integer for " + std::string(what) + ": '" + std::string(text) + "'");
    return value;
}

}  // namespace

std::string_view family_name(Family f) { return info(f).name; }

std::optional<Family> family_from_name(std::string_view name) {
    for (const auto& row : family_table())
        if (row.name == name) return row.family;
    return std::nullopt;
}

std::vector<std::string> family_parameters(Family f) { return info(f).params; }

std::int64_t FamilySpec::at(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end())
        throw std::invalid_argument(std::string(family_name(family)) + ": missing parameter " + key);
    return it->second;
}

std::size_t FamilySpec::size_at(const std::string& key) const {
    const auto v = at(key);
    if (v < 0) throw std::invalid_argument(key + " must be non-negative");
    return static_cast<std::size_t>(v);
}

FamilySpec FamilySpec::parse(std::string_view text) {
    const auto colon = text.find(':');
    const auto name = text.substr(0, colon);
    const auto family = family_from_name(name);
    if (!family) throw std::invalid_argument("unknown family '" + std::string(name) + "'");

    FamilySpec spec;
    spec.family = *family;
    const auto expected = family_parameters(*family);
    std::string_view rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const auto item = rest.substr(0, comma);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) throw std::invalid_argument("expected key=value, got '" + std::string(item) + "'");
        const std::string key(item.substr(0, eq));
        const auto value = item.substr(eq + 1);
        if (key == "eps") {
            if (spec.family != Family::hajnal_extended)
                throw std::invalid_argument("eps is only meaningful for hajnal-ext");
            const Rational eps = parse_rational(value);
            if (eps <= 0 || eps >= 1) throw std::invalid_argument("eps must lie in (0, 1)");
            spec.epsilon = eps;
            continue;
        }
        if (std::find(expected.begin(), expected.end(), key) == expected.end())
            throw std::invalid_argument(std::string(name) + " has no parameter '" + key + "'");
        if (!spec.params.emplace(key, parse_integer(value, key)).second)
            throw std::invalid_argument("duplicate parameter '" + key + "'");
    }
    for (const auto& key : expected)
        if (!spec.params.contains(key)) throw std::invalid_argument(std::string(name) + ": missing parameter " + key);
    for (const auto& [key, value] : spec.params)
        if (value < 0) throw std::invalid_argument(key + " must be non-negative");
    return spec;
}

std::string FamilySpec::to_string() const {
    std::string out(family_name(family));
    char sep = ':';
    for (const auto& key : family_parameters(family)) {
        out += sep;
        out += key + "=" + std::to_string(at(key));
        sep = ',';
    }
    if (epsilon) out += ",eps=" + format_rational(*epsilon);
    return out;
}

Graph generate(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::andrasfai: return andrasfai(spec.size_at("k"));
        case Family::mycielski: return mycielski(spec.size_at("i"));
        case Family::kneser: return kneser(spec.size_at("m"), spec.size_at("h"));
        case Family::turan: return turan(spec.size_at("p"), spec.size_at("n"));
        case Family::hajnal: return hajnal(spec.size_at("n"), spec.size_at("m"), spec.size_at("h"));
        case Family::hajnal_extended:
            return hajnal_extended(spec.size_at("r"), spec.size_at("n"), spec.size_at("m"), spec.size_at("h"));
        case Family::haggkvist: return haggkvist(spec.size_at("k"));
        case Family::haggkvist_extended: return haggkvist_extended(spec.size_at("r"), spec.size_at("n"));
        case Family::andrasfai_blowup:
            return andrasfai_blowup_example(spec.size_at("r"), spec.size_at("k"), spec.size_at("n"));
    }
    throw std::logic_error("unhandled family");
}

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    Rational total = 0;
    std::size_t pos = 0;
    bool negative = false;
    if (text[0] == '-' || text[0] == '+') {
        negative = text[0] == '-';
        pos = 1;
    }
    while (true) {
        std::size_t end = pos;
        while (end < text.size() && text[end] != '+' && text[end] != '-') ++end;
        const auto term = text.substr(pos, end - pos);
        const auto slash = term.find('/');
        Rational value;
        if (slash == std::string_view::npos) {
            value = parse_integer(term, "rational");
        } else {
            const auto den = parse_integer(term.substr(slash + 1), "rational");
            if (den == 0) throw std::invalid_argument("zero denominator");
            value = Rational(parse_integer(term.substr(0, slash), "rational"), den);
        }
        total += negative ? -value : value;
        if (end == text.size()) break;
        negative = text[end] == '-';
        pos = end + 1;
    }
    return total;
}

std::string format_rational(const Rational& q) {
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

}  // namespace kfree
