#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "kfree/graph.hpp"

namespace kfree {

using Rational = boost::rational<std::int64_t>;

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// A_1 = K_2; A_k is the complement of the (k-1)th power of C_{3k-1}.
Graph andrasfai(std::size_t k);

/// M_1 = K_2. For M_{i+1}: originals 0..n-1, shadow of v_j at n+j, apex at 2n.
Graph mycielski(std::size_t i);

/// The m-subsets of {0..2m+h-1} as bitmasks in colexicographic order.
std::vector<std::uint64_t> kneser_vertices(std::size_t m, std::size_t h);
/// m-subsets of a (2m+h)-set, adjacent when disjoint; vertex order per kneser_vertices.
Graph kneser(std::size_t m, std::size_t h);

struct HajnalBlocks {
    std::size_t kneser = 0;  ///< C(2m+h, m)
    std::size_t a = 0;       ///< (2m+h) * scale
    std::size_t b = 0;       ///< n1 - a
    std::size_t scale = 0;   ///< floor(n1 / (3m+h))
};

std::size_t hajnal_min_order(std::size_t m, std::size_t h);
HajnalBlocks hajnal_blocks(std::size_t n, std::size_t m, std::size_t h);
/// Kneser block first, then A (v_ij at offset i*scale + j), then B.
Graph hajnal(std::size_t n, std::size_t m, std::size_t h);

/// floor((2r-4)/(2r-1) * n), the order of the Turan part of hajnal_extended.
std::size_t hajnal_extended_turan_order(std::size_t r, std::size_t n);
/// T_{r-2}(floor((2r-4)n/(2r-1))) joined with hajnal(rest, m, h-r).
Graph hajnal_extended(std::size_t r, std::size_t n, std::size_t m, std::size_t h);

/// Parts A_1..A_5 (3k each), B_1..B_5 (2k each), C (4k), labelled in that order.
Graph haggkvist(std::size_t k);

/// 19r - 9
std::size_t haggkvist_modulus(std::size_t r);
/// T_{r-2}(n - 29q) joined with haggkvist(q), q = floor(n / (19r-9)).
Graph haggkvist_extended(std::size_t r, std::size_t n);

/// (2k-1)r - k + 1
std::size_t andrasfai_modulus(std::size_t r, std::size_t k);
/// T_{r-2}(n - (3k-1)t) joined with blow_up(andrasfai(k), t), t = floor(n / ((2k-1)r-k+1)).
Graph andrasfai_blowup_example(std::size_t r, std::size_t k, std::size_t n);

enum class Family {
    andrasfai,
    mycielski,
    kneser,
    turan,
    hajnal,
    hajnal_extended,
    haggkvist,
    haggkvist_extended,
    andrasfai_blowup,
};

std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);
/// Parameter names in canonical order.
std::vector<std::string> family_parameters(Family f);

/// A named construction with its integer parameters, e.g. "hajnal:n=24,m=2,h=1".
struct FamilySpec {
    Family family = Family::andrasfai;
    std::map<std::string, std::int64_t> params;
    std::optional<Rational> epsilon;

    std::int64_t at(const std::string& key) const;
    std::size_t size_at(const std::string& key) const;

    /// Throws std::invalid_argument when the text is not a valid spec.
    static FamilySpec parse(std::string_view text);
    std::string to_string() const;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

Graph generate(const FamilySpec& spec);

/// Parses "p/q", "p", or sums and differences such as "1-2/5".
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& q);

}  // namespace kfree
