#pragma once

// Weighted k-colored digraphs: every present ordered vertex pair carries a
// bundle of k parallel edges, one per color, each with a nonzero weight.
// Vertices and colors are 1-based.
//
// File format (JSON):
//   {"colors": k, "edges": [{"from": i, "to": j, "weights": [w_1, ..., w_k]}, ...], "n": n}
// A weight is a JSON integer, or a string holding a polynomial in the
// text form of poly.hpp (only needed for symbolic graphs). Serialization
// sorts keys and edges, so equal graphs produce identical bytes.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "girard/poly.hpp"

namespace girard {

inline constexpr std::uint32_t kMaxColors = 30;

/// Subset of {1..kMaxColors} as a bitmask.
class ColorSet {
public:
    constexpr ColorSet() = default;
    constexpr explicit ColorSet(std::uint32_t bits) : bits_(bits) {}

    static ColorSet of(std::initializer_list<std::uint32_t> colors);
    /// {1..k}
    static ColorSet full(std::uint32_t k);

    constexpr std::uint32_t bits() const noexcept { return bits_; }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    std::uint32_t size() const noexcept;
    constexpr bool contains(std::uint32_t color) const noexcept { return (bits_ >> (color - 1)) & 1U; }
    ColorSet with(std::uint32_t color) const noexcept { return ColorSet(bits_ | (1U << (color - 1))); }
    ColorSet without(std::uint32_t color) const noexcept { return ColorSet(bits_ & ~(1U << (color - 1))); }
    constexpr bool disjoint(ColorSet o) const noexcept { return (bits_ & o.bits_) == 0; }
    constexpr bool subset_of(ColorSet o) const noexcept { return (bits_ & ~o.bits_) == 0; }

    friend constexpr ColorSet operator|(ColorSet a, ColorSet b) { return ColorSet(a.bits_ | b.bits_); }
    friend constexpr ColorSet operator&(ColorSet a, ColorSet b) { return ColorSet(a.bits_ & b.bits_); }
    friend constexpr auto operator<=>(ColorSet, ColorSet) = default;

    std::vector<std::uint32_t> members() const;
    /// "{1,3}"
    std::string str() const;

private:
    std::uint32_t bits_ = 0;
};

/// All subsets of {1..k} with exactly `size` elements, in increasing bitmask order.
std::vector<ColorSet> color_subsets(std::uint32_t k, std::uint32_t size);

class ColoredDigraph {
public:
    using Bundle = std::vector<Polynomial>;
    using Key = std::pair<std::uint32_t, std::uint32_t>;

    /// Throws std::invalid_argument unless n >= 1 and 1 <= k <= kMaxColors.
    ColoredDigraph(std::uint32_t n, std::uint32_t k);

    std::uint32_t vertex_count() const noexcept { return n_; }
    std::uint32_t color_count() const noexcept { return k_; }
    const std::map<Key, Bundle>& bundles() const noexcept { return bundles_; }

    /// Stores the bundle as given; malformed bundles are reported by validate().
    void set_bundle(std::uint32_t from, std::uint32_t to, Bundle weights);

    bool has_edge(std::uint32_t from, std::uint32_t to) const;
    /// Weight of the edge from -> to with the given color, or nullptr.
    const Polynomial* weight(std::uint32_t from, std::uint32_t to, std::uint32_t color) const;

    friend bool operator==(const ColoredDigraph&, const ColoredDigraph&) = default;

private:
    std::uint32_t n_;
    std::uint32_t k_;
    std::map<Key, Bundle> bundles_;
};

struct Violation {
    std::string message;
    std::uint32_t from = 0;
    std::uint32_t to = 0;
    std::uint32_t color = 0;  // 0 when the violation is not about one color
};

/// Empty iff every bundle has in-range endpoints and exactly k nonzero weights.
std::vector<Violation> validate(const ColoredDigraph& g);

/// n vertices, r colors, one self-loop bundle per vertex; the loop at
/// vertex j with color i weighs a_j^{(i)}. No edges between distinct vertices.
ColoredDigraph build_gamma_rc(std::uint32_t n, std::uint32_t r);

/// Each ordered pair present independently with probability edge_density;
/// weights uniform over [-weight_bound, weight_bound] \ {0}. Deterministic
/// for a fixed seed.
ColoredDigraph random_digraph(std::uint32_t n, std::uint32_t k, double edge_density, std::uint32_t weight_bound,
                              std::uint64_t seed);

/// Generic symbolic weights: the edge i -> j with color c weighs
/// x_{(i-1)n+j}^{(c)}. Every present pair is kept from the input pattern.
ColoredDigraph with_symbolic_weights(const ColoredDigraph& g);

/// Relabels vertex v as perm[v-1]; perm must be a permutation of 1..n.
ColoredDigraph permute_vertices(const ColoredDigraph& g, const std::vector<std::uint32_t>& perm);

class GraphParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Throws GraphParseError with a byte offset (syntax) or a JSON pointer
/// (schema). Validation problems are left for validate().
ColoredDigraph parse_digraph(std::string_view text);

/// Canonical JSON text, newline-terminated.
std::string serialize_digraph(const ColoredDigraph& g);

}  // namespace girard
