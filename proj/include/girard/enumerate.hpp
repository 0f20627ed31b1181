#pragma once

// Exhaustive enumeration of colored linear subdigraphs and colored closed
// walks, and the signed weighted sums built from them:
//   ell(g, p, S) = sum over subdigraphs with p edges and color set S of (-1)^{#cycles} W
//   c_walk(g, q, T) = sum over closed walks with q edges and color set T of W
// Both are 1 on the empty color set with length 0.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "girard/digraph.hpp"
#include "girard/poly.hpp"

namespace girard {

struct Edge {
    std::uint32_t from = 0;
    std::uint32_t to = 0;
    std::uint32_t color = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Consecutive edges of a directed cycle: edges[i].to == edges[i+1].from,
/// and the last edge returns to edges[0].from.
using Cycle = std::vector<Edge>;

/// Vertex-disjoint cycles with pairwise distinct edge colors. Kept in
/// canonical form: each cycle starts at its smallest vertex and cycles are
/// sorted by that vertex, so equality is object identity.
class LinearSubdigraph {
public:
    LinearSubdigraph() = default;
    /// Canonicalizes; does not check the subdigraph invariants.
    explicit LinearSubdigraph(std::vector<Cycle> cycles);

    const std::vector<Cycle>& cycles() const noexcept { return cycles_; }
    bool empty() const noexcept { return cycles_.empty(); }
    std::uint32_t length() const noexcept;
    std::uint32_t cycle_count() const noexcept { return static_cast<std::uint32_t>(cycles_.size()); }
    ColorSet colors() const noexcept;
    /// Sorted vertex list.
    std::vector<std::uint32_t> vertices() const;
    bool contains_vertex(std::uint32_t v) const noexcept;
    /// Index of the cycle through v, or -1.
    int cycle_index_through(std::uint32_t v) const noexcept;

    /// Adds a cycle and re-canonicalizes.
    LinearSubdigraph with_cycle(Cycle c) const;
    /// Drops the cycle at the given index.
    LinearSubdigraph without_cycle(std::size_t index) const;

    friend auto operator<=>(const LinearSubdigraph&, const LinearSubdigraph&) = default;

    /// "[(1->2:c1)(2->1:c3)][(3->3:c2)]"
    std::string str() const;

private:
    std::vector<Cycle> cycles_;
};

/// Rotates a cycle to start at its smallest vertex.
Cycle canonical_cycle(Cycle c);

struct Step {
    std::uint32_t to = 0;
    std::uint32_t color = 0;

    friend auto operator<=>(const Step&, const Step&) = default;
};

/// A walk x_0, x_1, ..., x_L given by its start vertex and steps. A closed
/// walk is one whose terminal vertex is its start.
struct Walk {
    std::uint32_t start = 0;
    std::vector<Step> steps;

    std::uint32_t length() const noexcept { return static_cast<std::uint32_t>(steps.size()); }
    std::uint32_t terminal() const noexcept { return steps.empty() ? start : steps.back().to; }
    bool is_closed() const noexcept { return terminal() == start; }
    /// Union of step colors (duplicates collapse).
    ColorSet colors() const noexcept;
    /// x_0, ..., x_L
    std::vector<std::uint32_t> vertices() const;

    friend auto operator<=>(const Walk&, const Walk&) = default;

    /// "1 -c2-> 3 -c1-> 1"
    std::string str() const;
};

Polynomial weight(const ColoredDigraph& g, const LinearSubdigraph& gamma);
Polynomial weight(const ColoredDigraph& g, const Walk& w);

/// Empty when gamma is a colored linear subdigraph of g (host edges,
/// vertex-disjoint cycles, distinct colors, canonical form); otherwise a
/// description of the first broken invariant.
std::optional<std::string> subdigraph_violation(const ColoredDigraph& g, const LinearSubdigraph& gamma);

/// Same for colored closed walks: host edges, closed, length >= 1, distinct colors.
std::optional<std::string> closed_walk_violation(const ColoredDigraph& g, const Walk& w);

/// All nonempty colored linear subdigraphs, optionally restricted to a
/// length and an exact color set. Duplicate-free; ordered by construction.
std::vector<LinearSubdigraph> enum_clsd(const ColoredDigraph& g, std::optional<std::uint32_t> length = std::nullopt,
                                        std::optional<ColorSet> colors = std::nullopt);

/// All colored closed walks of length >= 1 (rooted: the same edge cycle
/// from a different start is a different walk), optionally filtered.
std::vector<Walk> enum_ccw(const ColoredDigraph& g, std::optional<std::uint32_t> length = std::nullopt,
                           std::optional<ColorSet> colors = std::nullopt);

Polynomial ell(const ColoredDigraph& g, std::uint32_t p, ColorSet s);
Polynomial c_walk(const ColoredDigraph& g, std::uint32_t q, ColorSet t);

/// ell(g, |S|, S) for every S, indexed by S.bits(); one enumeration pass.
std::vector<Polynomial> ell_table(const ColoredDigraph& g);
/// c_walk(g, |T|, T) for every T, indexed by T.bits().
std::vector<Polynomial> walk_table(const ColoredDigraph& g);

}  // namespace girard
