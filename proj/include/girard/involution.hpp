#pragma once

// The sign-reversing involution on (closed walk, linear subdigraph) pairs
// behind the colored walk identity, and an exhaustive audit of it.
//
// Scanning rule: walk vertices x_0, x_1, ... are examined in order. At each
// step the current vertex is first tested for membership in gamma (case 1:
// splice gamma's cycle through it into the walk), then for being a repeat
// of an earlier walk vertex (case 2: cut the closed sub-walk between the two
// visits out of the walk and add it to gamma). x_0 is tested at step 0.

#include <cstdint>
#include <string>
#include <vector>

#include "girard/digraph.hpp"
#include "girard/enumerate.hpp"
#include "girard/poly.hpp"

namespace girard {

/// Walk with L >= 1 and a possibly empty subdigraph with disjoint colors.
struct WalkGammaPair {
    Walk walk;
    LinearSubdigraph gamma;

    friend auto operator<=>(const WalkGammaPair&, const WalkGammaPair&) = default;
    std::string str() const;
};

enum class PairClass { good, bad };

/// a followed by b. Throws std::invalid_argument unless a ends where b starts.
Walk walk_concat(const Walk& a, const Walk& b);

/// The edges of a closed walk as a cycle (not canonicalized).
Cycle walk_as_cycle(const Walk& w);

/// (-1)^{c(gamma)} W(walk) W(gamma)
Polynomial pair_weight(const ColoredDigraph& g, const WalkGammaPair& pair);

/// GOOD iff the walk is a simple cycle (no vertex repeated before the
/// return to the root) and shares no vertex with gamma.
PairClass classify(const WalkGammaPair& pair);

/// Throws std::logic_error on a GOOD pair.
WalkGammaPair involute(const WalkGammaPair& pair);

struct PairSet {
    std::vector<WalkGammaPair> pairs;
    /// Contribution of the empty walk, sum_{|S| = r} ell(g, r, S); zero
    /// when positive walks were required. Never materialized as a pair.
    Polynomial empty_walk_term;
};

/// All pairs with L(walk) >= 1, L(walk) + L(gamma) = r and disjoint colors.
PairSet enumerate_pairs(const ColoredDigraph& g, std::uint32_t r, bool require_positive_walk);

struct InvolutionAudit {
    std::uint32_t r = 0;
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::size_t pair_count = 0;
    std::size_t bad_count = 0;
    std::size_t good_count = 0;
    /// Distinct r-edge subdigraphs underlying the GOOD pairs.
    std::size_t good_groups = 0;
    Polynomial bad_weight_sum;
    Polynomial good_weight_sum;
    /// Pair weights plus the empty-walk (r > n) or closing (r <= n) term.
    Polynomial total;
    /// Same quantity from verify_theorem2.
    Polynomial theorem2_residual;
    std::vector<std::string> failures;

    bool passed() const noexcept { return failures.empty(); }
};

/// Checks every BAD pair maps to a BAD pair of opposite weight that maps
/// back; for r <= n that each r-edge subdigraph owns exactly r GOOD pairs
/// with weight r (-1)^{c-1} W; for r > n that there are no GOOD pairs; and
/// that the grand total matches verify_theorem2 and is zero.
InvolutionAudit audit_involution(const ColoredDigraph& g, std::uint32_t r);

}  // namespace girard
