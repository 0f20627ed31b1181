#pragma once

// Colored walk / linear-subdigraph identities and the multi-alphabet
// Newton-Girard identity derived from them on the self-loop graph.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "girard/digraph.hpp"
#include "girard/enumerate.hpp"
#include "girard/poly.hpp"

namespace girard {

enum class NewtonCase { r_exceeds_n, r_at_most_n };

/// Which linear-subdigraph term closes the r <= n identity.
///   aggregated: r * sum_{|S| = r} ell(g, r, S)
///   literal:    r * ell(g, r, C)   (agrees with aggregated only when k == r)
enum class EllForm { aggregated, literal };

/// Identifies one contribution: the subdigraph color set S, the walk color
/// set T, and whether this is the closing r-multiple term.
struct TermKey {
    ColorSet ell_colors;
    ColorSet walk_colors;
    bool closing = false;

    friend auto operator<=>(const TermKey&, const TermKey&) = default;
    std::string str() const;
};

struct NewtonReport {
    NewtonCase which = NewtonCase::r_exceeds_n;
    std::uint32_t r = 0;
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    EllForm ell_form = EllForm::aggregated;
    /// r exceeds the color count, so every index set is empty.
    bool vacuous = false;

    /// Sum of the breakdown; must be zero.
    Polynomial residual;
    /// Residual of the alternative closing term (see EllForm; for the
    /// self-loop identity, the closing term without the (-1)^r sign).
    Polynomial literal_residual;
    std::map<TermKey, Polynomial> breakdown;

    bool passed() const noexcept { return residual.is_zero(); }
    /// Sum of breakdown values; equals residual.
    Polynomial breakdown_total() const;
};

/// sum over disjoint (S, T), |S| + |T| = r, of c_walk(g, |T|, T) ell(g, |S|, S),
/// including the T = {} term.
Polynomial theorem2_sum(const ColoredDigraph& g, std::uint32_t r);

/// Same sum restricted to nonempty T.
Polynomial theorem2_sum_positive_walks(const ColoredDigraph& g, std::uint32_t r);

/// sum over size-r color subsets S of ell(g, r, S).
Polynomial ell_total(const ColoredDigraph& g, std::uint32_t r);

/// r > n: residual = theorem2_sum. r <= n: residual = positive-walk sum +
/// r * closing term in the requested form; literal_residual always carries
/// the other-form value so both can be inspected.
NewtonReport verify_theorem2(const ColoredDigraph& g, std::uint32_t r, EllForm form = EllForm::aggregated);

/// sum over injective k-tuples of colors from [r] \ chosen, and over
/// j_1 < ... < j_k in [n], of a_{j_1}^{(i'_1)} ... a_{j_k}^{(i'_k)}.
/// chosen must have r - k elements inside [r]; 1 when k == 0.
Polynomial compute_X(std::uint32_t r, std::uint32_t n, std::uint32_t k, ColorSet chosen);

/// compute_X with k = r and nothing chosen; zero when r > n.
Polynomial compute_Y(std::uint32_t r, std::uint32_t n);

/// Assembles sum_k (-1)^k sum_{chosen} [(r-k)! sum_j prod_{i in chosen} a_j^{(i)}] X,
/// with the bracket read as 1 when chosen is empty, plus (-1)^r r Y when
/// r <= n. Breakdown keys: walk_colors = chosen, ell_colors = [r] \ chosen,
/// so the map lines up with verify_theorem2 on build_gamma_rc(n, r).
/// literal_residual uses +r Y instead of (-1)^r r Y.
NewtonReport verify_theorem3(std::uint32_t r, std::uint32_t n);

/// Term-for-term equality of verify_theorem3(r, n) with
/// verify_theorem2(build_gamma_rc(n, r), r).
bool theorem3_matches_digraph(std::uint32_t r, std::uint32_t n);

/// a_j^{(i)} -> a_j^{(1)}: collapses the superscripts onto a single alphabet.
Polynomial collapse_superscripts(const Polynomial& p);

/// Classical Newton-Girard terms for the monic polynomial with the given
/// roots, e_t its coefficients and p_t the power sums:
///   r > n:  term_t = e_t p_{r-t}, t = 0..r, with e_t = 0 for t > n and p_0 read as 1
///   r <= n: term_t = e_t p_{r-t}, t < r, and term_r = r e_r
/// The identity says the terms sum to zero.
std::vector<BigInt> classical_newton_terms(std::span<const BigInt> roots, std::uint32_t r);
std::vector<Polynomial> classical_newton_terms(std::span<const Polynomial> roots, std::uint32_t r);

/// Power sums p_0..p_max and signed coefficients e_0..e_n of prod (x - root).
std::vector<BigInt> power_sums(std::span<const BigInt> roots, std::uint32_t max_power);
std::vector<BigInt> signed_coefficients(std::span<const BigInt> roots);

bool classical_newton_check(std::span<const BigInt> roots, std::uint32_t r);

}  // namespace girard
