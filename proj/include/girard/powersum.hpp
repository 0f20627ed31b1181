#pragma once

// The generalized power-sum identity over the x/y alphabets, its good-word
// count, and the classical integer power-sum formulas it specializes to.

#include <cstdint>
#include <span>
#include <vector>

#include "girard/exactnum.hpp"
#include "girard/poly.hpp"

namespace girard {

/// Range bound m and number of x-superscripts r, both >= 1.
class PowerSumInstance {
public:
    /// Throws std::invalid_argument unless m >= 1 and r >= 1.
    PowerSumInstance(std::uint32_t m, std::uint32_t r);

    std::uint32_t m() const noexcept { return m_; }
    std::uint32_t r() const noexcept { return r_; }

private:
    std::uint32_t m_;
    std::uint32_t r_;
};

/// prod_{j=1}^{r} (sum_{i in set} x_i^{(j)}); zero for the empty set.
Polynomial pi_r(std::span<const std::uint32_t> set, std::uint32_t r);

/// sum_{k=1}^{m} pi_r([k]) y_{k+1}
Polynomial theorem1_lhs(const PowerSumInstance& inst);

/// sum over U subset of [m+1], |U| >= 2, of inner_signed_sum(U, r) * y_{max U}.
/// With prune set, subsets whose inner sum is known to vanish
/// (|U \ max U| > r) are skipped.
Polynomial theorem1_rhs(const PowerSumInstance& inst, bool prune = false);

/// sum over nonempty V subset of U \ {max U} of (-1)^{|U|-|V|-1} pi_r(V).
/// U must hold at least two elements; order does not matter.
Polynomial inner_signed_sum(std::span<const std::uint32_t> set_u, std::uint32_t r);

/// Sum of the commutative images of x^{(1)}_{i_1} ... x^{(r)}_{i_r} y_t
/// with 2 <= t <= m+1 and every i_p < t.
Polynomial goodwords_oracle(const PowerSumInstance& inst);

/// Number of good words, sum_{t=2}^{m+1} (t-1)^r.
BigInt goodwords_count(const PowerSumInstance& inst);

/// Stirling number of the second kind from the alternating closed form
/// (1/k!) sum_{j=1}^{k} (-1)^{k-j} C(k,j) j^m. S(m,0) = 0 for m >= 1 and
/// S(0,k) = [k == 0]. Throws std::logic_error if the division is inexact.
BigInt stirling2(std::uint32_t m, std::uint32_t k);

/// sum_{k=1}^{len} k^alpha c_k, with c given as c_1..c_len.
BigInt lemma21_lhs(std::uint32_t alpha, std::span<const BigInt> c);
/// sum_{j=1}^{len} j! S(alpha, j) sum_{k=j}^{len} C(k, j) c_k
BigInt lemma21_rhs(std::uint32_t alpha, std::span<const BigInt> c);
/// Both sides agree exactly. Throws std::invalid_argument for alpha == 0.
bool verify_lemma21(std::uint32_t alpha, std::span<const BigInt> c);

/// 1^m + ... + n^m by direct summation.
BigInt powersum_direct(std::uint32_t m, std::uint32_t n);

/// sum_{k=0}^{min(m,n)} C(n+1, k+1) S(m,k) k!, equal to 1^m + ... + n^m.
BigInt powersum_stirling(std::uint32_t m, std::uint32_t n);

/// The same sum carrying an extra 1/(m+1) prefactor, a form that circulates
/// in print; kept only so the discrepancy can be demonstrated.
Rational powersum_stirling_prefactor_form(std::uint32_t m, std::uint32_t n);

/// (1/(m+1)) sum_{k=0}^{m} C(m+1,k) B_k n^{m+1-k}, equal to 1^m + ... + (n-1)^m.
/// Requires m >= 1 and n >= 1.
Rational powersum_bernoulli(std::uint32_t m, std::uint32_t n);

}  // namespace girard
