#include "girard/powersum.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <string>

namespace girard {

PowerSumInstance::PowerSumInstance(std::uint32_t m, std::uint32_t r) : m_(m), r_(r) {
    if (m < 1 || r < 1) {
        throw std::invalid_argument("power-sum instance needs m >= 1 and r >= 1");
    }
    if (m > 30) {
        throw std::invalid_argument("power-sum instance: m must be at most 30");
    }
}

Polynomial pi_r(std::span<const std::uint32_t> set, std::uint32_t r) {
    if (set.empty()) return Polynomial{};
    Polynomial product(1);
    for (std::uint32_t j = 1; j <= r; ++j) {
        Polynomial factor;
        for (const auto i : set) factor += Polynomial(VarId::x(i, j));
        product *= factor;
    }
    return product;
}

namespace {

std::vector<std::uint32_t> members(std::uint32_t mask) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t bit = 0; mask >> bit; ++bit) {
        if ((mask >> bit) & 1U) out.push_back(bit + 1);
    }
    return out;
}

std::uint32_t mask_of(std::span<const std::uint32_t> set) {
    std::uint32_t mask = 0;
    for (const auto e : set) {
        if (e < 1 || e > 31) throw std::invalid_argument("set element out of range 1..31");
        mask |= 1U << (e - 1);
    }
    return mask;
}

// Signed inclusion-exclusion over the nonempty submasks of rest; |U| = |rest| + 1.
Polynomial inner_sum_mask(std::uint32_t rest, std::uint32_t r, std::map<std::uint32_t, Polynomial>& cache) {
    const int size_u = std::popcount(rest) + 1;
    Polynomial total;
    for (std::uint32_t v = rest; v != 0; v = (v - 1) & rest) {
        auto it = cache.find(v);
        if (it == cache.end()) {
            const auto elems = members(v);
            it = cache.emplace(v, pi_r(elems, r)).first;
        }
        const int exponent = size_u - std::popcount(v) - 1;
        if (exponent % 2 == 0) {
            total += it->second;
        } else {
            total -= it->second;
        }
    }
    return total;
}

}  // namespace

Polynomial theorem1_lhs(const PowerSumInstance& inst) {
    Polynomial total;
    std::vector<std::uint32_t> prefix;
    for (std::uint32_t k = 1; k <= inst.m(); ++k) {
        prefix.push_back(k);
        total += pi_r(prefix, inst.r()) * Polynomial(VarId::y(k + 1));
    }
    return total;
}

Polynomial inner_signed_sum(std::span<const std::uint32_t> set_u, std::uint32_t r) {
    std::uint32_t mask = mask_of(set_u);
    if (std::popcount(mask) < 2) {
        throw std::invalid_argument("inner_signed_sum needs |U| >= 2");
    }
    const std::uint32_t top = 1U << (31 - std::countl_zero(mask));
    std::map<std::uint32_t, Polynomial> cache;
    return inner_sum_mask(mask & ~top, r, cache);
}

Polynomial theorem1_rhs(const PowerSumInstance& inst, bool prune) {
    const std::uint32_t universe = inst.m() + 1;
    std::map<std::uint32_t, Polynomial> cache;
    Polynomial total;
    for (std::uint32_t u = 1; u < (1U << universe); ++u) {
        if (std::popcount(u) < 2) continue;
        const int top_bit = 31 - std::countl_zero(u);
        const std::uint32_t rest = u & ~(1U << top_bit);
        if (prune && static_cast<std::uint32_t>(std::popcount(rest)) > inst.r()) continue;
        Polynomial inner = inner_sum_mask(rest, inst.r(), cache);
        if (inner.is_zero()) continue;
        total += inner * Polynomial(VarId::y(static_cast<std::uint32_t>(top_bit) + 1));
    }
    return total;
}

Polynomial goodwords_oracle(const PowerSumInstance& inst) {
    const auto r = inst.r();
    Polynomial total;
    for (std::uint32_t t = 2; t <= inst.m() + 1; ++t) {
        // Odometer over (i_1, ..., i_r) in [1, t-1]^r.
        std::vector<std::uint32_t> idx(r, 1);
        while (true) {
            Monomial word(VarId::y(t));
            for (std::uint32_t p = 0; p < r; ++p) word = word * Monomial(VarId::x(idx[p], p + 1));
            total += Polynomial(word, BigInt(1));

            std::uint32_t p = 0;
            while (p < r && idx[p] == t - 1) idx[p++] = 1;
            if (p == r) break;
            ++idx[p];
        }
    }
    return total;
}

BigInt goodwords_count(const PowerSumInstance& inst) {
    BigInt count = 0;
    for (std::uint32_t t = 2; t <= inst.m() + 1; ++t) count += ipow(BigInt(t - 1), inst.r());
    return count;
}

BigInt stirling2(std::uint32_t m, std::uint32_t k) {
    if (m == 0) return k == 0 ? 1 : 0;
    if (k == 0) return 0;
    BigInt sum = 0;
    for (std::uint32_t j = 1; j <= k; ++j) {
        BigInt term = binomial(k, j) * ipow(BigInt(j), m);
        if ((k - j) % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    const BigInt kf = factorial(k);
    if (sum % kf != 0) {
        throw std::logic_error("stirling2(" + std::to_string(m) + ", " + std::to_string(k) +
                               "): alternating sum not divisible by k!");
    }
    return sum / kf;
}

BigInt lemma21_lhs(std::uint32_t alpha, std::span<const BigInt> c) {
    BigInt sum = 0;
    for (std::size_t k = 1; k <= c.size(); ++k) sum += ipow(BigInt(k), alpha) * c[k - 1];
    return sum;
}

BigInt lemma21_rhs(std::uint32_t alpha, std::span<const BigInt> c) {
    const auto m = static_cast<std::int64_t>(c.size());
    BigInt sum = 0;
    for (std::int64_t j = 1; j <= m; ++j) {
        BigInt inner = 0;
        for (std::int64_t k = j; k <= m; ++k) inner += binomial(k, j) * c[static_cast<std::size_t>(k - 1)];
        sum += factorial(j) * stirling2(alpha, static_cast<std::uint32_t>(j)) * inner;
    }
    return sum;
}

bool verify_lemma21(std::uint32_t alpha, std::span<const BigInt> c) {
    if (alpha == 0) throw std::invalid_argument("lemma21 requires alpha >= 1");
    return lemma21_lhs(alpha, c) == lemma21_rhs(alpha, c);
}

BigInt powersum_direct(std::uint32_t m, std::uint32_t n) {
    BigInt sum = 0;
    for (std::uint32_t i = 1; i <= n; ++i) sum += ipow(BigInt(i), m);
    return sum;
}

BigInt powersum_stirling(std::uint32_t m, std::uint32_t n) {
    if (m < 1 || n < 1) throw std::invalid_argument("powersum_stirling requires m >= 1 and n >= 1");
    BigInt sum = 0;
    for (std::uint32_t k = 0; k <= std::min(m, n); ++k) {
        sum += binomial(n + 1, k + 1) * stirling2(m, k) * factorial(k);
    }
    return sum;
}

Rational powersum_stirling_prefactor_form(std::uint32_t m, std::uint32_t n) {
    return Rational(powersum_stirling(m, n), BigInt(m + 1));
}

Rational powersum_bernoulli(std::uint32_t m, std::uint32_t n) {
    if (m < 1 || n < 1) throw std::invalid_argument("powersum_bernoulli requires m >= 1 and n >= 1");
    Rational sum;
    for (std::uint32_t k = 0; k <= m; ++k) {
        sum += Rational(binomial(m + 1, k) * ipow(BigInt(n), m + 1 - k)) * bernoulli_number(k);
    }
    return sum / Rational(BigInt(m + 1));
}

}  // namespace girard
