#include <random>

#include "catch_amalgamated.hpp"

#include "girard/newton.hpp"

using namespace girard;

namespace {

Polynomial alpha(std::uint32_t j, std::uint32_t i) { return Polynomial(VarId::a(j, i)); }

// sum over all (p, q) and all S, T with S, T disjoint, without using the
// |S| = p shortcut; ell and c_walk vanish off the diagonal.
Polynomial theorem2_all_indices(const ColoredDigraph& g, std::uint32_t r, bool allow_empty_walk) {
    Polynomial total;
    const auto k = g.color_count();
    for (std::uint32_t q = allow_empty_walk ? 0 : 1; q <= r; ++q) {
        const auto p = r - q;
        for (std::uint32_t s = 0; s < (1U << k); ++s) {
            for (std::uint32_t t = 0; t < (1U << k); ++t) {
                if (s & t) continue;
                total += c_walk(g, q, ColorSet(t)) * ell(g, p, ColorSet(s));
            }
        }
    }
    return total;
}

}  // namespace

TEST_CASE("theorem2_sum examples", "[newton]") {
    const auto g = build_gamma_rc(1, 2);
    const Polynomial a = alpha(1, 1);
    const Polynomial b = alpha(1, 2);
    // T = {1,2}: 2ab; S = {1}, T = {2}: -ab; S = {2}, T = {1}: -ab.
    CHECK(theorem2_sum(g, 2).is_zero());
    CHECK(theorem2_sum_positive_walks(g, 2).is_zero());
    const auto rep = verify_theorem2(g, 2);
    CHECK(rep.breakdown.at(TermKey{ColorSet{}, ColorSet::of({1, 2}), false}) == BigInt(2) * a * b);
    CHECK(rep.breakdown.at(TermKey{ColorSet::of({1}), ColorSet::of({2}), false}) == -a * b);

    CHECK(theorem2_sum(g, 3).is_zero());

    ColoredDigraph one(1, 1);
    one.set_bundle(1, 1, {a});
    CHECK(theorem2_sum(one, 2).is_zero());
}

TEST_CASE("ell_total", "[newton]") {
    const auto g = build_gamma_rc(1, 2);
    CHECK(ell_total(g, 1) == -alpha(1, 1) - alpha(1, 2));
    CHECK(ell_total(g, 2).is_zero());
    const auto h = build_gamma_rc(2, 2);
    CHECK(ell_total(h, 2) == ell(h, 2, ColorSet::full(2)));
    CHECK(ell_total(h, 3).is_zero());
}

TEST_CASE("verify_theorem2 cases", "[newton]") {
    const auto rep1 = verify_theorem2(build_gamma_rc(1, 2), 2);
    CHECK(rep1.which == NewtonCase::r_exceeds_n);
    CHECK(rep1.passed());

    // One vertex, two colors, r = 1 <= n: the literal closing term is zero
    // because no subdigraph uses both colors with one edge.
    const auto rep2 = verify_theorem2(build_gamma_rc(1, 2), 1);
    CHECK(rep2.which == NewtonCase::r_at_most_n);
    CHECK(rep2.passed());
    CHECK(rep2.literal_residual == alpha(1, 1) + alpha(1, 2));
    const auto lit = verify_theorem2(build_gamma_rc(1, 2), 1, EllForm::literal);
    CHECK_FALSE(lit.passed());
    CHECK(lit.literal_residual.is_zero());

    const auto rep3 = verify_theorem2(build_gamma_rc(3, 2), 2);
    CHECK(rep3.residual.is_zero());
    CHECK(rep3.literal_residual.is_zero());

    const auto vac = verify_theorem2(build_gamma_rc(2, 2), 5);
    CHECK(vac.vacuous);
    CHECK(vac.passed());
    CHECK(vac.breakdown.empty());
}

TEST_CASE("theorem2 on random graphs and index equivalence", "[newton][property]") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const auto n = static_cast<std::uint32_t>(1 + seed % 4);
        const auto k = static_cast<std::uint32_t>(1 + (seed / 4) % 4);
        const auto g = random_digraph(n, k, seed % 2 ? 1.0 : 0.5, 3, seed);
        for (std::uint32_t r = 1; r <= k; ++r) {
            INFO("seed=" << seed << " r=" << r);
            const auto rep = verify_theorem2(g, r);
            CHECK(rep.passed());
            CHECK(rep.breakdown_total() == rep.residual);
            CHECK(theorem2_sum(g, r) == theorem2_all_indices(g, r, true));
            CHECK(theorem2_sum_positive_walks(g, r) == theorem2_all_indices(g, r, false));
            if (k == r && r <= n) CHECK(rep.literal_residual.is_zero());
        }
    }
}

TEST_CASE("compute_X and compute_Y", "[newton]") {
    CHECK(compute_X(3, 2, 0, ColorSet::full(3)) == Polynomial(1));
    CHECK(compute_X(2, 2, 1, ColorSet::of({1})) == alpha(1, 2) + alpha(2, 2));
    CHECK(compute_X(2, 1, 2, ColorSet{}).is_zero());
    CHECK_THROWS_AS(compute_X(2, 2, 1, ColorSet::of({1, 2})), std::invalid_argument);

    CHECK(compute_Y(1, 1) == alpha(1, 1));
    CHECK(compute_Y(2, 2) == alpha(1, 1) * alpha(2, 2) + alpha(1, 2) * alpha(2, 1));
    CHECK(compute_Y(3, 2).is_zero());
}

TEST_CASE("verify_theorem3", "[newton]") {
    // (1,1): a + (-1)^1 * 1 * a.
    const auto base = verify_theorem3(1, 1);
    CHECK(base.which == NewtonCase::r_at_most_n);
    CHECK(base.passed());
    CHECK(base.literal_residual == BigInt(2) * alpha(1, 1));

    CHECK(verify_theorem3(2, 1).which == NewtonCase::r_exceeds_n);
    for (std::uint32_t r = 1; r <= 3; ++r) {
        for (std::uint32_t n = 1; n <= 3; ++n) {
            INFO("r=" << r << " n=" << n);
            const auto rep = verify_theorem3(r, n);
            CHECK(rep.passed());
            CHECK(rep.breakdown_total() == rep.residual);
            CHECK(theorem3_matches_digraph(r, n));
        }
    }
    // The printed closing sign only works for even r.
    CHECK(verify_theorem3(2, 2).literal_residual.is_zero());
    CHECK_FALSE(verify_theorem3(3, 3).literal_residual.is_zero());
}

TEST_CASE("classical newton-girard", "[newton]") {
    const std::vector<BigInt> single{7};
    CHECK(classical_newton_check(single, 2));
    const std::vector<BigInt> two{2, 3};
    CHECK(classical_newton_check(two, 1));
    const auto e = signed_coefficients(two);
    CHECK(e == std::vector<BigInt>{1, -5, 6});
    const auto p = power_sums(two, 3);
    CHECK(p == std::vector<BigInt>{2, 5, 13, 35});

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> root(-5, 5);
    std::uniform_int_distribution<int> size(1, 5);
    std::uniform_int_distribution<int> power(1, 7);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<BigInt> roots(static_cast<std::size_t>(size(rng)));
        for (auto& a : roots) a = root(rng);
        const auto r = static_cast<std::uint32_t>(power(rng));
        // Independent check: e_t as signed elementary symmetric sums.
        const auto coeffs = signed_coefficients(roots);
        for (std::uint32_t t = 0; t <= roots.size(); ++t) {
            BigInt sigma = 0;
            for (std::uint32_t mask = 0; mask < (1U << roots.size()); ++mask) {
                if (static_cast<std::uint32_t>(std::popcount(mask)) != t) continue;
                BigInt prod = 1;
                for (std::size_t i = 0; i < roots.size(); ++i) {
                    if ((mask >> i) & 1U) prod *= roots[i];
                }
                sigma += prod;
            }
            CHECK(coeffs[t] == (t % 2 ? BigInt(-sigma) : sigma));
        }
        CHECK(classical_newton_check(roots, r));
    }
}

TEST_CASE("collapsing superscripts recovers the classical identity", "[newton]") {
    for (std::uint32_t r = 1; r <= 3; ++r) {
        for (std::uint32_t n = 1; n <= 3; ++n) {
            const auto rep = verify_theorem3(r, n);
            std::vector<Polynomial> roots;
            for (std::uint32_t j = 1; j <= n; ++j) roots.push_back(alpha(j, 1));
            const auto classical = classical_newton_terms(roots, r);
            REQUIRE(classical.size() == r + 1);

            // Group the breakdown by k = r - |chosen|.
            std::vector<Polynomial> by_k(r + 1);
            for (const auto& [key, value] : rep.breakdown) {
                const auto k = key.closing ? r : r - key.walk_colors.size();
                by_k[k] += collapse_superscripts(value);
            }
            const BigInt scale = factorial(r);
            for (std::uint32_t k = 0; k <= r; ++k) {
                INFO("r=" << r << " n=" << n << " k=" << k);
                CHECK(by_k[k] == classical[k] * scale);
            }
        }
    }
}
