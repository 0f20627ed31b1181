#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "catch_amalgamated.hpp"

#include "girard/enumerate.hpp"
#include "oracles.hpp"

using namespace girard;

namespace {

Polynomial alpha(std::uint32_t j, std::uint32_t i) { return Polynomial(VarId::a(j, i)); }

// One vertex with loops a (c1) and b (c2).
ColoredDigraph two_loops() { return build_gamma_rc(1, 2); }

ColoredDigraph full_two_cycle(std::uint32_t k) {
    ColoredDigraph g(2, k);
    g.set_bundle(1, 2, ColoredDigraph::Bundle(k, Polynomial(1)));
    g.set_bundle(2, 1, ColoredDigraph::Bundle(k, Polynomial(1)));
    return with_symbolic_weights(g);
}

std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> class_counts_clsd(const ColoredDigraph& g) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> out;
    for (const auto& gamma : enum_clsd(g)) ++out[{gamma.length(), gamma.colors().bits()}];
    return out;
}

std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> class_counts_ccw(const ColoredDigraph& g) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> out;
    for (const auto& w : enum_ccw(g)) ++out[{w.length(), w.colors().bits()}];
    return out;
}

}  // namespace

TEST_CASE("canonical form", "[enumerate]") {
    const Cycle c{{3, 1, 1}, {1, 2, 2}, {2, 3, 3}};
    const auto canon = canonical_cycle(c);
    CHECK(canon.front().from == 1);
    const LinearSubdigraph a({{{4, 4, 2}}, c});
    const LinearSubdigraph b({canon, {{4, 4, 2}}});
    CHECK(a == b);
    CHECK(a.cycles().front().front().from == 1);
    CHECK(a.length() == 4);
    CHECK(a.cycle_count() == 2);
    CHECK(a.colors() == ColorSet::of({1, 2, 3}));
    CHECK(a.vertices() == std::vector<std::uint32_t>{1, 2, 3, 4});
    CHECK(a.cycle_index_through(4) == 1);
    CHECK(a.cycle_index_through(5) == -1);
    CHECK(a.str() == "[(1->2:c2)(2->3:c3)(3->1:c1)][(4->4:c2)]");
}

TEST_CASE("enum_clsd examples", "[enumerate]") {
    ColoredDigraph loop(1, 1);
    loop.set_bundle(1, 1, {alpha(1, 1)});
    const auto one = enum_clsd(loop);
    REQUIRE(one.size() == 1);
    CHECK(one[0].cycle_count() == 1);
    CHECK(weight(loop, one[0]) == alpha(1, 1));

    // The 2-cycle's two edges would share the only color.
    const auto g = full_two_cycle(1);
    for (const auto& gamma : enum_clsd(g)) CHECK(gamma.length() == 1);
    CHECK(enum_clsd(g).empty());

    // Self-loop graph with n = r = 2: four single loops, and two loop pairs
    // (one loop per vertex, colors {1,2} in either assignment). Two loops at
    // the same vertex share that vertex.
    const auto gamma22 = enum_clsd(build_gamma_rc(2, 2));
    std::size_t singles = 0;
    std::size_t pairs = 0;
    for (const auto& gm : gamma22) {
        if (gm.cycle_count() == 1) ++singles;
        if (gm.cycle_count() == 2) ++pairs;
    }
    CHECK(singles == 4);
    CHECK(pairs == 2);
    CHECK(gamma22.size() == 6);
}

TEST_CASE("enum_ccw examples", "[enumerate]") {
    const auto walks = enum_ccw(two_loops(), 2);
    REQUIRE(walks.size() == 2);
    CHECK(walks[0].steps[0].color != walks[1].steps[0].color);

    CHECK(enum_ccw(two_loops(), 0).empty());
    CHECK(enum_ccw(full_two_cycle(1), 2).empty());
    CHECK(enum_ccw(full_two_cycle(2), 2).size() == 4);
}

TEST_CASE("ell and c_walk examples", "[enumerate]") {
    const auto g = two_loops();
    CHECK(ell(g, 0, ColorSet{}) == Polynomial(1));
    CHECK(c_walk(g, 0, ColorSet{}) == Polynomial(1));

    ColoredDigraph loop(1, 1);
    loop.set_bundle(1, 1, {alpha(1, 1)});
    CHECK(ell(loop, 1, ColorSet::of({1})) == -alpha(1, 1));
    CHECK(ell(loop, 2, ColorSet::of({1})).is_zero());

    CHECK(c_walk(g, 2, ColorSet::of({1, 2})) == BigInt(2) * alpha(1, 1) * alpha(1, 2));
    CHECK(ell(g, 2, ColorSet::of({1, 2})).is_zero());
    CHECK_THROWS_AS(ell(g, 1, ColorSet::of({3})), std::invalid_argument);
}

TEST_CASE("enumerators match brute force on every small pattern", "[enumerate][property]") {
    std::mt19937_64 rng(3);
    for (std::uint32_t n = 1; n <= 3; ++n) {
        for (std::uint32_t k = 1; k <= 3; ++k) {
            auto graphs = testing::all_patterns(n, k);
            if (n == 3) {
                std::shuffle(graphs.begin(), graphs.end(), rng);
                graphs.erase(graphs.begin() + 40, graphs.end());
            }
            for (const auto& g : graphs) {
                auto clsd = enum_clsd(g);
                auto ccw = enum_ccw(g);
                for (const auto& gamma : clsd) {
                    CHECK_FALSE(subdigraph_violation(g, gamma).has_value());
                    CHECK(gamma.length() == gamma.colors().size());
                    CHECK(gamma.length() <= std::min(n, k));
                }
                for (const auto& w : ccw) {
                    CHECK_FALSE(closed_walk_violation(g, w).has_value());
                    CHECK(w.length() <= k);
                }
                std::sort(clsd.begin(), clsd.end());
                std::sort(ccw.begin(), ccw.end());
                CHECK(std::adjacent_find(clsd.begin(), clsd.end()) == clsd.end());
                CHECK(clsd == testing::brute_clsd(g));
                CHECK(ccw == testing::brute_ccw(g));
            }
        }
    }
}

TEST_CASE("filters select exact classes and the sums vanish off the diagonal", "[enumerate][property]") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const auto n = static_cast<std::uint32_t>(1 + seed % 3);
        const auto k = static_cast<std::uint32_t>(1 + (seed / 3) % 3);
        const auto g = random_digraph(n, k, 0.8, 3, seed);
        const auto ells = ell_table(g);
        const auto walks = walk_table(g);
        for (std::uint32_t bits = 0; bits < (1U << k); ++bits) {
            const ColorSet s(bits);
            for (std::uint32_t p = 0; p <= k + 1; ++p) {
                if (p != s.size()) {
                    CHECK(ell(g, p, s).is_zero());
                    CHECK(c_walk(g, p, s).is_zero());
                    CHECK(enum_clsd(g, p, s).empty());
                } else {
                    CHECK(ell(g, p, s) == ells[bits]);
                    CHECK(c_walk(g, p, s) == walks[bits]);
                    for (const auto& gm : enum_clsd(g, p, s)) CHECK(gm.colors() == s);
                    for (const auto& w : enum_ccw(g, p, s)) CHECK(w.colors() == s);
                }
            }
        }
    }
}

TEST_CASE("counts are invariant under vertex relabeling", "[enumerate][property]") {
    std::mt19937_64 rng(17);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto n = static_cast<std::uint32_t>(2 + seed % 3);
        const auto k = static_cast<std::uint32_t>(1 + seed % 4);
        const auto g = random_digraph(n, k, 0.6, 2, seed);
        std::vector<std::uint32_t> perm(n);
        std::iota(perm.begin(), perm.end(), 1U);
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto h = permute_vertices(g, perm);
        CHECK(class_counts_clsd(g) == class_counts_clsd(h));
        CHECK(class_counts_ccw(g) == class_counts_ccw(h));
        CHECK(ell_table(g) == ell_table(h));
        CHECK(walk_table(g) == walk_table(h));
    }
}

TEST_CASE("closed-form walk sums on the self-loop graph", "[enumerate]") {
    for (std::uint32_t r = 1; r <= 3; ++r) {
        for (std::uint32_t n = 1; n <= 3; ++n) {
            const auto g = build_gamma_rc(n, r);
            for (std::uint32_t q = 1; q <= r; ++q) {
                for (const auto t : color_subsets(r, q)) {
                    Polynomial expected;
                    for (std::uint32_t j = 1; j <= n; ++j) {
                        Polynomial prod(1);
                        for (const auto i : t.members()) prod *= alpha(j, i);
                        expected += prod;
                    }
                    expected *= factorial(q);
                    INFO("r=" << r << " n=" << n << " T=" << t.str());
                    CHECK(c_walk(g, q, t) == expected);
                }
            }
        }
    }
}
