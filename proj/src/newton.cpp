#include "girard/newton.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

namespace girard {

std::string TermKey::str() const {
    return (closing ? "closing " : "") + std::string("S=") + ell_colors.str() + " T=" + walk_colors.str();
}

Polynomial NewtonReport::breakdown_total() const {
    Polynomial total;
    for (const auto& [key, value] : breakdown) total += value;
    return total;
}

namespace {

void require_positive_r(std::uint32_t r) {
    if (r < 1) throw std::invalid_argument("r must be at least 1");
}

// Calls visit(S, T) for each disjoint pair of color subsets of [k] with
// |S| + |T| = r, T ordered by bitmask and S by bitmask within T.
void for_each_split(std::uint32_t k, std::uint32_t r, bool allow_empty_walk,
                    const std::function<void(ColorSet, ColorSet)>& visit) {
    if (r > k) return;
    const std::uint32_t all = ColorSet::full(k).bits();
    for (std::uint32_t q = allow_empty_walk ? 0 : 1; q <= r; ++q) {
        for (const auto t : color_subsets(k, q)) {
            for (const auto s : color_subsets(k, r - q)) {
                if ((s.bits() & t.bits()) == 0 && ((s.bits() | t.bits()) & ~all) == 0) visit(s, t);
            }
        }
    }
}

}  // namespace

Polynomial theorem2_sum(const ColoredDigraph& g, std::uint32_t r) {
    require_positive_r(r);
    const auto ells = ell_table(g);
    const auto walks = walk_table(g);
    Polynomial total;
    for_each_split(g.color_count(), r, true,
                   [&](ColorSet s, ColorSet t) { total += walks[t.bits()] * ells[s.bits()]; });
    return total;
}

Polynomial theorem2_sum_positive_walks(const ColoredDigraph& g, std::uint32_t r) {
    require_positive_r(r);
    const auto ells = ell_table(g);
    const auto walks = walk_table(g);
    Polynomial total;
    for_each_split(g.color_count(), r, false,
                   [&](ColorSet s, ColorSet t) { total += walks[t.bits()] * ells[s.bits()]; });
    return total;
}

Polynomial ell_total(const ColoredDigraph& g, std::uint32_t r) {
    require_positive_r(r);
    if (r > g.color_count()) return Polynomial{};
    Polynomial total;
    for (const auto s : color_subsets(g.color_count(), r)) total += ell(g, r, s);
    return total;
}

NewtonReport verify_theorem2(const ColoredDigraph& g, std::uint32_t r, EllForm form) {
    require_positive_r(r);
    NewtonReport rep;
    rep.r = r;
    rep.n = g.vertex_count();
    rep.k = g.color_count();
    rep.ell_form = form;
    rep.vacuous = r > g.color_count();
    rep.which = r > g.vertex_count() ? NewtonCase::r_exceeds_n : NewtonCase::r_at_most_n;

    const auto ells = ell_table(g);
    const auto walks = walk_table(g);
    const bool include_empty_walk = rep.which == NewtonCase::r_exceeds_n;
    for_each_split(g.color_count(), r, include_empty_walk, [&](ColorSet s, ColorSet t) {
        rep.breakdown[TermKey{s, t, false}] = walks[t.bits()] * ells[s.bits()];
    });

    if (rep.which == NewtonCase::r_exceeds_n) {
        rep.residual = rep.breakdown_total();
        rep.literal_residual = rep.residual;
        return rep;
    }

    const Polynomial partial = rep.breakdown_total();
    Polynomial aggregated;
    for (const auto s : color_subsets(g.color_count(), r)) aggregated += ells[s.bits()];
    const ColorSet all = ColorSet::full(g.color_count());
    const Polynomial literal = ells[all.bits()] * BigInt(all.size() == r ? 1 : 0);

    const Polynomial& chosen = form == EllForm::aggregated ? aggregated : literal;
    const Polynomial& other = form == EllForm::aggregated ? literal : aggregated;
    rep.breakdown[TermKey{all, ColorSet{}, true}] = chosen * BigInt(r);
    rep.residual = partial + chosen * BigInt(r);
    rep.literal_residual = partial + other * BigInt(r);
    return rep;
}

Polynomial compute_X(std::uint32_t r, std::uint32_t n, std::uint32_t k, ColorSet chosen) {
    if (k > r || chosen.size() != r - k || !chosen.subset_of(ColorSet::full(r))) {
        throw std::invalid_argument("compute_X: chosen must hold r - k colors from [r]");
    }
    if (k == 0) return Polynomial(1);
    if (k > n) return Polynomial{};

    std::vector<std::uint32_t> remaining;
    for (std::uint32_t i = 1; i <= r; ++i) {
        if (!chosen.contains(i)) remaining.push_back(i);
    }

    // Strictly increasing j_1 < ... < j_k as bitmask subsets of [n].
    std::vector<std::vector<std::uint32_t>> rows;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        if (static_cast<std::uint32_t>(std::popcount(mask)) != k) continue;
        std::vector<std::uint32_t> js;
        for (std::uint32_t j = 1; j <= n; ++j) {
            if ((mask >> (j - 1)) & 1U) js.push_back(j);
        }
        rows.push_back(std::move(js));
    }

    Polynomial total;
    std::vector<std::uint32_t> tuple = remaining;
    do {
        for (const auto& js : rows) {
            Monomial m;
            for (std::uint32_t p = 0; p < k; ++p) m = m * Monomial(VarId::a(js[p], tuple[p]));
            total += Polynomial(m, BigInt(1));
        }
    } while (std::next_permutation(tuple.begin(), tuple.end()));
    return total;
}

Polynomial compute_Y(std::uint32_t r, std::uint32_t n) {
    require_positive_r(r);
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    return compute_X(r, n, r, ColorSet{});
}

NewtonReport verify_theorem3(std::uint32_t r, std::uint32_t n) {
    require_positive_r(r);
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    if (r > kMaxColors) throw std::invalid_argument("r exceeds the supported color count");
    NewtonReport rep;
    rep.r = r;
    rep.n = n;
    rep.k = r;
    rep.which = r > n ? NewtonCase::r_exceeds_n : NewtonCase::r_at_most_n;

    const ColorSet all = ColorSet::full(r);
    const std::uint32_t k_max = rep.which == NewtonCase::r_exceeds_n ? r : r - 1;
    for (std::uint32_t k = 0; k <= k_max; ++k) {
        for (const auto chosen : color_subsets(r, r - k)) {
            Polynomial bracket(1);
            if (!chosen.empty()) {
                Polynomial inner;
                for (std::uint32_t j = 1; j <= n; ++j) {
                    Polynomial prod(1);
                    for (const auto i : chosen.members()) prod *= Polynomial(VarId::a(j, i));
                    inner += prod;
                }
                bracket = inner * factorial(r - k);
            }
            Polynomial term = bracket * compute_X(r, n, k, chosen);
            if (k % 2 == 1) term = -term;
            rep.breakdown[TermKey{ColorSet(all.bits() & ~chosen.bits()), chosen, false}] = std::move(term);
        }
    }

    const Polynomial partial = rep.breakdown_total();
    if (rep.which == NewtonCase::r_exceeds_n) {
        rep.residual = partial;
        rep.literal_residual = partial;
        return rep;
    }
    const Polynomial y = compute_Y(r, n) * BigInt(r);
    const Polynomial closing = r % 2 == 0 ? y : -y;
    rep.breakdown[TermKey{all, ColorSet{}, true}] = closing;
    rep.residual = partial + closing;
    rep.literal_residual = partial + y;
    return rep;
}

bool theorem3_matches_digraph(std::uint32_t r, std::uint32_t n) {
    const auto symbolic = verify_theorem3(r, n);
    const auto graph = verify_theorem2(build_gamma_rc(n, r), r);
    return symbolic.breakdown == graph.breakdown && symbolic.residual == graph.residual;
}

Polynomial collapse_superscripts(const Polynomial& p) {
    return poly_substitute(p, [](const VarId& v) {
        return v.family == Family::A ? Polynomial(VarId::a(v.sub, 1)) : Polynomial(v);
    });
}

namespace {

template <typename T>
std::vector<T> power_sums_of(std::span<const T> roots, std::uint32_t max_power) {
    std::vector<T> p(max_power + 1, T(0));
    for (const auto& a : roots) {
        T power(1);
        for (std::uint32_t t = 0; t <= max_power; ++t) {
            p[t] += power;
            power *= a;
        }
    }
    return p;
}

template <typename T>
std::vector<T> coefficients_of(std::span<const T> roots) {
    // Multiply out (x - a_1)(x - a_2)...; e[t] is the coefficient of x^{n-t}.
    std::vector<T> e{T(1)};
    for (const auto& a : roots) {
        std::vector<T> next(e.size() + 1, T(0));
        for (std::size_t t = 0; t < e.size(); ++t) {
            next[t] += e[t];
            next[t + 1] -= e[t] * a;
        }
        e = std::move(next);
    }
    return e;
}

template <typename T>
std::vector<T> newton_terms(std::span<const T> roots, std::uint32_t r) {
    require_positive_r(r);
    const auto n = static_cast<std::uint32_t>(roots.size());
    if (n < 1) throw std::invalid_argument("at least one root is required");
    const auto p = power_sums_of(roots, r);
    const auto e = coefficients_of(roots);
    auto coef = [&](std::uint32_t t) { return t <= n ? e[t] : T(0); };

    std::vector<T> terms;
    for (std::uint32_t t = 0; t < r; ++t) terms.push_back(coef(t) * p[r - t]);
    if (r > n) {
        terms.push_back(coef(r));  // e_r p_0 with p_0 read as 1; e_r = 0 here
    } else {
        terms.push_back(coef(r) * T(static_cast<int>(r)));
    }
    return terms;
}

}  // namespace

std::vector<BigInt> classical_newton_terms(std::span<const BigInt> roots, std::uint32_t r) {
    return newton_terms<BigInt>(roots, r);
}

std::vector<Polynomial> classical_newton_terms(std::span<const Polynomial> roots, std::uint32_t r) {
    return newton_terms<Polynomial>(roots, r);
}

std::vector<BigInt> power_sums(std::span<const BigInt> roots, std::uint32_t max_power) {
    return power_sums_of<BigInt>(roots, max_power);
}

std::vector<BigInt> signed_coefficients(std::span<const BigInt> roots) { return coefficients_of<BigInt>(roots); }

bool classical_newton_check(std::span<const BigInt> roots, std::uint32_t r) {
    BigInt total = 0;
    for (const auto& t : classical_newton_terms(roots, r)) total += t;
    return total == 0;
}

}  // namespace girard
