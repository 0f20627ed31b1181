#pragma once

// Shared random generators for the property tests.

#include <random>
#include <vector>

#include "girard/poly.hpp"

namespace girard::testing {

/// Up to four variables drawn from all three families.
inline std::vector<VarId> sample_variables() {
    return {VarId::x(1, 1), VarId::x(2, 1), VarId::y(2), VarId::a(1, 2)};
}

/// Random polynomial: coefficients in [-5, 5], degree <= 3.
inline Polynomial random_polynomial(std::mt19937_64& rng, int max_terms = 4) {
    const auto vars = sample_variables();
    std::uniform_int_distribution<int> coef(-5, 5);
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> deg(0, 3);
    std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
    Polynomial p;
    const int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Monomial m;
        const int d = deg(rng);
        for (int i = 0; i < d; ++i) m = m * Monomial(vars[pick(rng)]);
        p += Polynomial(m, BigInt(coef(rng)));
    }
    return p;
}

inline Assignment random_assignment(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> val(-7, 7);
    Assignment a;
    for (const auto& v : sample_variables()) a[v] = val(rng);
    return a;
}

}  // namespace girard::testing
