#pragma once

// Seeded generators for property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "poincare/homology.hpp"
#include "poincare/monomial.hpp"
#include "poincare/simplicial.hpp"

namespace poincare::testing {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// 1..5 random facets on n vertices; never void.
inline SimplicialComplex random_complex(Rng& rng, std::size_t n) {
    std::vector<FaceMask> facets;
    const std::size_t count = uniform(rng, 1, 5);
    for (std::size_t i = 0; i < count; ++i) {
        FaceMask f = 0;
        for (std::size_t v = 0; v < n; ++v)
            if (uniform(rng, 0, 99) < 45) f |= FaceMask{1} << v;
        facets.push_back(f);
    }
    return SimplicialComplex::from_facets(n, facets);
}

inline std::vector<std::vector<int>> random_sign_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
    std::vector<std::vector<int>> m(rows, std::vector<int>(cols, 0));
    const std::size_t density = uniform(rng, 10, 90);
    for (auto& row : m)
        for (auto& x : row)
            if (uniform(rng, 0, 99) < density) x = uniform(rng, 0, 1) ? 1 : -1;
    return m;
}

/// Random antichain of at most `max_generators` monomials in `variables`
/// variables with exponents up to `max_exponent`.
inline std::vector<Monomial> random_antichain(Rng& rng, std::size_t variables, std::size_t max_generators,
                                              Exponent max_exponent) {
    std::vector<Monomial> out;
    const std::size_t target = uniform(rng, 1, max_generators);
    for (int attempt = 0; attempt < 200 && out.size() < target; ++attempt) {
        std::vector<Monomial::Factor> factors;
        for (VarIndex v = 0; v < variables; ++v)
            if (uniform(rng, 0, 99) < 45) factors.emplace_back(v, static_cast<Exponent>(uniform(rng, 1, max_exponent)));
        Monomial m(std::move(factors));
        if (m.is_one()) continue;
        bool comparable = false;
        for (const auto& g : out) comparable = comparable || divides(g, m) || divides(m, g);
        if (!comparable) out.push_back(std::move(m));
    }
    return out;
}

} // namespace poincare::testing
