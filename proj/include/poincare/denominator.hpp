#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "poincare/homology.hpp"
#include "poincare/lcm_lattice.hpp"
#include "poincare/monomial.hpp"
#include "poincare/polynomial.hpp"

namespace poincare {

/// p_α(t) = t^3 · H̃(Δ_{M_α})(t). Throws std::invalid_argument for α = 1.
TPolynomial p_alpha(const LcmLattice& lattice, NodeId node, FieldChar characteristic);

/// ε_{i,α} = dim H̃_{i-3}(Δ_{M_α}), keyed by i; zero entries omitted.
std::map<int, std::uint64_t> deviations(const LcmLattice& lattice, NodeId node, FieldChar characteristic);

/// Denominator b_{R,k}(x, t) of the multigraded Poincaré-Betti series of
/// k[x]/(M), in the variables of M.
///
/// The generating set is minimalized and polarized; the result is the
/// product over lattice nodes α != 1 of (1 - x^α p_α(t)), truncated to
/// squarefree terms after every factor, and mapped back to the original
/// variables. Per-node homology runs on up to `threads` worker threads
/// (0 picks the hardware concurrency).
MultigradedPolynomial denominator(const std::vector<Monomial>& monomials, FieldChar characteristic,
                                  unsigned threads = 0);

/// The saturated-subset sum 1 + Σ_S m_S (-t)^{c(S)+2} H̃(Δ_S)(t), evaluated
/// term by term. It agrees with denominator() whenever every saturated
/// subset is connected and differs otherwise (disconnected saturated sets
/// have acyclic Δ_S here, while the product form keeps their cross terms).
MultigradedPolynomial denominator_saturated(const std::vector<Monomial>& monomials, FieldChar characteristic);

/// Sets every ring variable to 1.
TPolynomial specialize_ungraded(const MultigradedPolynomial& p);

struct PoincareSeries {
    /// ∏ (1 + x_i t) over the variables occurring in the input.
    MultigradedPolynomial numerator;
    MultigradedPolynomial denominator;
};

PoincareSeries poincare_series(const std::vector<Monomial>& monomials, FieldChar characteristic);

} // namespace poincare
