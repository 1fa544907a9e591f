#pragma once

#include <map>
#include <utility>
#include <vector>

#include "poincare/monomial.hpp"
#include "poincare/polynomial.hpp"

namespace poincare {

/// Bookkeeping between original variables and polarized slot variables.
/// Slot 1 of a variable is the variable itself; slots 2.. get fresh indices
/// above every original index.
class PolarizationMap {
public:
    struct Slot {
        VarIndex original;
        Exponent slot;
        friend auto operator<=>(const Slot&, const Slot&) = default;
    };

    /// Polarized index for slot `slot` of `original`; throws std::out_of_range.
    VarIndex forward(VarIndex original, Exponent slot) const;
    /// Original variable of a polarized index; throws std::out_of_range.
    VarIndex backward(VarIndex polarized) const;
    Slot slot_of(VarIndex polarized) const;
    bool is_identity() const;
    std::size_t polarized_variable_count() const noexcept { return backward_.size(); }

    /// Debug rendering: "x" for slot 1, "x<2>" for slot 2, and so on.
    std::string debug_name(VarIndex polarized, const VariablePool& pool) const;

private:
    friend struct PolarizationBuilder;
    std::map<Slot, VarIndex> forward_;
    std::map<VarIndex, Slot> backward_;
};

struct Polarization {
    std::vector<Monomial> monomials;
    PolarizationMap map;
};

/// Replaces each x^a by the product of slots 1..a of x. Output is squarefree
/// and in one-to-one correspondence with the input.
Polarization polarize(const std::vector<Monomial>& monomials);

Monomial depolarize(const Monomial& m, const PolarizationMap& map);
MultigradedPolynomial depolarize(const MultigradedPolynomial& p, const PolarizationMap& map);

} // namespace poincare
