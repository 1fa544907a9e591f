#include "poincare/polarization.hpp"

#include <algorithm>
#include <stdexcept>

namespace poincare {

struct PolarizationBuilder {
    static void add(PolarizationMap& map, PolarizationMap::Slot slot, VarIndex index) {
        map.forward_.emplace(slot, index);
        map.backward_.emplace(index, slot);
    }
};

VarIndex PolarizationMap::forward(VarIndex original, Exponent slot) const {
    auto it = forward_.find(Slot{original, slot});
    if (it == forward_.end())
        throw std::out_of_range("no polarized variable for slot " + std::to_string(slot) + " of variable " +
                                std::to_string(original));
    return it->second;
}

VarIndex PolarizationMap::backward(VarIndex polarized) const { return slot_of(polarized).original; }

PolarizationMap::Slot PolarizationMap::slot_of(VarIndex polarized) const {
    auto it = backward_.find(polarized);
    if (it == backward_.end()) throw std::out_of_range("unknown polarized variable " + std::to_string(polarized));
    return it->second;
}

bool PolarizationMap::is_identity() const {
    return std::all_of(backward_.begin(), backward_.end(),
                       [](const auto& kv) { return kv.second.slot == 1 && kv.second.original == kv.first; });
}

std::string PolarizationMap::debug_name(VarIndex polarized, const VariablePool& pool) const {
    auto slot = slot_of(polarized);
    std::string name = pool.name(slot.original);
    if (slot.slot > 1) name += "<" + std::to_string(slot.slot) + ">";
    return name;
}

Polarization polarize(const std::vector<Monomial>& monomials) {
    if (monomials.empty()) throw std::invalid_argument("cannot polarize an empty monomial set");

    std::map<VarIndex, Exponent> max_exponent;
    for (const auto& m : monomials) {
        if (m.is_one()) throw std::invalid_argument("the unit monomial cannot be a generator");
        for (auto [v, e] : m.factors()) max_exponent[v] = std::max(max_exponent[v], e);
    }

    Polarization result;
    VarIndex next = max_exponent.rbegin()->first + 1;
    for (auto [v, top] : max_exponent) {
        PolarizationBuilder::add(result.map, {v, 1}, v);
        for (Exponent k = 2; k <= top; ++k) PolarizationBuilder::add(result.map, {v, k}, next++);
    }

    result.monomials.reserve(monomials.size());
    for (const auto& m : monomials) {
        std::vector<Monomial::Factor> factors;
        for (auto [v, e] : m.factors())
            for (Exponent k = 1; k <= e; ++k) factors.emplace_back(result.map.forward(v, k), 1);
        result.monomials.emplace_back(std::move(factors));
    }
    return result;
}

Monomial depolarize(const Monomial& m, const PolarizationMap& map) {
    std::vector<Monomial::Factor> factors;
    factors.reserve(m.factors().size());
    for (auto [v, e] : m.factors()) factors.emplace_back(map.backward(v), e);
    return Monomial(std::move(factors));
}

MultigradedPolynomial depolarize(const MultigradedPolynomial& p, const PolarizationMap& map) {
    MultigradedPolynomial out;
    for (const auto& [key, c] : p.terms()) out.add(depolarize(key.multidegree, map), key.t_degree, c);
    return out;
}

} // namespace poincare
