#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "poincare/bitset.hpp"
#include "poincare/monomial.hpp"

namespace poincare {

using NodeId = std::size_t;

/// The po-graph L_M of a squarefree antichain M: every lcm of a subset of M,
/// ordered by divisibility, with edges between nodes sharing a variable.
///
/// Generator subsets are BitSets over generator positions; monomial supports
/// are BitSets over variable indices. Nodes are sorted in the canonical
/// graded order, so node 0 is always 1 and the last node is m_M. The order
/// and edge relations are answered on demand rather than materialized.
class LcmLattice {
public:
    /// Throws std::invalid_argument for an empty set, the unit monomial,
    /// non-squarefree input, or a set that is not an antichain.
    explicit LcmLattice(std::vector<Monomial> generators);

    std::size_t generator_count() const noexcept { return generators_.size(); }
    const std::vector<Monomial>& generators() const noexcept { return generators_; }
    const BitSet& generator_support(std::size_t g) const { return generator_supports_.at(g); }
    bool generators_adjacent(std::size_t g, std::size_t h) const { return generator_adjacency_[g].test(h); }
    /// Generators sharing a variable with g (g itself excluded).
    const BitSet& generator_neighbours(std::size_t g) const { return generator_adjacency_.at(g); }

    std::size_t node_count() const noexcept { return node_supports_.size(); }
    Monomial node(NodeId id) const;
    const BitSet& node_support(NodeId id) const { return node_supports_.at(id); }
    /// The generators dividing the node, M_{x^alpha}.
    const BitSet& divisor_set(NodeId id) const { return divisor_sets_.at(id); }
    NodeId bottom() const noexcept { return 0; }
    NodeId top() const noexcept { return node_count() - 1; }
    std::optional<NodeId> find(const Monomial& m) const;

    /// Divisibility order: node a divides node b.
    bool precedes(NodeId a, NodeId b) const;
    /// Common-factor edge. The bottom node carries no edges.
    bool adjacent(NodeId a, NodeId b) const;
    std::size_t edge_count() const;

    BitSet empty_subset() const { return BitSet(generator_count()); }
    BitSet full_subset() const;
    /// Support of m_S for a generator subset S.
    BitSet lcm_support(const BitSet& subset) const;
    Monomial lcm_of(const BitSet& subset) const;
    /// Generators whose support lies inside `support`.
    BitSet generators_dividing(const BitSet& support) const;

    std::size_t variable_space() const noexcept { return variable_space_; }

private:
    Monomial support_to_monomial(const BitSet& support) const;
    BitSet monomial_to_support(const Monomial& m) const;

    std::vector<Monomial> generators_;
    std::size_t variable_space_ = 0;
    std::vector<BitSet> generator_supports_;
    std::vector<BitSet> generator_adjacency_;
    std::vector<BitSet> node_supports_;
    std::vector<BitSet> divisor_sets_;
    std::unordered_map<BitSet, NodeId> node_index_;
};

LcmLattice build_lattice(const std::vector<Monomial>& generators);

/// Connected components of a generator subset under the common-factor graph.
struct SubsetPartition {
    std::vector<BitSet> blocks;
    std::size_t size() const noexcept { return blocks.size(); }
};

SubsetPartition components(const LcmLattice& lattice, const BitSet& subset);
bool is_connected(const LcmLattice& lattice, const BitSet& subset);

/// Union over the components C of S of the generators dividing m_C.
BitSet saturation(const LcmLattice& lattice, const BitSet& subset);

inline constexpr std::size_t max_saturated_enumeration = 24;

/// All nonempty saturated subsets, in increasing bitmask order.
/// Throws std::length_error above max_saturated_enumeration generators.
std::vector<BitSet> saturated_subsets(const LcmLattice& lattice);

} // namespace poincare
