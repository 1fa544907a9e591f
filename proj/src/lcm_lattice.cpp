#include "poincare/lcm_lattice.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "poincare/union_find.hpp"

namespace poincare {

LcmLattice::LcmLattice(std::vector<Monomial> generators) : generators_(std::move(generators)) {
    if (generators_.empty()) throw std::invalid_argument("lattice needs at least one generator");
    for (const auto& g : generators_) {
        if (g.is_one()) throw std::invalid_argument("the unit monomial cannot be a generator");
        if (!g.is_squarefree()) throw std::invalid_argument("lattice generators must be squarefree; polarize first");
        variable_space_ = std::max<std::size_t>(variable_space_, g.factors().back().first + 1);
    }

    const std::size_t n = generators_.size();
    for (const auto& g : generators_) generator_supports_.push_back(monomial_to_support(g));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && generator_supports_[i].is_subset_of(generator_supports_[j]))
                throw std::invalid_argument("lattice generators must form an antichain");

    generator_adjacency_.assign(n, BitSet(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (generator_supports_[i].intersects(generator_supports_[j])) {
                generator_adjacency_[i].set(j);
                generator_adjacency_[j].set(i);
            }

    // Closure of {1} under lcm with single generators reaches every m_S.
    std::unordered_set<BitSet> seen;
    std::deque<BitSet> queue;
    BitSet one(variable_space_);
    seen.insert(one);
    queue.push_back(one);
    while (!queue.empty()) {
        BitSet current = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : generator_supports_) {
            if (g.is_subset_of(current)) continue;
            BitSet next = current | g;
            if (seen.insert(next).second) queue.push_back(std::move(next));
        }
    }

    std::vector<std::pair<Monomial, BitSet>> nodes;
    nodes.reserve(seen.size());
    for (const auto& support : seen) nodes.emplace_back(support_to_monomial(support), support);
    std::sort(nodes.begin(), nodes.end(),
              [](const auto& a, const auto& b) { return graded_lex_before(a.first, b.first); });

    for (auto& [m, support] : nodes) {
        node_index_.emplace(support, node_supports_.size());
        divisor_sets_.push_back(generators_dividing(support));
        node_supports_.push_back(std::move(support));
    }
}

Monomial LcmLattice::support_to_monomial(const BitSet& support) const {
    std::vector<Monomial::Factor> factors;
    support.for_each([&](std::size_t v) { factors.emplace_back(static_cast<VarIndex>(v), 1); });
    return Monomial(std::move(factors));
}

BitSet LcmLattice::monomial_to_support(const Monomial& m) const {
    BitSet s(variable_space_);
    for (auto [v, e] : m.factors()) s.set(v);
    return s;
}

Monomial LcmLattice::node(NodeId id) const { return support_to_monomial(node_supports_.at(id)); }

std::optional<NodeId> LcmLattice::find(const Monomial& m) const {
    if (!m.is_squarefree()) return std::nullopt;
    if (!m.is_one() && m.factors().back().first >= variable_space_) return std::nullopt;
    auto it = node_index_.find(monomial_to_support(m));
    if (it == node_index_.end()) return std::nullopt;
    return it->second;
}

bool LcmLattice::precedes(NodeId a, NodeId b) const {
    return node_supports_.at(a).is_subset_of(node_supports_.at(b));
}

bool LcmLattice::adjacent(NodeId a, NodeId b) const {
    if (a == b || a == bottom() || b == bottom()) return false;
    return node_supports_.at(a).intersects(node_supports_.at(b));
}

std::size_t LcmLattice::edge_count() const {
    std::size_t edges = 0;
    for (NodeId a = 1; a < node_count(); ++a)
        for (NodeId b = a + 1; b < node_count(); ++b)
            if (node_supports_[a].intersects(node_supports_[b])) ++edges;
    return edges;
}

BitSet LcmLattice::full_subset() const {
    BitSet s(generator_count());
    for (std::size_t g = 0; g < generator_count(); ++g) s.set(g);
    return s;
}

BitSet LcmLattice::lcm_support(const BitSet& subset) const {
    BitSet support(variable_space_);
    subset.for_each([&](std::size_t g) { support |= generator_supports_[g]; });
    return support;
}

Monomial LcmLattice::lcm_of(const BitSet& subset) const { return support_to_monomial(lcm_support(subset)); }

BitSet LcmLattice::generators_dividing(const BitSet& support) const {
    BitSet out(generator_count());
    for (std::size_t g = 0; g < generator_count(); ++g)
        if (generator_supports_[g].is_subset_of(support)) out.set(g);
    return out;
}

LcmLattice build_lattice(const std::vector<Monomial>& generators) { return LcmLattice(generators); }

SubsetPartition components(const LcmLattice& lattice, const BitSet& subset) {
    const auto members = subset.indices();
    UnionFind uf(members.size());
    for (std::size_t a = 0; a < members.size(); ++a)
        for (std::size_t b = a + 1; b < members.size(); ++b)
            if (lattice.generators_adjacent(members[a], members[b])) uf.unite(a, b);

    SubsetPartition partition;
    std::vector<std::size_t> block_of_root(members.size(), members.size());
    for (std::size_t a = 0; a < members.size(); ++a) {
        auto root = uf.find(a);
        if (block_of_root[root] == members.size()) {
            block_of_root[root] = partition.blocks.size();
            partition.blocks.emplace_back(lattice.generator_count());
        }
        partition.blocks[block_of_root[root]].set(members[a]);
    }
    return partition;
}

bool is_connected(const LcmLattice& lattice, const BitSet& subset) {
    return components(lattice, subset).size() == 1;
}

BitSet saturation(const LcmLattice& lattice, const BitSet& subset) {
    BitSet out = lattice.empty_subset();
    for (const auto& block : components(lattice, subset).blocks)
        out |= lattice.generators_dividing(lattice.lcm_support(block));
    return out;
}

std::vector<BitSet> saturated_subsets(const LcmLattice& lattice) {
    const std::size_t n = lattice.generator_count();
    if (n > max_saturated_enumeration)
        throw std::length_error("saturated subset enumeration is limited to " +
                                std::to_string(max_saturated_enumeration) + " generators");
    std::vector<BitSet> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        BitSet s(n);
        for (std::size_t g = 0; g < n; ++g)
            if ((mask >> g) & 1) s.set(g);
        if (saturation(lattice, s) == s) out.push_back(std::move(s));
    }
    return out;
}

} // namespace poincare
