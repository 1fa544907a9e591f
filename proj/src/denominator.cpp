#include "poincare/denominator.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "poincare/polarization.hpp"
#include "poincare/simplicial.hpp"

namespace poincare {

namespace {

void check_generators(const std::vector<Monomial>& monomials) {
    if (monomials.empty()) throw std::invalid_argument("the monomial set is empty");
    for (const auto& m : monomials)
        if (m.is_one()) throw std::invalid_argument("the unit monomial cannot be a generator");
}

// Squarefree polynomial in polarized coordinates: support bitset and t-degree.
using SquarefreeTerms = std::map<std::pair<BitSet, int>, std::int64_t>;

void accumulate(SquarefreeTerms& terms, const BitSet& support, int t_degree, std::int64_t c) {
    if (c == 0) return;
    auto [it, inserted] = terms.try_emplace({support, t_degree}, 0);
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms.erase(it);
}

MultigradedPolynomial to_polynomial(const SquarefreeTerms& terms) {
    MultigradedPolynomial out;
    for (const auto& [key, c] : terms) {
        std::vector<Monomial::Factor> factors;
        key.first.for_each([&](std::size_t v) { factors.emplace_back(static_cast<VarIndex>(v), 1); });
        out.add(Monomial(std::move(factors)), key.second, c);
    }
    return out;
}

template <class F>
void parallel_for(std::size_t count, unsigned threads, F&& body) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < threads; ++w) {
        workers.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < count;) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    next = count;
                }
            }
        });
    }
    workers.clear();
    if (failure) std::rethrow_exception(failure);
}

} // namespace

TPolynomial p_alpha(const LcmLattice& lattice, NodeId node, FieldChar characteristic) {
    if (node == lattice.bottom()) throw std::invalid_argument("p_alpha is undefined at the bottom node 1");
    // A disconnected divisor set is itself a face, so Δ is a full simplex.
    if (!is_connected(lattice, lattice.divisor_set(node))) return {};
    auto series = reduced_homology(berglund_complex(lattice, node), characteristic);
    return series.generating_function().shifted(3);
}

std::map<int, std::uint64_t> deviations(const LcmLattice& lattice, NodeId node, FieldChar characteristic) {
    if (node == lattice.bottom()) throw std::invalid_argument("deviations are undefined at the bottom node 1");
    auto series = reduced_homology(berglund_complex(lattice, node), characteristic);
    std::map<int, std::uint64_t> out;
    for (auto [d, n] : series.dims()) out.emplace(d + 3, n);
    return out;
}

MultigradedPolynomial denominator(const std::vector<Monomial>& monomials, FieldChar characteristic,
                                  unsigned threads) {
    check_generators(monomials);
    const auto polarized = polarize(minimalize(monomials));
    const LcmLattice lattice(polarized.monomials);

    std::vector<TPolynomial> factors(lattice.node_count());
    parallel_for(lattice.node_count() - 1, threads,
                 [&](std::size_t i) { factors[i + 1] = p_alpha(lattice, i + 1, characteristic); });

    SquarefreeTerms product;
    accumulate(product, BitSet(lattice.variable_space()), 0, 1);
    for (NodeId node = 1; node < lattice.node_count(); ++node) {
        if (factors[node].is_zero()) continue;
        const BitSet& alpha = lattice.node_support(node);
        SquarefreeTerms next = product;
        for (const auto& [key, c] : product) {
            if (key.first.intersects(alpha)) continue; // x_i^2 = 0
            const BitSet support = key.first | alpha;
            for (auto [d, pc] : factors[node].terms())
                accumulate(next, support, key.second + d, -checked_mul(c, pc));
        }
        product = std::move(next);
    }
    return depolarize(to_polynomial(product), polarized.map);
}

MultigradedPolynomial denominator_saturated(const std::vector<Monomial>& monomials, FieldChar characteristic) {
    check_generators(monomials);
    const auto polarized = polarize(minimalize(monomials));
    const LcmLattice lattice(polarized.monomials);

    SquarefreeTerms sum;
    accumulate(sum, BitSet(lattice.variable_space()), 0, 1);
    for (const auto& subset : saturated_subsets(lattice)) {
        const auto c = static_cast<int>(components(lattice, subset).size());
        std::vector<Monomial> local;
        subset.for_each([&](std::size_t g) { local.push_back(lattice.generators()[g]); });
        const auto series = reduced_homology(berglund_complex(local), characteristic);
        const std::int64_t sign = (c % 2 == 0) ? 1 : -1; // (-1)^{c+2}
        const BitSet support = lattice.lcm_support(subset);
        for (auto [d, n] : series.dims())
            accumulate(sum, support, c + 2 + d, sign * static_cast<std::int64_t>(n));
    }
    return depolarize(to_polynomial(sum), polarized.map);
}

TPolynomial specialize_ungraded(const MultigradedPolynomial& p) {
    TPolynomial out;
    for (const auto& [key, c] : p.terms()) out.add(key.t_degree, c);
    return out;
}

PoincareSeries poincare_series(const std::vector<Monomial>& monomials, FieldChar characteristic) {
    PoincareSeries series;
    series.denominator = denominator(monomials, characteristic);

    std::set<VarIndex> variables;
    for (const auto& m : monomials)
        for (auto v : m.support()) variables.insert(v);
    series.numerator = MultigradedPolynomial::one();
    for (auto v : variables) {
        MultigradedPolynomial factor = MultigradedPolynomial::one();
        factor.add(Monomial::variable(v), 1, 1);
        series.numerator = series.numerator * factor;
    }
    return series;
}

} // namespace poincare
