#include "doctest.h"

#include <algorithm>
#include <array>
#include <numeric>

#include "oracle.hpp"
#include "poincare/denominator.hpp"
#include "poincare/lcm_lattice.hpp"
#include "poincare/polarization.hpp"
#include "random_inputs.hpp"

using namespace poincare;
using poincare::testing::Rng;
using poincare::testing::uniform;

namespace {

const FieldChar q = FieldChar(0);

struct Ring {
    VariablePool pool;
    std::vector<Monomial> parse(std::initializer_list<std::string_view> texts) {
        std::vector<Monomial> out;
        for (auto t : texts) out.push_back(parse_monomial(t, pool));
        return out;
    }
    std::string show(const MultigradedPolynomial& p) const { return format_polynomial(p, pool); }
};

bool all_saturated_connected(const std::vector<Monomial>& m) {
    const auto lattice = build_lattice(polarize(minimalize(m)).monomials);
    for (const auto& s : saturated_subsets(lattice))
        if (!is_connected(lattice, s)) return false;
    return true;
}

Monomial permuted(const Monomial& m, const std::vector<VarIndex>& perm) {
    std::vector<Monomial::Factor> f;
    for (auto [v, e] : m.factors()) f.emplace_back(perm[v], e);
    return Monomial(std::move(f));
}

} // namespace

TEST_CASE("denominator of x^2, xy, yz") {
    Ring r;
    const auto m = r.parse({"x^2", "x*y", "y*z"});
    const auto b = denominator(m, q);
    CHECK(r.show(b) == "1 - x^2*ZZ^2 - x*y*ZZ^2 - y*z*ZZ^2 - x^2*y*ZZ^3 - x*y*z*ZZ^3");
    CHECK(format_polynomial(specialize_ungraded(b)) == "1 - 3*ZZ^2 - 2*ZZ^3");
    CHECK(denominator(m, FieldChar(2)) == b);
}

TEST_CASE("hypersurface denominator") {
    Ring r;
    const auto b = denominator(r.parse({"x*y"}), q);
    CHECK(r.show(b) == "1 - x*y*ZZ^2");
    CHECK(format_polynomial(specialize_ungraded(b)) == "1 - ZZ^2");
    CHECK(format_polynomial(specialize_ungraded(MultigradedPolynomial::one())) == "1");
}

TEST_CASE("denominator minimalizes its input") {
    Ring r;
    CHECK(denominator(r.parse({"x^2", "x*y", "y*z", "x^2*y", "x*y"}), q) == denominator(r.parse({"x^2", "x*y", "y*z"}), q));
}

TEST_CASE("denominator rejects the unit monomial and empty input") {
    CHECK_THROWS_AS(denominator({}, q), std::invalid_argument);
    CHECK_THROWS_AS(denominator({Monomial{}}, q), std::invalid_argument);
}

TEST_CASE("p_alpha and deviations on the polarized example") {
    const VarIndex x = 0, y = 1, z = 2, x2 = 3;
    const Monomial xx2{{x, 1}, {x2, 1}}, xy{{x, 1}, {y, 1}}, yz{{y, 1}, {z, 1}};
    const auto lattice = build_lattice({xx2, xy, yz});

    const auto single = *lattice.find(xy);
    CHECK(p_alpha(lattice, single, q) == TPolynomial::monomial(2));
    CHECK(deviations(lattice, single, q) == std::map<int, std::uint64_t>{{2, 1}});

    const auto pair = *lattice.find(lcm(xx2, xy));
    CHECK(p_alpha(lattice, pair, q) == TPolynomial::monomial(3));
    CHECK(deviations(lattice, pair, q) == std::map<int, std::uint64_t>{{3, 1}});

    CHECK(p_alpha(lattice, lattice.top(), q) == TPolynomial::monomial(4));
    CHECK(deviations(lattice, lattice.top(), q) == std::map<int, std::uint64_t>{{4, 1}});

    const auto connected_pair = *lattice.find(lcm(xy, yz));
    CHECK(p_alpha(lattice, connected_pair, q) == TPolynomial::monomial(3));

    CHECK_THROWS_AS(p_alpha(lattice, lattice.bottom(), q), std::invalid_argument);
    CHECK_THROWS_AS(deviations(lattice, lattice.bottom(), q), std::invalid_argument);
}

TEST_CASE("saturated-subset form") {
    Ring r;
    CHECK(r.show(denominator_saturated(r.parse({"x*y"}), q)) == "1 - x*y*ZZ^2");
    const auto path = r.parse({"x*y", "y*z"});
    CHECK(r.show(denominator_saturated(path, q)) == "1 - x*y*ZZ^2 - y*z*ZZ^2 - x*y*z*ZZ^3");
    CHECK(denominator_saturated(path, q) == denominator(path, q));

    const auto example = r.parse({"x^2", "x*y", "y*z"});
    const auto literal = denominator_saturated(example, q);
    const auto product = denominator(example, q);
    MultigradedPolynomial extra;
    extra.add(parse_monomial("x^2*y*z", r.pool), 4, -1);
    CHECK(literal == product + extra);
}

TEST_CASE("poincare series assembly") {
    Ring r;
    const auto s = poincare_series(r.parse({"x*y"}), q);
    CHECK(r.show(s.numerator) == "1 + x*ZZ + y*ZZ + x*y*ZZ^2");
    CHECK(r.show(s.denominator) == "1 - x*y*ZZ^2");

    const auto e = poincare_series(r.parse({"x^2", "x*y", "y*z"}), q);
    CHECK(e.numerator.term_count() == 8);
    CHECK(format_polynomial(specialize_ungraded(e.numerator)) == "1 + 3*ZZ + 3*ZZ^2 + ZZ^3");
    CHECK(format_polynomial(specialize_ungraded(e.denominator)) == "1 - 3*ZZ^2 - 2*ZZ^3");
}

TEST_CASE("thread count does not change the result") {
    Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const auto m = poincare::testing::random_antichain(rng, 6, 7, 2);
        const auto serial = denominator(m, q, 1);
        CHECK(denominator(m, q, 3) == serial);
        CHECK(denominator(m, q, 0) == serial);
    }
}

TEST_CASE("denominator properties on random antichains") {
    Rng rng(77);
    int compared_forms = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const bool squarefree = trial % 2 == 0;
        const auto m = poincare::testing::random_antichain(rng, 6, 6, squarefree ? 1 : 3);
        const std::uint32_t p = std::array<std::uint32_t, 3>{0, 2, 3}[trial % 3];
        const auto b = denominator(m, FieldChar(p));
        CHECK(b.constant_term() == 1);
        CHECK(b == oracle::naive_denominator(m, p));
        if (squarefree) {
            for (const auto& [key, c] : b.terms()) CHECK(key.multidegree.is_squarefree());
            CHECK(specialize_ungraded(b).max_degree() <= static_cast<int>(2 * m.size()));
        }

        std::vector<VarIndex> perm(6);
        std::iota(perm.begin(), perm.end(), VarIndex{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Monomial> renamed;
        for (const auto& g : m) renamed.push_back(permuted(g, perm));
        const auto br = denominator(renamed, FieldChar(p));
        CHECK(specialize_ungraded(br) == specialize_ungraded(b));
        MultigradedPolynomial mapped;
        for (const auto& [key, c] : b.terms()) mapped.add(permuted(key.multidegree, perm), key.t_degree, c);
        CHECK(br == mapped);

        if (all_saturated_connected(m)) {
            ++compared_forms;
            CHECK(denominator_saturated(m, FieldChar(p)) == b);
        }
    }
    CHECK(compared_forms > 10);
}

TEST_CASE("isomorphic po-graphs give equal ungraded denominators") {
    Ring r;
    const auto first = specialize_ungraded(denominator(r.parse({"a*b", "b*c"}), q));
    const auto second = specialize_ungraded(denominator(r.parse({"x*y", "y*z"}), q));
    CHECK(first == second);
    CHECK(format_polynomial(first) == "1 - 2*ZZ^2 - ZZ^3");
}
