// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>

#include "oracle.hpp"
#include "poincare/denominator.hpp"
#include "poincare/homology.hpp"
#include "poincare/session.hpp"
#include "poincare/simplicial.hpp"
#include "random_inputs.hpp"

using namespace poincare;
using poincare::testing::Rng;
using poincare::testing::uniform;

namespace {

// Time limits in seconds.
constexpr double limit_projective_plane = 1.0;
constexpr double limit_paper_denominator = 1.0;
constexpr double limit_transcript = 2.0;
constexpr double limit_oracle = 60.0;
constexpr double limit_properties = 30.0;
constexpr double limit_degree_bound = 30.0;
constexpr double limit_invariance = 5.0;

constexpr std::uint64_t seed = 20040101;

struct Outcome {
    bool ok = true;
    std::string detail;
    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

SimplicialComplex projective_plane() {
    return from_facets(6, {{0, 1, 4}, {0, 1, 5}, {0, 2, 3}, {0, 2, 5}, {0, 3, 4},
                           {1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {2, 4, 5}, {3, 4, 5}});
}

Outcome projective_plane_homology() {
    Outcome o;
    const auto rp2 = projective_plane();
    const auto over_q = format_series(reduced_homology(rp2, FieldChar(0)));
    const auto over_2 = format_series(reduced_homology(rp2, FieldChar(2)));
    if (over_q != "0") o.fail("char 0 gave '" + over_q + "'");
    if (over_2 != "ZZ + ZZ^2") o.fail("char 2 gave '" + over_2 + "'");
    return o;
}

Outcome paper_denominator() {
    Outcome o;
    VariablePool pool;
    std::vector<Monomial> m;
    for (auto t : {"x^2", "x*y", "y*z"}) m.push_back(parse_monomial(t, pool));
    const auto b = denominator(m, FieldChar(0));
    const auto graded = format_polynomial(b, pool);
    const auto ungraded = format_polynomial(specialize_ungraded(b));
    if (graded != "1 - x^2*ZZ^2 - x*y*ZZ^2 - y*z*ZZ^2 - x^2*y*ZZ^3 - x*y*z*ZZ^3")
        o.fail("multigraded '" + graded + "'");
    if (ungraded != "1 - 3*ZZ^2 - 2*ZZ^3") o.fail("ungraded '" + ungraded + "'");
    return o;
}

Outcome transcript_replay() {
    Outcome o;
    const std::string script =
        "add simplex a*b*e a*b*f a*c*d a*c*f a*d*e\n"
        "add simplex b*c*d b*c*e b*d*f c*e*f d*e*f\n"
        "homology\n"
        "char 2\n"
        "homology\n"
        "add monomial x^2 x*y y*z\n"
        "char 0\n"
        "denom\n"
        "set multigrade false\n"
        "denom\n"
        "quit\n";
    const std::string expected =
        "Calculating homology ranks...\n"
        "*****  Hilbert series of simplicial homology *****\n"
        "0\n"
        "New characteristic: 2\n"
        "Calculating homology ranks...\n"
        "*****  Hilbert series of simplicial homology *****\n"
        "ZZ + ZZ^2\n"
        "New characteristic: 0\n"
        "1 - x^2*ZZ^2 - x*y*ZZ^2 - y*z*ZZ^2 - x^2*y*ZZ^3 - x*y*z*ZZ^3\n"
        "1 - 3*ZZ^2 - 2*ZZ^3\n"
        "\n"
        "Thanks for visiting.\n";
    std::istringstream in(script);
    std::ostringstream out;
    const int status = run_batch(in, out, true);
    if (status != 0) o.fail("exit status " + std::to_string(status));
    if (out.str() != expected) o.fail("transcript differs:\n" + out.str());
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    Rng rng(seed);
    const std::array<std::uint32_t, 4> rank_chars{0, 2, 3, 5};
    for (int i = 0; i < 500; ++i) {
        const auto rows = uniform(rng, 1, 30), cols = uniform(rng, 1, 30);
        const auto dense = poincare::testing::random_sign_matrix(rng, rows, cols);
        const auto p = rank_chars[static_cast<std::size_t>(i) % rank_chars.size()];
        const auto m = BoundaryMatrix::from_dense(dense);
        const auto expected = oracle::naive_rank(dense, p);
        if (rank(m, FieldChar(p)) != expected || rank(m, FieldChar(p), RankMethod::sparse) != expected)
            o.fail("rank mismatch in case " + std::to_string(i));
    }
    for (int i = 0; i < 200; ++i) {
        const auto m = poincare::testing::random_antichain(rng, uniform(rng, 2, 8), 10, uniform(rng, 1, 3));
        if (!berglund_complex(m).same_faces(oracle::naive_berglund(m)))
            o.fail("Berglund complex mismatch in case " + std::to_string(i));
    }
    const std::array<std::uint32_t, 3> denominator_chars{0, 2, 3};
    for (int i = 0; i < 100; ++i) {
        const auto m = poincare::testing::random_antichain(rng, 6, 6, uniform(rng, 1, 3));
        const auto p = denominator_chars[static_cast<std::size_t>(i) % denominator_chars.size()];
        if (denominator(m, FieldChar(p)) != oracle::naive_denominator(m, p))
            o.fail("denominator mismatch in case " + std::to_string(i));
    }
    return o;
}

std::int64_t signed_dim(int d, std::uint64_t n) { return (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(n); }

Outcome property_suite() {
    Outcome o;
    Rng rng(seed + 1);
    for (int i = 0; i < 300; ++i) {
        const std::size_t n = uniform(rng, 0, 7);
        const auto k = poincare::testing::random_complex(rng, n);
        const auto dual = alexander_dual(k);
        const auto label = " in case " + std::to_string(i);

        if (!alexander_dual(dual).same_faces(k)) o.fail("dual is not an involution" + label);

        const auto other = poincare::testing::random_complex(rng, uniform(rng, 0, 5));
        const auto small = poincare::testing::random_complex(rng, std::min<std::size_t>(n, 5));
        if (!dual_join(small, other).same_faces(dual_join_via_duals(small, other)))
            o.fail("dual join formulas disagree" + label);

        const auto over_q = reduced_homology(k, FieldChar(0));
        for (std::uint32_t p : {0u, 2u, 3u, 5u}) {
            const auto h = reduced_homology(k, FieldChar(p));
            std::int64_t chi_faces = 0, chi_homology = 0;
            for (int d = -1; d <= k.dimension(); ++d) chi_faces += signed_dim(d, k.face_count(d));
            for (auto [d, dim] : h.dims()) chi_homology += signed_dim(d, dim);
            if (chi_faces != chi_homology) o.fail("Euler characteristic" + label);

            for (auto [d, dim] : over_q.dims())
                if (h.dim(d) < dim) o.fail("universal coefficient inequality" + label);

            if (!dual.is_void()) {
                const auto hd = reduced_homology(dual, FieldChar(p));
                for (int d = -1; d <= static_cast<int>(n); ++d)
                    if (h.dim(d) != hd.dim(static_cast<int>(n) - 3 - d)) o.fail("Alexander duality" + label);
            }
        }
    }
    return o;
}

Outcome degree_bound() {
    Outcome o;
    Rng rng(seed + 2);
    for (int i = 0; i < 100; ++i) {
        const auto m = poincare::testing::random_antichain(rng, 8, 6, 1);
        const auto b = specialize_ungraded(denominator(m, FieldChar(0)));
        if (b.max_degree() > static_cast<int>(2 * m.size()))
            o.fail("degree " + std::to_string(b.max_degree()) + " exceeds 2n in case " + std::to_string(i));
    }
    return o;
}

Outcome invariance() {
    Outcome o;
    VariablePool pool;
    auto parse = [&](std::initializer_list<std::string_view> texts) {
        std::vector<Monomial> out;
        for (auto t : texts) out.push_back(parse_monomial(t, pool));
        return out;
    };
    const auto first = specialize_ungraded(denominator(parse({"a*b", "b*c"}), FieldChar(0)));
    const auto second = specialize_ungraded(denominator(parse({"x*y", "y*z"}), FieldChar(0)));
    if (!(first == second)) o.fail("{ab, bc} and {xy, yz} differ");

    Rng rng(seed + 3);
    for (int i = 0; i < 50; ++i) {
        const auto m = poincare::testing::random_antichain(rng, 6, 6, uniform(rng, 1, 3));
        std::vector<VarIndex> perm(6);
        std::iota(perm.begin(), perm.end(), VarIndex{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Monomial> renamed;
        for (const auto& g : m) {
            std::vector<Monomial::Factor> f;
            for (auto [v, e] : g.factors()) f.emplace_back(perm[v], e);
            renamed.push_back(Monomial(std::move(f)));
        }
        std::shuffle(renamed.begin(), renamed.end(), rng);
        if (!(specialize_ungraded(denominator(m, FieldChar(0))) == specialize_ungraded(denominator(renamed, FieldChar(0)))))
            o.fail("permutation changed the denominator in case " + std::to_string(i));
    }
    return o;
}

struct Criterion {
    const char* name;
    double limit;
    std::function<Outcome()> run;
};

} // namespace

int main() {
    const std::array<Criterion, 7> criteria{{
        {"projective-plane homology", limit_projective_plane, projective_plane_homology},
        {"paper denominator", limit_paper_denominator, paper_denominator},
        {"transcript replay", limit_transcript, transcript_replay},
        {"oracle equivalence", limit_oracle, oracle_equivalence},
        {"property suite", limit_properties, property_suite},
        {"degree bound", limit_degree_bound, degree_bound},
        {"po-graph invariance", limit_invariance, invariance},
    }};
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.ok && seconds >= c.limit) o.fail("over the " + std::to_string(c.limit) + " s limit");
        std::printf("%s %zu %s (%.3f s)%s%s\n", o.ok ? "PASS" : "FAIL", i + 1, c.name, seconds,
                    o.ok ? "" : ": ", o.detail.c_str());
        if (!o.ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
