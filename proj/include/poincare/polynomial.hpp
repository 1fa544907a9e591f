#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "poincare/monomial.hpp"

namespace poincare {

inline constexpr std::string_view default_homology_variable = "ZZ";

/// Laurent polynomial in the homological variable t with integer
/// coefficients. Zero coefficients are never stored.
class TPolynomial {
public:
    TPolynomial() = default;
    TPolynomial(std::initializer_list<std::pair<const int, std::int64_t>> terms);

    static TPolynomial monomial(int degree, std::int64_t coefficient = 1);

    std::int64_t coefficient(int degree) const;
    void add(int degree, std::int64_t coefficient);
    bool is_zero() const noexcept { return coeffs_.empty(); }
    int min_degree() const;
    int max_degree() const;
    const std::map<int, std::int64_t>& terms() const noexcept { return coeffs_; }

    /// Multiplies by t^k.
    TPolynomial shifted(int k) const;
    /// Substitutes t -> 1/t.
    TPolynomial reflected() const;

    TPolynomial operator+(const TPolynomial& o) const;
    TPolynomial operator-(const TPolynomial& o) const;
    TPolynomial operator*(const TPolynomial& o) const;

    friend bool operator==(const TPolynomial&, const TPolynomial&) = default;

private:
    std::map<int, std::int64_t> coeffs_;
};

/// A multidegree together with a t-degree.
struct TermKey {
    Monomial multidegree;
    int t_degree = 0;

    friend bool operator==(const TermKey&, const TermKey&) = default;
};

/// Ascending t-degree, then graded_lex_before on the multidegree.
struct CanonicalTermOrder {
    bool operator()(const TermKey& a, const TermKey& b) const {
        if (a.t_degree != b.t_degree) return a.t_degree < b.t_degree;
        return graded_lex_before(a.multidegree, b.multidegree);
    }
};

/// Integer polynomial in ring variables and t, kept in canonical print order.
class MultigradedPolynomial {
public:
    using Terms = std::map<TermKey, std::int64_t, CanonicalTermOrder>;

    MultigradedPolynomial() = default;

    static MultigradedPolynomial one();

    void add(const Monomial& multidegree, int t_degree, std::int64_t coefficient);
    std::int64_t coefficient(const Monomial& multidegree, int t_degree) const;
    std::int64_t constant_term() const { return coefficient(Monomial{}, 0); }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }
    const Terms& terms() const noexcept { return terms_; }

    /// Highest t-degree present; 0 for the zero polynomial.
    int t_degree() const;

    MultigradedPolynomial operator+(const MultigradedPolynomial& o) const;
    MultigradedPolynomial operator*(const MultigradedPolynomial& o) const;

    friend bool operator==(const MultigradedPolynomial&, const MultigradedPolynomial&) = default;

private:
    Terms terms_;
};

/// Checked 64-bit helpers; throw std::overflow_error.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// "1 - 3*ZZ^2 - 2*ZZ^3"; "0" for the zero polynomial.
std::string format_polynomial(const TPolynomial& p,
                              std::string_view variable = default_homology_variable);
/// "1 - x^2*ZZ^2 - x*y*ZZ^2"; ring variables first, homology variable last.
std::string format_polynomial(const MultigradedPolynomial& p, const VariableNamer& name,
                              std::string_view variable = default_homology_variable);
std::string format_polynomial(const MultigradedPolynomial& p, const VariablePool& pool,
                              std::string_view variable = default_homology_variable);

} // namespace poincare
