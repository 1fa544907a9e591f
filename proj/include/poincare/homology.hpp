#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "poincare/polynomial.hpp"
#include "poincare/simplicial.hpp"

namespace poincare {

/// Field characteristic: 0 for the rationals, otherwise a prime below 2^31.
class FieldChar {
public:
    static constexpr std::uint64_t max_prime_exclusive = std::uint64_t{1} << 31;

    constexpr FieldChar() = default;
    /// Throws std::invalid_argument unless p is 0 or a prime below 2^31.
    explicit FieldChar(std::uint64_t p);

    static FieldChar rationals() { return FieldChar(); }

    std::uint32_t value() const noexcept { return p_; }
    bool is_zero() const noexcept { return p_ == 0; }

    friend bool operator==(FieldChar, FieldChar) = default;

private:
    std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// Sparse column-major matrix with entries in {0, +1, -1}.
class BoundaryMatrix {
public:
    struct Entry {
        std::size_t row;
        std::int8_t value;
        friend bool operator==(const Entry&, const Entry&) = default;
    };
    using Column = std::vector<Entry>;

    BoundaryMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

    /// Row-major dense input; every entry must lie in {-1, 0, 1}.
    static BoundaryMatrix from_dense(const std::vector<std::vector<int>>& dense);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return columns_.size(); }
    const Column& column(std::size_t c) const { return columns_.at(c); }
    /// Entries must be appended in increasing row order.
    void push(std::size_t col, std::size_t row, int value);
    int at(std::size_t row, std::size_t col) const;
    std::size_t nonzeros() const;
    std::vector<std::vector<int>> dense() const;

private:
    std::size_t rows_;
    std::vector<Column> columns_;
};

/// The augmented differential from i-faces to (i-1)-faces, faces ordered
/// lexicographically. Removing the j-th smallest vertex carries sign (-1)^j;
/// for i = 0 every vertex maps to the empty face with +1.
BoundaryMatrix boundary_matrix(const SimplicialComplex& complex, int degree);

enum class RankMethod { automatic, dense, sparse };

/// Product rows*cols up to which the automatic method densifies.
inline constexpr std::size_t dense_rank_threshold = std::size_t{1} << 18;

/// Exact rank over GF(p), or over the rationals for characteristic 0.
std::size_t rank(const BoundaryMatrix& matrix, FieldChar characteristic,
                 RankMethod method = RankMethod::automatic);

/// Dimensions of reduced homology by degree d >= -1. Only nonzero
/// dimensions are stored.
class HomologySeries {
public:
    HomologySeries() = default;
    explicit HomologySeries(std::map<int, std::uint64_t> dims);

    std::uint64_t dim(int degree) const;
    bool is_zero() const noexcept { return dims_.empty(); }
    const std::map<int, std::uint64_t>& dims() const noexcept { return dims_; }
    /// Generating function sum_d dim_d t^d, including the t^-1 term.
    TPolynomial generating_function() const;

    friend bool operator==(const HomologySeries&, const HomologySeries&) = default;

private:
    std::map<int, std::uint64_t> dims_;
};

/// Throws std::invalid_argument for the void complex.
HomologySeries reduced_homology(const SimplicialComplex& complex, FieldChar characteristic);

/// "0", or terms like "ZZ^-1 + 2 + ZZ + 3*ZZ^2" in ascending degree.
std::string format_series(const HomologySeries& series,
                          std::string_view variable = default_homology_variable);

} // namespace poincare
