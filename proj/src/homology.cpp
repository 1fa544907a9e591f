#include "poincare/homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace poincare {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

FieldChar::FieldChar(std::uint64_t p) {
    if (p != 0 && !is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime or zero");
    if (p >= max_prime_exclusive) throw std::invalid_argument("characteristic must be below 2^31");
    p_ = static_cast<std::uint32_t>(p);
}

BoundaryMatrix BoundaryMatrix::from_dense(const std::vector<std::vector<int>>& dense) {
    const std::size_t rows = dense.size();
    const std::size_t cols = rows ? dense[0].size() : 0;
    BoundaryMatrix m(rows, cols);
    for (std::size_t c = 0; c < cols; ++c)
        for (std::size_t r = 0; r < rows; ++r) {
            if (dense[r].size() != cols) throw std::invalid_argument("ragged matrix");
            if (dense[r][c] != 0) m.push(c, r, dense[r][c]);
        }
    return m;
}

void BoundaryMatrix::push(std::size_t col, std::size_t row, int value) {
    if (value < -1 || value > 1) throw std::invalid_argument("entries must lie in {0, +1, -1}");
    if (row >= rows_) throw std::out_of_range("row out of range");
    auto& column = columns_.at(col);
    if (!column.empty() && column.back().row >= row) throw std::invalid_argument("entries must be pushed in row order");
    if (value != 0) column.push_back({row, static_cast<std::int8_t>(value)});
}

int BoundaryMatrix::at(std::size_t row, std::size_t col) const {
    for (const auto& e : columns_.at(col))
        if (e.row == row) return e.value;
    return 0;
}

std::size_t BoundaryMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
}

std::vector<std::vector<int>> BoundaryMatrix::dense() const {
    std::vector<std::vector<int>> out(rows_, std::vector<int>(cols(), 0));
    for (std::size_t c = 0; c < cols(); ++c)
        for (const auto& e : columns_[c]) out[e.row][c] = e.value;
    return out;
}

BoundaryMatrix boundary_matrix(const SimplicialComplex& complex, int degree) {
    if (complex.is_void()) throw std::invalid_argument("boundary of the void complex");
    if (degree < 0) throw std::invalid_argument("boundary degree must be nonnegative");
    const auto cardinality = static_cast<std::size_t>(degree) + 1;
    const auto& sources = complex.faces_of_size(cardinality);
    const auto& targets = complex.faces_of_size(cardinality - 1);

    BoundaryMatrix m(targets.size(), sources.size());
    std::vector<std::pair<std::size_t, int>> entries;
    for (std::size_t c = 0; c < sources.size(); ++c) {
        entries.clear();
        int sign = 1;
        for (std::size_t v : face_vertices(sources[c])) {
            FaceMask facet = sources[c] & ~(FaceMask{1} << v);
            auto it = std::lower_bound(targets.begin(), targets.end(), facet, face_lex_less);
            entries.emplace_back(static_cast<std::size_t>(it - targets.begin()), sign);
            sign = -sign;
        }
        std::sort(entries.begin(), entries.end());
        for (auto [row, value] : entries) m.push(c, row, value);
    }
    return m;
}

HomologySeries::HomologySeries(std::map<int, std::uint64_t> dims) {
    for (auto [d, n] : dims)
        if (n != 0) dims_.emplace(d, n);
}

std::uint64_t HomologySeries::dim(int degree) const {
    auto it = dims_.find(degree);
    return it == dims_.end() ? 0 : it->second;
}

TPolynomial HomologySeries::generating_function() const {
    TPolynomial p;
    for (auto [d, n] : dims_) p.add(d, static_cast<std::int64_t>(n));
    return p;
}

HomologySeries reduced_homology(const SimplicialComplex& complex, FieldChar characteristic) {
    if (complex.is_void()) throw std::invalid_argument("reduced homology of the void complex is undefined");
    const int top = complex.dimension();

    // ranks[i] = rank of the boundary map from i-faces; ranks[top + 1] = 0.
    std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 2), 0);
    for (int i = 0; i <= top; ++i) ranks[i] = rank(boundary_matrix(complex, i), characteristic);

    std::map<int, std::uint64_t> dims;
    dims[-1] = 1 - ranks[0];
    for (int d = 0; d <= top; ++d) dims[d] = complex.face_count(d) - ranks[d] - ranks[d + 1];
    return HomologySeries(std::move(dims));
}

std::string format_series(const HomologySeries& series, std::string_view variable) {
    return format_polynomial(series.generating_function(), variable);
}

} // namespace poincare
