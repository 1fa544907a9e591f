// Exact rank of {0,±1} matrices.
//
// Prime fields use word-size modular elimination (p < 2^31, so products fit
// in 64 bits). Characteristic 0 uses fraction-free integer elimination:
// Bareiss on the dense form, content-normalized column reduction on the
// sparse form. Both integer paths first run on checked 64-bit integers and
// restart on GMP integers if an intermediate value overflows.

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "poincare/homology.hpp"

namespace poincare {

namespace {

struct Overflow {};

template <class T>
struct IntOps;

template <>
struct IntOps<std::int64_t> {
    static std::int64_t guard(std::int64_t r) {
        if (r == std::numeric_limits<std::int64_t>::min()) throw Overflow{};
        return r;
    }
    static std::int64_t mul(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
        return guard(r);
    }
    static std::int64_t sub(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
        return guard(r);
    }
    static std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
    static std::int64_t div(std::int64_t a, std::int64_t b) { return a / b; }
    static bool is_one(std::int64_t a) { return a == 1 || a == -1; }
};

template <>
struct IntOps<mpz_class> {
    static mpz_class mul(const mpz_class& a, const mpz_class& b) { return a * b; }
    static mpz_class sub(const mpz_class& a, const mpz_class& b) { return a - b; }
    static mpz_class gcd(const mpz_class& a, const mpz_class& b) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return g;
    }
    static mpz_class div(const mpz_class& a, const mpz_class& b) {
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    }
    static bool is_one(const mpz_class& a) { return a == 1 || a == -1; }
};

std::uint32_t reduce_mod(int v, std::uint32_t p) {
    long long r = v % static_cast<long long>(p);
    return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
    // Fermat: a^(p-2).
    std::uint64_t result = 1, base = a, e = p - 2;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

std::size_t dense_rank_mod_p(const BoundaryMatrix& m, std::uint32_t p) {
    // Eliminate on the orientation with fewer columns per row operation.
    const bool transpose = m.cols() > m.rows();
    const std::size_t rows = transpose ? m.cols() : m.rows();
    const std::size_t cols = transpose ? m.rows() : m.cols();
    std::vector<std::uint32_t> a(rows * cols, 0);
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (const auto& e : m.column(c)) {
            std::size_t r = e.row, k = c;
            if (transpose) std::swap(r, k);
            a[r * cols + k] = reduce_mod(e.value, p);
        }

    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank)
            std::swap_ranges(a.begin() + pivot * cols, a.begin() + (pivot + 1) * cols, a.begin() + rank * cols);
        const std::uint64_t inv = inverse_mod(a[rank * cols + c], p);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            std::uint32_t lead = a[r * cols + c];
            if (lead == 0) continue;
            const std::uint64_t factor = lead * inv % p;
            for (std::size_t k = c; k < cols; ++k) {
                std::uint64_t sub = factor * a[rank * cols + k] % p;
                a[r * cols + k] = static_cast<std::uint32_t>((a[r * cols + k] + p - sub) % p);
            }
        }
        ++rank;
    }
    return rank;
}

template <class Int>
std::size_t bareiss_rank(const BoundaryMatrix& m) {
    using Ops = IntOps<Int>;
    const bool transpose = m.cols() > m.rows();
    const std::size_t rows = transpose ? m.cols() : m.rows();
    const std::size_t cols = transpose ? m.rows() : m.cols();
    std::vector<Int> a(rows * cols, Int(0));
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (const auto& e : m.column(c)) {
            std::size_t r = e.row, k = c;
            if (transpose) std::swap(r, k);
            a[r * cols + k] = Int(e.value);
        }

    Int previous(1);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank)
            std::swap_ranges(a.begin() + pivot * cols, a.begin() + (pivot + 1) * cols, a.begin() + rank * cols);
        const Int lead = a[rank * cols + c];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const Int factor = a[r * cols + c];
            for (std::size_t k = c + 1; k < cols; ++k) {
                Int v = Ops::sub(Ops::mul(lead, a[r * cols + k]), Ops::mul(factor, a[rank * cols + k]));
                a[r * cols + k] = Ops::div(v, previous);
            }
            a[r * cols + c] = Int(0);
        }
        previous = lead;
        ++rank;
    }
    return rank;
}

// Column reduction keyed on the largest row index ("low") of each column.
template <class Value, class Combine>
std::size_t column_reduction_rank(const BoundaryMatrix& m, const std::vector<std::vector<std::pair<std::size_t, Value>>>& input,
                                  Combine combine) {
    using Column = std::vector<std::pair<std::size_t, Value>>;
    std::unordered_map<std::size_t, Column> pivots;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        Column col = input[c];
        while (!col.empty()) {
            auto it = pivots.find(col.back().first);
            if (it == pivots.end()) {
                pivots.emplace(col.back().first, std::move(col));
                ++rank;
                break;
            }
            col = combine(col, it->second);
        }
    }
    return rank;
}

std::size_t sparse_rank_mod_p(const BoundaryMatrix& m, std::uint32_t p) {
    using Column = std::vector<std::pair<std::size_t, std::uint32_t>>;
    std::vector<Column> input(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (const auto& e : m.column(c)) {
            auto v = reduce_mod(e.value, p);
            if (v) input[c].emplace_back(e.row, v);
        }
    // col - (col.low / pivot.low) * pivot
    auto combine = [p](const Column& col, const Column& pivot) {
        const std::uint64_t factor = std::uint64_t{col.back().second} * inverse_mod(pivot.back().second, p) % p;
        Column out;
        out.reserve(col.size() + pivot.size());
        std::size_t i = 0, j = 0;
        while (i < col.size() || j < pivot.size()) {
            if (j == pivot.size() || (i < col.size() && col[i].first < pivot[j].first)) {
                out.push_back(col[i++]);
            } else {
                const std::uint64_t sub = factor * pivot[j].second % p;
                std::uint64_t v = (i < col.size() && col[i].first == pivot[j].first) ? col[i++].second : 0;
                v = (v + p - sub) % p;
                if (v) out.emplace_back(pivot[j].first, static_cast<std::uint32_t>(v));
                ++j;
            }
        }
        return out;
    };
    return column_reduction_rank<std::uint32_t>(m, input, combine);
}

template <class Int>
std::size_t sparse_rank_integer(const BoundaryMatrix& m) {
    using Ops = IntOps<Int>;
    using Column = std::vector<std::pair<std::size_t, Int>>;
    std::vector<Column> input(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (const auto& e : m.column(c)) input[c].emplace_back(e.row, Int(e.value));

    // b*col - a*pivot with a, b the low entries divided by their gcd, then
    // the column is divided by the gcd of its entries.
    auto combine = [](const Column& col, const Column& pivot) {
        const Int g = Ops::gcd(col.back().second, pivot.back().second);
        const Int a = Ops::div(col.back().second, g);
        const Int b = Ops::div(pivot.back().second, g);
        Column out;
        out.reserve(col.size() + pivot.size());
        std::size_t i = 0, j = 0;
        Int content(0);
        while (i < col.size() || j < pivot.size()) {
            Int v(0);
            std::size_t row;
            if (j == pivot.size() || (i < col.size() && col[i].first < pivot[j].first)) {
                row = col[i].first;
                v = Ops::mul(b, col[i++].second);
            } else if (i == col.size() || pivot[j].first < col[i].first) {
                row = pivot[j].first;
                v = Ops::sub(Int(0), Ops::mul(a, pivot[j++].second));
            } else {
                row = col[i].first;
                v = Ops::sub(Ops::mul(b, col[i++].second), Ops::mul(a, pivot[j++].second));
            }
            if (v != 0) {
                content = Ops::gcd(content, v);
                out.emplace_back(row, std::move(v));
            }
        }
        if (content != 0 && !Ops::is_one(content))
            for (auto& e : out) e.second = Ops::div(e.second, content);
        return out;
    };
    return column_reduction_rank<Int>(m, input, combine);
}

std::size_t rational_rank(const BoundaryMatrix& m, bool dense) {
    try {
        return dense ? bareiss_rank<std::int64_t>(m) : sparse_rank_integer<std::int64_t>(m);
    } catch (const Overflow&) {
        return dense ? bareiss_rank<mpz_class>(m) : sparse_rank_integer<mpz_class>(m);
    }
}

} // namespace

std::size_t rank(const BoundaryMatrix& matrix, FieldChar characteristic, RankMethod method) {
    if (matrix.rows() == 0 || matrix.cols() == 0) return 0;
    if (method == RankMethod::automatic)
        method = matrix.rows() * matrix.cols() <= dense_rank_threshold ? RankMethod::dense : RankMethod::sparse;
    const bool dense = method == RankMethod::dense;
    if (characteristic.is_zero()) return rational_rank(matrix, dense);
    return dense ? dense_rank_mod_p(matrix, characteristic.value()) : sparse_rank_mod_p(matrix, characteristic.value());
}

} // namespace poincare
