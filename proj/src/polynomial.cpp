#include "poincare/polynomial.hpp"

#include <stdexcept>

namespace poincare {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow");
    return r;
}

TPolynomial::TPolynomial(std::initializer_list<std::pair<const int, std::int64_t>> terms) {
    for (auto [d, c] : terms) add(d, c);
}

TPolynomial TPolynomial::monomial(int degree, std::int64_t coefficient) {
    TPolynomial p;
    p.add(degree, coefficient);
    return p;
}

std::int64_t TPolynomial::coefficient(int degree) const {
    auto it = coeffs_.find(degree);
    return it == coeffs_.end() ? 0 : it->second;
}

void TPolynomial::add(int degree, std::int64_t coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(degree, 0);
    it->second = checked_add(it->second, coefficient);
    if (it->second == 0) coeffs_.erase(it);
}

int TPolynomial::min_degree() const {
    if (coeffs_.empty()) throw std::logic_error("degree of the zero polynomial");
    return coeffs_.begin()->first;
}

int TPolynomial::max_degree() const {
    if (coeffs_.empty()) throw std::logic_error("degree of the zero polynomial");
    return coeffs_.rbegin()->first;
}

TPolynomial TPolynomial::shifted(int k) const {
    TPolynomial r;
    for (auto [d, c] : coeffs_) r.coeffs_.emplace(d + k, c);
    return r;
}

TPolynomial TPolynomial::reflected() const {
    TPolynomial r;
    for (auto [d, c] : coeffs_) r.coeffs_.emplace(-d, c);
    return r;
}

TPolynomial TPolynomial::operator+(const TPolynomial& o) const {
    TPolynomial r = *this;
    for (auto [d, c] : o.coeffs_) r.add(d, c);
    return r;
}

TPolynomial TPolynomial::operator-(const TPolynomial& o) const {
    TPolynomial r = *this;
    for (auto [d, c] : o.coeffs_) r.add(d, -c);
    return r;
}

TPolynomial TPolynomial::operator*(const TPolynomial& o) const {
    TPolynomial r;
    for (auto [d1, c1] : coeffs_)
        for (auto [d2, c2] : o.coeffs_) r.add(d1 + d2, checked_mul(c1, c2));
    return r;
}

MultigradedPolynomial MultigradedPolynomial::one() {
    MultigradedPolynomial p;
    p.add(Monomial{}, 0, 1);
    return p;
}

void MultigradedPolynomial::add(const Monomial& multidegree, int t_degree, std::int64_t coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(TermKey{multidegree, t_degree}, 0);
    it->second = checked_add(it->second, coefficient);
    if (it->second == 0) terms_.erase(it);
}

std::int64_t MultigradedPolynomial::coefficient(const Monomial& multidegree, int t_degree) const {
    auto it = terms_.find(TermKey{multidegree, t_degree});
    return it == terms_.end() ? 0 : it->second;
}

int MultigradedPolynomial::t_degree() const {
    int d = 0;
    for (const auto& [key, c] : terms_) d = std::max(d, key.t_degree);
    return d;
}

MultigradedPolynomial MultigradedPolynomial::operator+(const MultigradedPolynomial& o) const {
    MultigradedPolynomial r = *this;
    for (const auto& [key, c] : o.terms_) r.add(key.multidegree, key.t_degree, c);
    return r;
}

MultigradedPolynomial MultigradedPolynomial::operator*(const MultigradedPolynomial& o) const {
    MultigradedPolynomial r;
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_)
            r.add(k1.multidegree * k2.multidegree, k1.t_degree + k2.t_degree, checked_mul(c1, c2));
    return r;
}

namespace {

// Appends one signed term. `ring_part` is empty for the unit multidegree.
void append_term(std::string& out, std::int64_t coefficient, const std::string& ring_part, int t_degree,
                 std::string_view variable) {
    const bool negative = coefficient < 0;
    // Magnitude as unsigned so INT64_MIN prints correctly.
    const std::uint64_t magnitude =
        negative ? std::uint64_t{0} - static_cast<std::uint64_t>(coefficient) : static_cast<std::uint64_t>(coefficient);

    if (out.empty())
        out += negative ? "-" : "";
    else
        out += negative ? " - " : " + ";

    std::string body;
    auto push = [&body](const std::string& part) {
        if (!body.empty()) body += '*';
        body += part;
    };
    const bool bare = ring_part.empty() && t_degree == 0;
    if (magnitude != 1 || bare) push(std::to_string(magnitude));
    if (!ring_part.empty()) push(ring_part);
    if (t_degree != 0) push(std::string(variable) + (t_degree == 1 ? "" : "^" + std::to_string(t_degree)));
    out += body;
}

} // namespace

std::string format_polynomial(const TPolynomial& p, std::string_view variable) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto [d, c] : p.terms()) append_term(out, c, "", d, variable);
    return out;
}

std::string format_polynomial(const MultigradedPolynomial& p, const VariableNamer& name,
                              std::string_view variable) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [key, c] : p.terms()) {
        std::string ring_part = key.multidegree.is_one() ? "" : format_monomial(key.multidegree, name);
        append_term(out, c, ring_part, key.t_degree, variable);
    }
    return out;
}

std::string format_polynomial(const MultigradedPolynomial& p, const VariablePool& pool,
                              std::string_view variable) {
    return format_polynomial(p, [&pool](VarIndex v) { return pool.name(v); }, variable);
}

} // namespace poincare
