#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace poincare {

using VarIndex = std::uint32_t;
using Exponent = std::uint32_t;

/// Raised by the monomial parser. `position` is the 1-based column of the
/// offending character within the parsed text.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Characters that may not occur in a variable name (besides whitespace).
inline constexpr std::string_view forbidden_name_chars = "+-*/^,.";

bool is_valid_variable_name(std::string_view name);

/// Ordered collection of variable names. Indices are handed out in
/// first-seen order and never reused.
class VariablePool {
public:
    VariablePool() = default;

    /// Returns the index of `name`, adding it if unseen.
    VarIndex intern(std::string_view name);
    std::optional<VarIndex> find(std::string_view name) const;

    const std::string& name(VarIndex index) const { return names_.at(index); }
    std::size_t size() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, VarIndex> index_;
};

/// A monomial x^a stored sparsely as (variable, exponent) pairs sorted by
/// variable index. Zero exponents are never stored; the empty monomial is 1.
class Monomial {
public:
    using Factor = std::pair<VarIndex, Exponent>;

    Monomial() = default;
    Monomial(std::initializer_list<Factor> factors);
    explicit Monomial(std::vector<Factor> factors);

    static Monomial variable(VarIndex v, Exponent e = 1);

    const std::vector<Factor>& factors() const noexcept { return factors_; }
    Exponent exponent(VarIndex v) const;
    std::uint64_t degree() const;
    bool is_one() const noexcept { return factors_.empty(); }
    bool is_squarefree() const;
    std::vector<VarIndex> support() const;

    Monomial operator*(const Monomial& other) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::vector<Factor> factors_;
};

Monomial lcm(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);
bool has_common_factor(const Monomial& a, const Monomial& b);

/// Graded order used for printing: lower total degree first, then the
/// lexicographically larger exponent vector (variable 0 most significant).
bool graded_lex_before(const Monomial& a, const Monomial& b);

/// Parses "NAME", "NAME^k" factors joined by '*'. Unseen names are added to
/// `pool` only if the whole text parses. Names made only of digits are
/// accepted; a note is appended to `warnings` when it is non-null.
Monomial parse_monomial(std::string_view text, VariablePool& pool,
                        std::vector<std::string>* warnings = nullptr);

using VariableNamer = std::function<std::string(VarIndex)>;

/// Factors joined by '*', exponents >= 2 as NAME^e, "1" for the unit.
std::string format_monomial(const Monomial& m, const VariableNamer& name);
std::string format_monomial(const Monomial& m, const VariablePool& pool);

/// Removes duplicates and every monomial divisible by another one.
/// Returns the kept monomials in input order; dropped ones go to `dropped`.
std::vector<Monomial> minimalize(const std::vector<Monomial>& monomials,
                                 std::vector<Monomial>* dropped = nullptr);

} // namespace poincare

template <>
struct std::hash<poincare::Monomial> {
    std::size_t operator()(const poincare::Monomial& m) const noexcept {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (auto [v, e] : m.factors()) {
            h ^= (static_cast<std::size_t>(v) << 32 | e) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};
