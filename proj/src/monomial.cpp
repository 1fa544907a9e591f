#include "poincare/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace poincare {

namespace {

bool is_forbidden(char c) {
    return forbidden_name_chars.find(c) != std::string_view::npos ||
           std::isspace(static_cast<unsigned char>(c));
}

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(),
                                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

// Sorts by variable and merges repeated variables, dropping zero exponents.
std::vector<Monomial::Factor> normalize(std::vector<Monomial::Factor> factors) {
    std::sort(factors.begin(), factors.end());
    std::vector<Monomial::Factor> out;
    out.reserve(factors.size());
    for (auto [v, e] : factors) {
        if (e == 0) continue;
        if (!out.empty() && out.back().first == v) {
            if (out.back().second > std::numeric_limits<Exponent>::max() - e)
                throw std::overflow_error("exponent overflow");
            out.back().second += e;
        } else {
            out.emplace_back(v, e);
        }
    }
    return out;
}

} // namespace

bool is_valid_variable_name(std::string_view name) {
    return !name.empty() && std::none_of(name.begin(), name.end(), is_forbidden);
}

VarIndex VariablePool::intern(std::string_view name) {
    if (auto found = find(name)) return *found;
    if (!is_valid_variable_name(name))
        throw std::invalid_argument("invalid variable name '" + std::string(name) + "'");
    auto index = static_cast<VarIndex>(names_.size());
    names_.emplace_back(name);
    index_.emplace(names_.back(), index);
    return index;
}

std::optional<VarIndex> VariablePool::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Monomial::Monomial(std::initializer_list<Factor> factors)
    : factors_(normalize(std::vector<Factor>(factors))) {}

Monomial::Monomial(std::vector<Factor> factors) : factors_(normalize(std::move(factors))) {}

Monomial Monomial::variable(VarIndex v, Exponent e) { return Monomial{{v, e}}; }

Exponent Monomial::exponent(VarIndex v) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                               [](const Factor& f, VarIndex x) { return f.first < x; });
    return (it != factors_.end() && it->first == v) ? it->second : 0;
}

std::uint64_t Monomial::degree() const {
    std::uint64_t d = 0;
    for (auto [v, e] : factors_) d += e;
    return d;
}

bool Monomial::is_squarefree() const {
    return std::all_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.second == 1; });
}

std::vector<VarIndex> Monomial::support() const {
    std::vector<VarIndex> s;
    s.reserve(factors_.size());
    for (auto [v, e] : factors_) s.push_back(v);
    return s;
}

Monomial Monomial::operator*(const Monomial& other) const {
    std::vector<Factor> all = factors_;
    all.insert(all.end(), other.factors_.begin(), other.factors_.end());
    return Monomial(std::move(all));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    std::vector<Monomial::Factor> out;
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    std::size_t i = 0, j = 0;
    while (i < fa.size() || j < fb.size()) {
        if (j == fb.size() || (i < fa.size() && fa[i].first < fb[j].first)) {
            out.push_back(fa[i++]);
        } else if (i == fa.size() || fb[j].first < fa[i].first) {
            out.push_back(fb[j++]);
        } else {
            out.emplace_back(fa[i].first, std::max(fa[i].second, fb[j].second));
            ++i;
            ++j;
        }
    }
    return Monomial(std::move(out));
}

bool divides(const Monomial& a, const Monomial& b) {
    for (auto [v, e] : a.factors())
        if (b.exponent(v) < e) return false;
    return true;
}

bool has_common_factor(const Monomial& a, const Monomial& b) {
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    std::size_t i = 0, j = 0;
    while (i < fa.size() && j < fb.size()) {
        if (fa[i].first == fb[j].first) return true;
        if (fa[i].first < fb[j].first)
            ++i;
        else
            ++j;
    }
    return false;
}

bool graded_lex_before(const Monomial& a, const Monomial& b) {
    auto da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    for (std::size_t i = 0; i < std::min(fa.size(), fb.size()); ++i) {
        if (fa[i] == fb[i]) continue;
        // A smaller variable index means the other monomial has exponent 0 there.
        if (fa[i].first != fb[i].first) return fa[i].first < fb[i].first;
        return fa[i].second > fb[i].second;
    }
    return fa.size() > fb.size();
}

Monomial parse_monomial(std::string_view text, VariablePool& pool, std::vector<std::string>* warnings) {
    if (text.empty()) throw ParseError("empty monomial", 1);

    struct PendingFactor {
        std::string_view name;
        Exponent exponent;
    };
    std::vector<PendingFactor> pending;

    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('*', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view factor = text.substr(start, end - start);
        const std::size_t column = start + 1;
        if (factor.empty()) throw ParseError("empty factor", column);

        std::size_t caret = factor.find('^');
        std::string_view name = factor.substr(0, caret);
        if (name.empty()) throw ParseError("missing variable name", column);
        for (std::size_t k = 0; k < name.size(); ++k) {
            if (is_forbidden(name[k]))
                throw ParseError(std::string("forbidden character '") + name[k] + "' in variable name",
                                 column + k);
        }

        Exponent exponent = 1;
        if (caret != std::string_view::npos) {
            std::string_view digits = factor.substr(caret + 1);
            const std::size_t exp_column = column + caret + 1;
            if (digits.empty() || !all_digits(digits))
                throw ParseError("malformed exponent '" + std::string(digits) + "'", exp_column);
            std::uint64_t value = 0;
            for (char c : digits) {
                value = value * 10 + static_cast<std::uint64_t>(c - '0');
                if (value > std::numeric_limits<Exponent>::max())
                    throw ParseError("exponent too large", exp_column);
            }
            if (value == 0) throw ParseError("exponent must be at least 1", exp_column);
            exponent = static_cast<Exponent>(value);
        }
        pending.push_back({name, exponent});
        start = end + 1;
    }

    // Repeated names accumulate; check the totals before touching the pool.
    std::unordered_map<std::string_view, std::uint64_t> totals;
    for (const auto& f : pending) {
        if ((totals[f.name] += f.exponent) > std::numeric_limits<Exponent>::max())
            throw ParseError("exponent too large", 1);
    }

    std::vector<Monomial::Factor> factors;
    for (const auto& f : pending) {
        if (warnings && all_digits(f.name) && !pool.find(f.name))
            warnings->push_back("variable name '" + std::string(f.name) + "' consists only of digits");
        factors.emplace_back(pool.intern(f.name), f.exponent);
    }
    return Monomial(std::move(factors));
}

std::string format_monomial(const Monomial& m, const VariableNamer& name) {
    if (m.is_one()) return "1";
    std::string out;
    for (auto [v, e] : m.factors()) {
        if (!out.empty()) out += '*';
        out += name(v);
        if (e >= 2) out += '^' + std::to_string(e);
    }
    return out;
}

std::string format_monomial(const Monomial& m, const VariablePool& pool) {
    return format_monomial(m, [&pool](VarIndex v) { return pool.name(v); });
}

std::vector<Monomial> minimalize(const std::vector<Monomial>& monomials, std::vector<Monomial>* dropped) {
    std::vector<Monomial> kept;
    for (std::size_t i = 0; i < monomials.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < monomials.size() && !redundant; ++j) {
            if (i == j || !divides(monomials[j], monomials[i])) continue;
            // Equal monomials: keep the first occurrence only.
            redundant = monomials[j] != monomials[i] || j < i;
        }
        if (redundant) {
            if (dropped) dropped->push_back(monomials[i]);
        } else {
            kept.push_back(monomials[i]);
        }
    }
    return kept;
}

} // namespace poincare
