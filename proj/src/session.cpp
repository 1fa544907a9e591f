#include "poincare/session.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "poincare/denominator.hpp"
#include "poincare/simplicial.hpp"

namespace poincare {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
    std::vector<std::string_view> words;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) words.push_back(line.substr(start, i - start));
    }
    return words;
}

CommandResult failure(std::string message) { return {std::move(message) + "\n", false, false}; }

std::string warning_lines(const std::vector<std::string>& warnings) {
    std::string out;
    for (const auto& w : warnings) out += "Warning: " + w + "\n";
    return out;
}

// Parses every monomial against a copy of the pool; commits nothing.
std::vector<Monomial> parse_list(const std::vector<std::string_view>& words, std::size_t first, VariablePool& pool,
                                 std::vector<std::string>& warnings) {
    std::vector<Monomial> out;
    for (std::size_t i = first; i < words.size(); ++i) {
        try {
            out.push_back(parse_monomial(words[i], pool, &warnings));
        } catch (const ParseError& e) {
            throw std::invalid_argument("cannot parse '" + std::string(words[i]) + "': " + e.what());
        }
    }
    return out;
}

CommandResult add_simplex(const std::vector<std::string_view>& words, SessionState& state) {
    if (words.size() < 3) return failure("add simplex needs at least one monomial");
    VariablePool pool = state.pool;
    std::vector<std::string> warnings;
    auto monomials = parse_list(words, 2, pool, warnings);
    std::vector<std::vector<VarIndex>> facets;
    for (std::size_t i = 0; i < monomials.size(); ++i) {
        if (!monomials[i].is_squarefree())
            return failure("simplex '" + std::string(words[i + 2]) + "' must not carry exponents");
        facets.push_back(monomials[i].support());
    }
    state.pool = std::move(pool);
    state.facets.insert(state.facets.end(), facets.begin(), facets.end());
    return {warning_lines(warnings)};
}

CommandResult add_monomial(const std::vector<std::string_view>& words, SessionState& state) {
    if (words.size() < 3) return failure("add monomial needs at least one monomial");
    VariablePool pool = state.pool;
    std::vector<std::string> warnings;
    auto parsed = parse_list(words, 2, pool, warnings);

    std::vector<Monomial> all = state.monomials;
    all.insert(all.end(), parsed.begin(), parsed.end());
    std::vector<Monomial> dropped;
    auto minimal = minimalize(all, &dropped);
    for (const auto& m : dropped)
        warnings.push_back("dropped " + format_monomial(m, pool) + ", which is a multiple of another generator");

    state.pool = std::move(pool);
    state.monomials = std::move(minimal);
    return {warning_lines(warnings)};
}

CommandResult homology(SessionState& state) {
    if (state.facets.empty()) return failure("No simplicial complex loaded; use add simplex first.");
    std::set<VarIndex> vertex_set;
    for (const auto& f : state.facets) vertex_set.insert(f.begin(), f.end());
    if (vertex_set.size() > max_complex_vertices)
        return failure("complexes are limited to " + std::to_string(max_complex_vertices) + " vertices");

    std::vector<VarIndex> vertices(vertex_set.begin(), vertex_set.end());
    std::vector<FaceMask> facets;
    for (const auto& f : state.facets) {
        FaceMask mask = 0;
        for (auto v : f)
            mask |= FaceMask{1} << (std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin());
        facets.push_back(mask);
    }
    const auto complex = SimplicialComplex::from_facets(vertices.size(), facets);
    const auto series = reduced_homology(complex, state.characteristic);
    return {"Calculating homology ranks...\n*****  Hilbert series of simplicial homology *****\n" +
            format_series(series, state.homology_variable) + "\n"};
}

CommandResult denominator_command(SessionState& state) {
    if (state.monomials.empty()) return failure("No monomials loaded; use add monomial first.");
    for (const auto& m : state.monomials)
        for (auto v : m.support())
            if (state.pool.name(v) == state.homology_variable)
                return failure("ring variable " + state.homology_variable +
                               " clashes with the homology variable; rename it with var");
    const auto b = denominator(state.monomials, state.characteristic);
    if (state.multigrade) return {format_polynomial(b, state.pool, state.homology_variable) + "\n"};
    return {format_polynomial(specialize_ungraded(b), state.homology_variable) + "\n"};
}

CommandResult set_characteristic(const std::vector<std::string_view>& words, SessionState& state) {
    if (words.size() != 2) return failure("usage: char <n>");
    const auto text = words[1];
    std::uint64_t p = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
    if (ec == std::errc::result_out_of_range) return failure(std::string(text) + " is too large");
    if (ec != std::errc() || end != text.data() + text.size()) return failure("invalid characteristic '" + std::string(text) + "'");
    try {
        state.characteristic = FieldChar(p);
    } catch (const std::invalid_argument& e) {
        return failure(e.what());
    }
    return {"New characteristic: " + std::to_string(p) + "\n"};
}

CommandResult set_option(const std::vector<std::string_view>& words, SessionState& state) {
    if (words.size() != 3 || words[1] != "multigrade") return failure("usage: set multigrade <true|false>");
    if (words[2] == "true")
        state.multigrade = true;
    else if (words[2] == "false")
        state.multigrade = false;
    else
        return failure("expected true or false, got '" + std::string(words[2]) + "'");
    return {};
}

CommandResult set_variable(const std::vector<std::string_view>& words, SessionState& state) {
    if (words.size() != 2) return failure("usage: var <name>");
    if (!is_valid_variable_name(words[1]))
        return failure("invalid variable name '" + std::string(words[1]) + "'");
    state.homology_variable = std::string(words[1]);
    return {};
}

} // namespace

CommandResult execute(std::string_view line, SessionState& state) {
    const auto words = split_words(line);
    if (words.empty()) return {};
    const auto command = words[0];
    try {
        if (command == "add") {
            if (words.size() >= 2 && words[1] == "simplex") return add_simplex(words, state);
            if (words.size() >= 2 && words[1] == "monomial") return add_monomial(words, state);
            return failure("usage: add simplex <monomials> | add monomial <monomials>");
        }
        if (command == "homology") return words.size() == 1 ? homology(state) : failure("usage: homology");
        if (command == "denominator" || command == "denom")
            return words.size() == 1 ? denominator_command(state) : failure("usage: denominator");
        if (command == "char") return set_characteristic(words, state);
        if (command == "set") return set_option(words, state);
        if (command == "var") return set_variable(words, state);
        if (command == "clear") {
            state.facets.clear();
            state.monomials.clear();
            return {};
        }
        if (command == "quit") return {std::string(farewell), true, true};
        return failure("Unknown command: " + std::string(command));
    } catch (const std::exception& e) {
        return failure(e.what());
    }
}

std::string banner() {
    return "Poincare-Betti series calculator " POINCARE_VERSION "\n"
           "Computes reduced simplicial homology over prime fields and the\n"
           "rationals, and denominators of multigraded Poincare-Betti series\n"
           "of monomial rings. Type quit to leave.\n\n";
}

int run_session(std::istream& in, std::ostream& out, const SessionOptions& options) {
    SessionState state;
    if (options.banner) out << banner();
    std::string line;
    while (true) {
        if (options.interactive) out << "> " << std::flush;
        if (!std::getline(in, line)) break;
        auto result = execute(line, state);
        out << result.output << std::flush;
        if (result.quit) break;
        if (!result.ok && options.strict) return 1;
    }
    if (options.interactive && in.eof()) out << "\n";
    return 0;
}

int run_batch(std::istream& in, std::ostream& out, bool strict) {
    return run_session(in, out, SessionOptions{false, false, strict});
}

} // namespace poincare
