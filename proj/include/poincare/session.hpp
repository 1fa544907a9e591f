#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "poincare/homology.hpp"
#include "poincare/monomial.hpp"

namespace poincare {

/// State of one interactive session.
struct SessionState {
    /// Facets from `add simplex`, as sorted lists of pool indices.
    std::vector<std::vector<VarIndex>> facets;
    /// Minimal generators from `add monomial`.
    std::vector<Monomial> monomials;
    FieldChar characteristic;
    bool multigrade = true;
    std::string homology_variable{default_homology_variable};
    VariablePool pool;
};

struct CommandResult {
    std::string output; ///< newline-terminated lines, possibly empty
    bool ok = true;
    bool quit = false;
};

/// Runs one command line. On error the state is left unchanged and the
/// output is a single message line.
CommandResult execute(std::string_view line, SessionState& state);

std::string banner();
inline constexpr std::string_view farewell = "\nThanks for visiting.\n";

struct SessionOptions {
    bool interactive = false; ///< print "> " before each line
    bool banner = false;
    bool strict = false;      ///< stop at the first failing command
};

/// Reads commands until `quit` or end of input. Returns 0, or 1 when a
/// command failed in strict mode.
int run_session(std::istream& in, std::ostream& out, const SessionOptions& options);

/// Non-interactive session without banner or prompts.
int run_batch(std::istream& in, std::ostream& out, bool strict = false);

} // namespace poincare
