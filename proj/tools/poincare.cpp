// Command-line front end: interactive REPL on stdin, or batch mode over a
// command file.

#include <fstream>
#include <iostream>
#include <string>

#include <unistd.h>

#include "CLI11.hpp"
#include "poincare/session.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Simplicial homology and Poincare-Betti denominators of monomial rings"};
    std::string batch_file;
    bool strict = false;
    bool no_banner = false;
    app.add_option("--batch", batch_file, "Run the commands in FILE ('-' for stdin) without prompts")
        ->type_name("FILE");
    app.add_flag("--strict", strict, "Stop with exit code 1 at the first failing command");
    app.add_flag("--no-banner", no_banner, "Do not print the welcome banner");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (!batch_file.empty()) {
        if (batch_file == "-") return poincare::run_batch(std::cin, std::cout, strict);
        std::ifstream in(batch_file);
        if (!in) {
            std::cerr << "cannot open " << batch_file << "\n";
            return 2;
        }
        return poincare::run_batch(in, std::cout, strict);
    }

    poincare::SessionOptions options;
    options.interactive = isatty(STDIN_FILENO) != 0;
    options.banner = !no_banner;
    options.strict = strict;
    return poincare::run_session(std::cin, std::cout, options);
}
