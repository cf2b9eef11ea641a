// verify: runs the seeded property suite and prints a text or JSON report.
//
//   verify [--n N] [--trials T] [--seed S] [--tol-alg X] [--tol-fd Y]
//          [--fd-step H] [--checks a,b,c|all] [--format json|text] [--list]
//
// Exit status: 0 all checks pass, 1 some check fails, 2 usage error.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "affsym/verify.hpp"

int main(int argc, char** argv) {
    using namespace affsym::verify;

    RunConfig config;
    std::string checks = "all";
    bool list = false;

    CLI::App app{"Property checks for the affine and odd symplectic groups"};
    app.add_option("--n", config.n, "half dimension n of R^2n")->capture_default_str();
    app.add_option("--trials", config.trials, "random draws per check")->capture_default_str();
    app.add_option("--seed", config.seed, "seed for every check stream")->capture_default_str();
    app.add_option("--tol-alg", config.tol_alg, "tolerance for exact identities")->capture_default_str();
    app.add_option("--tol-fd", config.tol_fd, "relative tolerance for finite differences")->capture_default_str();
    app.add_option("--fd-step", config.fd_step, "finite difference step")->capture_default_str();
    app.add_option("--checks", checks, "comma separated check names, or all")->capture_default_str();
    std::string format = "text";
    app.add_option("--format", format, "report format")
        ->check(CLI::IsMember({"text", "json"}, CLI::ignore_case))
        ->capture_default_str();
    app.add_flag("--list", list, "list the available checks and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (list) {
        std::cout << listing_text();
        return 0;
    }

    config.format = CLI::detail::to_lower(format) == "json" ? Format::json : Format::text;
    config.checks = parse_check_list(checks);
    try {
        const Report report = run(config);
        if (config.format == Format::json) {
            std::cout << to_json(report).dump(2) << '\n';
        } else {
            std::cout << to_text(report);
        }
        return exit_code(report);
    } catch (const UsageError& e) {
        std::cerr << "verify: " << e.what() << '\n';
        return 2;
    }
}
