#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vlab/io.hpp"
#include "vlab/scenario.hpp"

namespace {

// Exit-code contract: 0 success, 2 usage, 3 I/O, 4 numerical domain.
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitDomain = 4;

int do_run(const std::vector<std::string>& tokens) {
    const auto config = vlab::cli::parse_config(tokens);
    const auto report = vlab::cli::run_scenario(config);
    std::cout << report.to_json().dump(2) << '\n';
    return report.all_passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"vacuum-string numerical laboratory"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand(
        "run", "run a scenario: run <name> [--config f] [--out p] [--seed n] "
               "[--<param> v ...]");
    run->allow_extras();
    auto* list = app.add_subcommand("list", "list scenarios and parameters");
    auto* check =
        app.add_subcommand("check", "run the embedded invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (run->parsed()) {
            return do_run(run->remaining());
        }
        if (list->parsed()) {
            vlab::cli::print_scenario_list(std::cout);
            return 0;
        }
        if (check->parsed()) {
            return vlab::cli::run_embedded_checks(std::cout) == 0 ? 0 : 1;
        }
    } catch (const vlab::cli::UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const vlab::io::IoError& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return kExitDomain;
    }
    return 0;
}
