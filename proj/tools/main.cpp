#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "padicup/cli/commands.hpp"
#include "padicup/errors.hpp"

int main(int argc, char** argv) {
    using namespace padicup::cli;

    CLI::App app{"Exact p-adic and non-Archimedean uncertainty principle checker"};
    app.require_subcommand(1);

    std::string validate_path;
    auto* validate = app.add_subcommand("validate", "Validate the bases or systems of an instance file");
    validate->add_option("path", validate_path, "Instance file")->required();

    std::string check_path;
    CheckOptions check_options;
    auto* check = app.add_subcommand("check", "Evaluate the uncertainty inequality on an instance file");
    check->add_option("path", check_path, "Instance file")->required();
    check->add_option("--vector", check_options.vector, "1-based index into the file's vectors, or a vector file");
    check->add_flag("--all-subsets", check_options.all_subsets,
                    "Check every admissible (M, N) pair (dimension <= 12)");

    GenerateOptions generate_options;
    auto* generate = app.add_subcommand("generate", "Write a seeded random instance to standard output");
    generate->add_option("--prime", generate_options.prime, "Prime p")->required();
    generate->add_option("--dim", generate_options.dimension, "Dimension n")->required();
    generate->add_option("--seed", generate_options.seed, "Seed")->required();
    generate->add_option("--kind", generate_options.kind, "hilbert or banach")->capture_default_str();

    SweepOptions sweep_options;
    std::string seed_range = "0";
    auto* sweep = app.add_subcommand("sweep", "Tabulate admissible (M, N) pairs of generated instances as CSV");
    sweep->add_option("--primes", sweep_options.primes, "Primes")->required()->delimiter(',');
    sweep->add_option("--dims", sweep_options.dimensions, "Dimensions")->required()->delimiter(',');
    sweep->add_option("--seeds", seed_range, "Seed range a..b (inclusive) or a single seed")->capture_default_str();
    sweep->add_option("--draws", sweep_options.draws, "Random unit vectors per instance")->capture_default_str();
    sweep->add_option("--kind", sweep_options.kind, "hilbert or banach")->capture_default_str();
    sweep->add_option("--out", sweep_options.output, "CSV output path, - for stdout")->capture_default_str();
    sweep->add_option("--threads", sweep_options.threads, "Worker threads (0: all cores)")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_parse_error;
    }

    if (*validate)
        return cmd_validate(validate_path, std::cout, std::cerr);
    if (*check)
        return cmd_check(check_path, check_options, std::cout, std::cerr);
    if (*generate)
        return cmd_generate(generate_options, std::cout, std::cerr);
    try {
        const auto [lo, hi] = parse_seed_range(seed_range);
        sweep_options.first_seed = lo;
        sweep_options.last_seed = hi;
    } catch (const padicup::ParseError& e) {
        std::cerr << e.what() << "\n";
        return exit_parse_error;
    }
    return cmd_sweep(sweep_options, std::cout, std::cerr);
}
