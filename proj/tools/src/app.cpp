#include "schurweyl/cli/commands.hpp"

#include "schurweyl/error.hpp"

#include <CLI11.hpp>

#include <map>
#include <ostream>

namespace schurweyl::cli {

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Hook-length entanglement bounds for Schur-Weyl sectors", "schurweyl"};
    app.require_subcommand(1);
    RunConfig config;

    const std::map<std::string, OutputFormat> formats{{"text", OutputFormat::text}, {"json", OutputFormat::json}};
    auto common = [&](CLI::App *sub) {
        sub->add_option("--format", config.format, "text or json")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
        sub->add_option("--seed", config.seed, "seed for every random draw");
    };
    auto partition = [&](CLI::App *sub) {
        sub->add_option("-p,--partition", config.partition, "row lengths, e.g. 3,2,1")->required();
    };
    auto local_dim = [&](CLI::App *sub) {
        sub->add_option("--d", config.d, "local dimension (default c_1)")->check(CLI::PositiveNumber);
    };

    CLI::App *bound = app.add_subcommand("bound", "per-box bounds, maximum and entropy bound");
    partition(bound);
    common(bound);

    CLI::App *tableaux = app.add_subcommand("tableaux", "standard tableaux and irrep dimensions");
    partition(tableaux);
    local_dim(tableaux);
    common(tableaux);

    CLI::App *verify = app.add_subcommand("verify", "run the invariant suite for one block");
    partition(verify);
    local_dim(verify);
    verify->add_option("--tolerance", config.tolerance, "residual tolerance")->check(CLI::PositiveNumber);
    verify->add_option("--samples", config.samples, "random probe states per check")->check(CLI::PositiveNumber);
    common(verify);

    CLI::App *maximize = app.add_subcommand("maximize", "numeric maximum of lambda_1^2 over the block");
    partition(maximize);
    local_dim(maximize);
    maximize->add_option("--cut", config.cut, "cut position k (default N-1)")->check(CLI::PositiveNumber);
    maximize->add_option("--restarts", config.restarts, "random restarts")->check(CLI::PositiveNumber);
    maximize->add_option("--max-iterations", config.max_iterations, "iterations per restart")
        ->check(CLI::PositiveNumber);
    maximize->add_option("--tolerance", config.tolerance, "convergence tolerance")->check(CLI::PositiveNumber);
    common(maximize);

    CLI::App *sweep = app.add_subcommand("sweep", "bound table over all partitions");
    sweep->add_option("--max-n", config.max_n, "largest N")->check(CLI::PositiveNumber);
    sweep->add_option("--min-n", config.min_n, "smallest N (default max-n)")->check(CLI::PositiveNumber);
    sweep->add_option("--max-d", config.max_d, "dim V columns for d = 1..max-d")->check(CLI::PositiveNumber);
    common(sweep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }
    config.command = app.get_subcommands().front()->get_name();

    CommandOutput result;
    try {
        result = dispatch(config);
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    if (config.format == OutputFormat::json)
        out << result.report.dump(2) << '\n';
    else
        out << render_text(result.report);
    return result.exit_code;
}

} // namespace schurweyl::cli
