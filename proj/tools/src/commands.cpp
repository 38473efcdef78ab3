#include "schurweyl/cli/commands.hpp"

#include "schurweyl/cli/invariant_suite.hpp"
#include "schurweyl/error.hpp"
#include "schurweyl/json_io.hpp"
#include "schurweyl/projectors.hpp"
#include "schurweyl/special_states.hpp"
#include "schurweyl/spectral.hpp"
#include "schurweyl/text_format.hpp"
#include "schurweyl/young.hpp"

#include <cmath>

namespace schurweyl::cli {

namespace {

nlohmann::json big_to_json(const BigInt &z) {
    if (z.fits_slong_p())
        return z.get_si();
    return z.get_str();
}

nlohmann::json header(const RunConfig &config, const std::string &command) {
    return {{"schema", "1"}, {"command", command}, {"seed", config.seed}};
}

int default_d(const RunConfig &config, const YoungDiagram &diagram) {
    const int d = config.d.value_or(diagram.n_rows());
    if (d < 1)
        throw InvalidArgument("d must be at least 1");
    return d;
}

} // namespace

CommandOutput cmd_bound(const RunConfig &config) {
    const YoungDiagram diagram = parse_partition(config.partition);
    const BoundResult best = theorem1_bound(diagram);
    nlohmann::json report = header(config, "bound");
    report["partition"] = to_string(diagram);
    report["n"] = diagram.n_boxes();
    nlohmann::json boxes = nlohmann::json::array();
    for (const auto &[box, value] : bounds_per_box(diagram))
        boxes.push_back({{"box", to_string(box)}, {"bound", to_string(value)}, {"value", to_double(value)}});
    report["boxes"] = std::move(boxes);
    report["max"] = to_string(best.value);
    report["max_value"] = to_double(best.value);
    report["witness"] = to_string(best.witness);
    report["entropy_lower_bound"] = entropy_lower_bound(diagram);
    return {kExitOk, std::move(report)};
}

CommandOutput cmd_tableaux(const RunConfig &config) {
    const YoungDiagram diagram = parse_partition(config.partition);
    const int d = default_d(config, diagram);
    nlohmann::json report = header(config, "tableaux");
    report["partition"] = to_string(diagram);
    report["d"] = d;
    report["dim_S"] = big_to_json(dim_irrep_SN(diagram));
    report["dim_V"] = big_to_json(dim_irrep_Ud(diagram, d));
    nlohmann::json list = nlohmann::json::array();
    for (const auto &t : enumerate_standard_tableaux(diagram))
        list.push_back({{"tableau", to_string(t)},
                        {"row_ordered", t.is_row_ordered()},
                        {"column_ordered", t.is_column_ordered()}});
    report["count"] = list.size();
    report["tableaux"] = std::move(list);
    return {kExitOk, std::move(report)};
}

CommandOutput cmd_verify(const RunConfig &config) {
    const YoungDiagram diagram = parse_partition(config.partition);
    const int d = default_d(config, diagram);
    if (config.samples < 1)
        throw InvalidArgument("samples must be at least 1");
    SuiteOptions options;
    options.seed = config.seed;
    options.samples = config.samples;
    if (config.tolerance)
        options.tolerance = *config.tolerance;
    const auto checks = run_invariant_suite(diagram, d, options);

    nlohmann::json report = header(config, "verify");
    report["partition"] = to_string(diagram);
    report["d"] = d;
    report["dimension"] = checked_dimension(d, diagram.n_boxes());
    report["samples"] = config.samples;
    nlohmann::json list = nlohmann::json::array();
    bool passed = true;
    for (const auto &c : checks) {
        passed = passed && c.passed;
        list.push_back({{"name", c.name},
                        {"residual", c.residual},
                        {"tolerance", c.tolerance},
                        {"passed", c.passed},
                        {"skipped", c.skipped},
                        {"detail", c.detail}});
    }
    report["checks"] = std::move(list);
    report["passed"] = passed;
    return {passed ? kExitOk : kExitVerificationFailed, std::move(report)};
}

CommandOutput cmd_maximize(const RunConfig &config) {
    const YoungDiagram diagram = parse_partition(config.partition);
    const int n = diagram.n_boxes();
    if (n < 2)
        throw InvalidArgument("maximize requires N ≥ 2");
    const int d = default_d(config, diagram);
    const int cut = config.cut.value_or(n - 1);
    if (cut < 1 || cut > n - 1)
        throw InvalidArgument("cut must satisfy 1 <= k <= N-1");
    if (d < diagram.n_rows())
        throw InvalidArgument("V^nu ⊗ S^nu is empty for d = " + std::to_string(d) + " < c_1 = " +
                              std::to_string(diagram.n_rows()));
    checked_dimension(d, n);

    const auto basis = irrep_block_basis(diagram, d);
    const SubspaceProjector projector(basis);

    MaximizationConfig mc;
    mc.restarts = config.restarts;
    mc.max_iterations = config.max_iterations;
    mc.tolerance = config.tolerance.value_or(1e-10);
    mc.seed = config.seed;

    // The single-factor cuts are the ones the analytic bound speaks about.
    const bool single_factor_cut = cut == n - 1 || cut == 1;
    std::optional<BoundResult> bound;
    if (single_factor_cut) {
        bound = theorem1_bound(diagram);
        TensorState seed = optimizer_state(diagram, bound->witness, OrthonormalFrame::computational(d, d), d);
        if (cut != n - 1)
            seed = swap_factors(seed, 1, n);
        mc.seed_states.push_back(std::move(seed));
    }

    MaximizationReport result = max_lambda1_over_subspace(projector, cut, mc);
    if (bound)
        result.analytic_bound = bound->value;
    const double fixed_point = verify_fixed_point(result.maximizer, projector, cut);

    nlohmann::json report = header(config, "maximize");
    report["partition"] = to_string(diagram);
    report["d"] = d;
    report["cut"] = cut;
    report["subspace_dimension"] = basis.size();
    report["max_iterations"] = mc.max_iterations;
    report["tolerance"] = mc.tolerance;
    report["numeric_max"] = result.best_lambda1_sq;
    report["fixed_point_residual"] = fixed_point;
    report["all_monotone"] = result.all_monotone;
    bool passed = result.all_monotone;
    if (bound) {
        const double gap = to_double(bound->value) - result.best_lambda1_sq;
        report["analytic_bound"] = to_string(bound->value);
        report["witness"] = to_string(bound->witness);
        report["gap"] = gap;
        passed = passed && std::abs(gap) <= kAnalyticSlack;
    } else {
        report["analytic_bound"] = nullptr;
        report["witness"] = nullptr;
        report["gap"] = nullptr;
    }
    report["passed"] = passed;
    report["report"] = report_to_json(result);
    return {passed ? kExitOk : kExitVerificationFailed, std::move(report)};
}

CommandOutput cmd_sweep(const RunConfig &config) {
    const int min_n = config.min_n.value_or(config.max_n);
    if (min_n < 2 || config.max_n < min_n)
        throw InvalidArgument("sweep needs 2 <= min-n <= max-n");
    if (config.max_d < 1)
        throw InvalidArgument("max-d must be at least 1");
    nlohmann::json report = header(config, "sweep");
    report["min_n"] = min_n;
    report["max_n"] = config.max_n;
    report["max_d"] = config.max_d;
    nlohmann::json rows = nlohmann::json::array();
    for (int n = min_n; n <= config.max_n; ++n)
        for (const auto &diagram : partitions_of(n)) {
            const BoundResult best = theorem1_bound(diagram);
            nlohmann::json dims = nlohmann::json::array();
            for (int d = 1; d <= config.max_d; ++d)
                dims.push_back(big_to_json(dim_irrep_Ud(diagram, d)));
            rows.push_back({{"partition", to_string(diagram)},
                            {"n", n},
                            {"bound", to_string(best.value)},
                            {"bound_value", to_double(best.value)},
                            {"witness", to_string(best.witness)},
                            {"entropy_lower_bound", entropy_lower_bound(diagram)},
                            {"dim_S", big_to_json(dim_irrep_SN(diagram))},
                            {"dim_V", std::move(dims)}});
        }
    report["count"] = rows.size();
    report["partitions"] = std::move(rows);
    return {kExitOk, std::move(report)};
}

CommandOutput dispatch(const RunConfig &config) {
    if (config.command == "bound")
        return cmd_bound(config);
    if (config.command == "tableaux")
        return cmd_tableaux(config);
    if (config.command == "verify")
        return cmd_verify(config);
    if (config.command == "maximize")
        return cmd_maximize(config);
    if (config.command == "sweep")
        return cmd_sweep(config);
    throw InvalidArgument("unknown command '" + config.command + "'");
}

} // namespace schurweyl::cli
