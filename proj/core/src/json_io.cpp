#include "schurweyl/json_io.hpp"

#include "schurweyl/error.hpp"

#include <istream>
#include <ostream>

namespace schurweyl {

nlohmann::json state_to_json(const TensorState &psi) {
    nlohmann::json amplitudes = nlohmann::json::array();
    for (std::int64_t i = 0; i < psi.size(); ++i)
        amplitudes.push_back({psi[i].real(), psi[i].imag()});
    return {{"d", psi.local_dim()}, {"n", psi.n_factors()}, {"amplitudes", std::move(amplitudes)}};
}

TensorState state_from_json(const nlohmann::json &j) {
    try {
        const int d = j.at("d").get<int>();
        const int n = j.at("n").get<int>();
        if (d < 1 || n < 1)
            throw ParseError("state needs d >= 1 and n >= 1");
        const auto size = checked_dimension(d, n);
        const auto &amplitudes = j.at("amplitudes");
        if (!amplitudes.is_array() || static_cast<std::int64_t>(amplitudes.size()) != size)
            throw ParseError("expected " + std::to_string(size) + " amplitudes");
        Eigen::VectorXcd v(size);
        for (std::int64_t i = 0; i < size; ++i) {
            const auto &pair = amplitudes[static_cast<std::size_t>(i)];
            if (!pair.is_array() || pair.size() != 2)
                throw ParseError("amplitude " + std::to_string(i) + " is not a [re, im] pair");
            v[i] = Complex(pair[0].get<double>(), pair[1].get<double>());
        }
        return TensorState(d, n, std::move(v));
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("malformed state: ") + e.what());
    }
}

void write_state(std::ostream &out, const TensorState &psi) { out << state_to_json(psi).dump() << '\n'; }

TensorState read_state(std::istream &in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("malformed state: ") + e.what());
    }
    return state_from_json(j);
}

nlohmann::json rational_to_json(const Rational &r) {
    return {{"exact", to_string(r)}, {"value", to_double(r)}};
}

nlohmann::json report_to_json(const MaximizationReport &report, bool include_state) {
    nlohmann::json runs = nlohmann::json::array();
    for (const auto &run : report.runs) {
        nlohmann::json r = {{"index", run.index},
                            {"from_seed_state", run.from_seed_state},
                            {"iterations", run.iterations},
                            {"converged", run.converged},
                            {"monotone", run.monotone},
                            {"objective", run.objective},
                            {"lambda1_sq", run.lambda1_sq}};
        if (!run.trace.empty())
            r["trace"] = run.trace;
        runs.push_back(std::move(r));
    }
    nlohmann::json out = {{"best_lambda1_sq", report.best_lambda1_sq},
                          {"best_restart", report.best_restart},
                          {"restarts", report.restarts},
                          {"all_monotone", report.all_monotone},
                          {"runs", std::move(runs)}};
    out["analytic_bound"] = report.analytic_bound ? rational_to_json(*report.analytic_bound) : nlohmann::json();
    if (include_state)
        out["maximizer"] = state_to_json(report.maximizer);
    return out;
}

} // namespace schurweyl
