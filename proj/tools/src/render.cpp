#include "schurweyl/cli/commands.hpp"

#include <fmt/format.h>

#include <string>

namespace schurweyl::cli {

namespace {

using nlohmann::json;

std::string num(const json &v) {
    if (v.is_null())
        return "-";
    if (v.is_number_float())
        return fmt::format("{:.12g}", v.get<double>());
    if (v.is_string())
        return v.get<std::string>();
    return v.dump();
}

std::string pad(const std::string &s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

void render_bound(const json &r, std::string &out) {
    out += fmt::format("partition {}  (N = {})\n", num(r["partition"]), num(r["n"]));
    out += fmt::format("{} {} {}\n", pad("box", 8), pad("bound", 12), "value");
    for (const auto &b : r["boxes"])
        out += fmt::format("{} {} {}\n", pad(num(b["box"]), 8), pad(num(b["bound"]), 12), num(b["value"]));
    out += fmt::format("max {} at {}\n", num(r["max"]), num(r["witness"]));
    out += fmt::format("entropy lower bound {}\n", num(r["entropy_lower_bound"]));
}

void render_tableaux(const json &r, std::string &out) {
    out += fmt::format("partition {}  d = {}  dim S = {}  dim V = {}\n", num(r["partition"]), num(r["d"]),
                       num(r["dim_S"]), num(r["dim_V"]));
    for (const auto &t : r["tableaux"]) {
        std::string flags;
        if (t["row_ordered"].get<bool>())
            flags += " row-ordered";
        if (t["column_ordered"].get<bool>())
            flags += " column-ordered";
        out += fmt::format("{}{}\n", num(t["tableau"]), flags);
    }
    out += fmt::format("{} tableaux\n", num(r["count"]));
}

void render_verify(const json &r, std::string &out) {
    out += fmt::format("partition {}  d = {}  d^N = {}  samples = {}\n", num(r["partition"]), num(r["d"]),
                       num(r["dimension"]), num(r["samples"]));
    for (const auto &c : r["checks"]) {
        const std::string status = c["skipped"].get<bool>() ? "SKIP" : c["passed"].get<bool>() ? "PASS" : "FAIL";
        out += fmt::format("{} {} residual {:.3e} (tol {:.1e}) {}\n", status, pad(num(c["name"]), 38),
                           c["residual"].get<double>(), c["tolerance"].get<double>(), num(c["detail"]));
    }
    out += r["passed"].get<bool>() ? "all checks passed\n" : "verification FAILED\n";
}

void render_maximize(const json &r, std::string &out) {
    out += fmt::format("partition {}  d = {}  cut = {}  dim U = {}\n", num(r["partition"]), num(r["d"]),
                       num(r["cut"]), num(r["subspace_dimension"]));
    const json &rep = r["report"];
    out += fmt::format("restarts {}  best restart {}  all monotone {}\n", num(rep["restarts"]),
                       num(rep["best_restart"]), r["all_monotone"].get<bool>() ? "yes" : "no");
    out += fmt::format("numeric max lambda_1^2 {}\n", num(r["numeric_max"]));
    out += fmt::format("analytic bound {} at {}\n", num(r["analytic_bound"]), num(r["witness"]));
    out += fmt::format("gap {}\n", num(r["gap"]));
    out += fmt::format("fixed-point residual {}\n", num(r["fixed_point_residual"]));
    out += r["passed"].get<bool>() ? "agreement within slack\n" : "numeric and analytic values DISAGREE\n";
}

void render_sweep(const json &r, std::string &out) {
    out += fmt::format("{} {} {} {} {} {}\n", pad("partition", 14), pad("bound", 8), pad("witness", 8),
                       pad("entropy", 14), pad("dim S", 8), fmt::format("dim V (d = 1..{})", num(r["max_d"])));
    for (const auto &p : r["partitions"]) {
        std::string dims;
        for (const auto &v : p["dim_V"])
            dims += (dims.empty() ? "" : " ") + num(v);
        out += fmt::format("{} {} {} {} {} {}\n", pad(num(p["partition"]), 14), pad(num(p["bound"]), 8),
                           pad(num(p["witness"]), 8), pad(num(p["entropy_lower_bound"]), 14),
                           pad(num(p["dim_S"]), 8), dims);
    }
    out += fmt::format("{} partitions\n", num(r["count"]));
}

} // namespace

std::string render_text(const json &report) {
    std::string out;
    const std::string command = report.at("command").get<std::string>();
    if (command == "bound")
        render_bound(report, out);
    else if (command == "tableaux")
        render_tableaux(report, out);
    else if (command == "verify")
        render_verify(report, out);
    else if (command == "maximize")
        render_maximize(report, out);
    else if (command == "sweep")
        render_sweep(report, out);
    out += fmt::format("seed {}\n", num(report["seed"]));
    return out;
}

} // namespace schurweyl::cli
