// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "schurweyl/cli/commands.hpp"
#include "schurweyl/orthogonal_form.hpp"
#include "schurweyl/projectors.hpp"
#include "schurweyl/special_states.hpp"
#include "schurweyl/spectral.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

using namespace schurweyl;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

bool report(int index, const char *title, bool passed, const std::string &detail) {
    std::printf("criterion %d %-34s %s  %s\n", index, title, passed ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    return passed;
}

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", x);
    return buf;
}

nlohmann::json bound_report(const std::string &partition) {
    cli::RunConfig config;
    config.command = "bound";
    config.partition = partition;
    return cli::dispatch(config).report;
}

std::vector<std::string> box_bounds(const nlohmann::json &j) {
    std::vector<std::string> out;
    for (const auto &b : j["boxes"])
        out.push_back(b["bound"].get<std::string>());
    return out;
}

std::vector<YoungDiagram> shapes_up_to(int max_n, int min_n = 1) {
    std::vector<YoungDiagram> out;
    for (int n = min_n; n <= max_n; ++n)
        for (auto &y : partitions_of(n))
            out.push_back(std::move(y));
    return out;
}

bool criterion_exact_bounds() {
    struct Case {
        const char *partition;
        std::vector<std::string> per_box;
        const char *max;
    };
    const std::vector<Case> cases{
        {"3,2,1", {"8/15", "2/3", "1"}, "1"},
        {"2,2,2,1", {"2/5", "1/3"}, "2/5"},
        {"3,3,3,2,1", {"8/21", "2/5", "1/3"}, "2/5"},
        {"3,3,1", {"3/5", "1/2"}, "3/5"},
    };
    int matched = 0, total = 0;
    for (const auto &c : cases) {
        const auto j = bound_report(c.partition);
        ++total;
        matched += box_bounds(j) == c.per_box && j["max"] == c.max;
    }
    for (int n = 2; n <= 10; ++n) {
        const std::string boson = std::to_string(n);
        std::string fermion = "1";
        for (int i = 1; i < n; ++i)
            fermion += ",1";
        total += 2;
        matched += bound_report(boson)["max"] == "1";
        matched += bound_report(fermion)["max"] == "1/" + std::to_string(n);
    }
    return report(1, "exact bound reproduction", matched == total,
                  std::to_string(matched) + "/" + std::to_string(total) + " exact matches");
}

bool criterion_numeric_vs_analytic() {
    const auto start = Clock::now();
    double worst = 0.0, random_worst = 0.0, excess = -INFINITY;
    std::string where;
    bool monotone = true;
    int count = 0;
    for (const auto &y : shapes_up_to(4, 2)) {
        cli::RunConfig config;
        config.command = "maximize";
        config.partition = to_string(y);
        const auto j = cli::dispatch(config).report;
        const double bound = to_double(theorem1_bound(y).value);
        const double gap = std::abs(j["gap"].get<double>());
        monotone = monotone && j["all_monotone"].get<bool>();
        if (gap >= worst) {
            worst = gap;
            where = to_string(y);
        }
        double random_best = 0.0;
        for (const auto &run : j["report"]["runs"]) {
            const double value = run["lambda1_sq"].get<double>();
            excess = std::max(excess, value - bound);
            if (!run["from_seed_state"].get<bool>())
                random_best = std::max(random_best, value);
        }
        random_worst = std::max(random_worst, bound - random_best);
        ++count;
    }
    const double elapsed = seconds_since(start);
    return report(2, "numeric maximum vs analytic bound",
                  worst <= 1e-6 && excess <= 1e-7 && monotone && elapsed < 60.0,
                  std::to_string(count) + " diagrams, max |gap| " + sci(worst) + " at " + where +
                      ", max run excess over bound " + sci(excess) + ", random-start gap " + sci(random_worst) +
                      (monotone ? ", monotone" : ", NOT monotone") + ", " + sci(elapsed) + " s");
}

bool criterion_projector_algebra() {
    const auto start = Clock::now();
    double idem = 0, herm = 0, orth = 0, resolution = 0;
    std::mt19937_64 rng(2024);
    for (int d = 2; d <= 3; ++d)
        for (int n = 1; n <= 4; ++n) {
            std::vector<OperatorExpr> ps;
            for (const auto &y : partitions_of(n))
                for (const auto &t : enumerate_standard_tableaux(y))
                    ps.push_back(orthogonal_projector(t));
            for (int s = 0; s < 20; ++s) {
                const auto x = TensorState::random(d, n, rng);
                const auto y = TensorState::random(d, n, rng);
                TensorState sum(d, n);
                std::vector<TensorState> px;
                for (const auto &p : ps) {
                    px.push_back(p.apply(x));
                    sum = sum + px.back();
                    idem = std::max(idem, distance(p.apply(px.back()), px.back()));
                    herm = std::max(herm, std::abs(y.inner(px.back()) - p.apply(y).inner(x)));
                }
                for (std::size_t a = 0; a < ps.size(); ++a)
                    for (std::size_t b = 0; b < ps.size(); ++b)
                        if (a != b)
                            orth = std::max(orth, ps[a].apply(px[b]).norm());
                resolution = std::max(resolution, distance(sum, x));
            }
        }
    const double worst = std::max({idem, herm, orth, resolution});
    const double elapsed = seconds_since(start);
    return report(3, "projector algebra", worst <= 1e-9 && elapsed < 120.0,
                  "idempotence " + sci(idem) + ", hermiticity " + sci(herm) + ", orthogonality " + sci(orth) +
                      ", resolution " + sci(resolution) + ", " + sci(elapsed) + " s");
}

bool criterion_closed_forms() {
    double worst = 0, closed_idem = 0, recursive_idem = 0;
    int tableaux = 0;
    std::mt19937_64 rng(77);
    for (const auto &y : shapes_up_to(4))
        for (const auto &t : enumerate_standard_tableaux(y)) {
            if (!t.is_row_ordered() && !t.is_column_ordered())
                continue;
            ++tableaux;
            const auto c = closed_form_projector(t);
            const auto p = orthogonal_projector(t);
            for (int d = 1; d <= 3; ++d)
                for (int s = 0; s < 20; ++s) {
                    const auto x = TensorState::random(d, y.n_boxes(), rng);
                    const auto cx = c.apply(x);
                    const auto px = p.apply(x);
                    worst = std::max(worst, distance(cx, px));
                    closed_idem = std::max(closed_idem, distance(c.apply(cx), cx));
                    recursive_idem = std::max(recursive_idem, distance(p.apply(px), px));
                }
        }
    return report(4, "closed-form equivalence", worst <= 1e-10,
                  std::to_string(tableaux) + " tableaux, max deviation " + sci(worst) +
                      "; idempotence closed " + sci(closed_idem) + " vs recursive " + sci(recursive_idem));
}

bool criterion_orthogonal_form() {
    double aligned_worst = 0, invariant_worst = 0;
    // Basis-independent form: for any unit v in Im(P_t), <v|U_k|v> = M_k[t,t]
    // and ||P_s U_k v|| = |M_k[s,t]|.
    std::mt19937_64 rng(5);
    for (const auto &y : shapes_up_to(4, 2))
        for (int d = y.n_rows(); d <= 3; ++d) {
            const int n = y.n_boxes();
            const auto aligned = aligned_irrep_basis(y, d);
            const auto &tabs = aligned.tableaux->tableaux();
            for (int k = 1; k < n; ++k) {
                const auto &m = adjacent_transposition_matrix(y, k).entries;
                const auto swap = Permutation::transposition(n, k, k + 1);
                for (std::size_t t = 0; t < tabs.size(); ++t) {
                    for (std::size_t a = 0; a < aligned.multiplicity(); ++a) {
                        TensorState expected(d, n);
                        for (std::size_t s = 0; s < tabs.size(); ++s)
                            expected = expected + Complex(m(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(t))) *
                                                      aligned.vectors[s][a];
                        aligned_worst =
                            std::max(aligned_worst, distance(apply_permutation(swap, aligned.vectors[t][a]), expected));
                    }
                    const SubspaceProjector sector(subspace_basis(tabs[t], d));
                    const auto v = sector.random_state(rng);
                    const auto moved = apply_permutation(swap, v);
                    const auto ti = static_cast<Eigen::Index>(t);
                    invariant_worst = std::max(invariant_worst, std::abs(v.inner(moved) - Complex(m(ti, ti))));
                    for (std::size_t s = 0; s < tabs.size(); ++s) {
                        const double weight = orthogonal_projector(tabs[s]).apply(moved).norm();
                        invariant_worst =
                            std::max(invariant_worst, std::abs(weight - std::abs(m(static_cast<Eigen::Index>(s), ti))));
                    }
                }
            }
        }

    // The (2,1) example, read off tensor space and compared with -1/2 and sqrt(3/4).
    const YoungDiagram y({2, 1});
    const auto b = aligned_irrep_basis(y, 2);
    const auto swap = Permutation::transposition(3, 2, 3);
    Eigen::Matrix2d from_tensor_space;
    for (int s = 0; s < 2; ++s)
        for (int t = 0; t < 2; ++t)
            from_tensor_space(s, t) = b.vectors[static_cast<std::size_t>(s)][0]
                                          .inner(apply_permutation(swap, b.vectors[static_cast<std::size_t>(t)][0]))
                                          .real();
    Eigen::Matrix2d explicit_values;
    explicit_values << -0.5, std::sqrt(0.75), std::sqrt(0.75), 0.5;
    const double example = (from_tensor_space - explicit_values).cwiseAbs().maxCoeff();

    const double worst = std::max({aligned_worst, invariant_worst, example});
    return report(5, "orthogonal-form cross-check", worst <= 1e-9,
                  "aligned basis " + sci(aligned_worst) + ", basis-free " + sci(invariant_worst) + ", (2,1) example " +
                      sci(example));
}

bool criterion_confinement() {
    double worst = 0;
    int states = 0;
    for (const auto &y : shapes_up_to(4, 2))
        for (int d = y.n_rows(); d <= 3; ++d)
            for (const auto &t : enumerate_standard_tableaux(y)) {
                const auto lower = orthogonal_projector(remove_largest(t));
                for (const auto &v : subspace_basis(t, d)) {
                    ++states;
                    const auto r = schmidt_decompose(v, y.n_boxes() - 1);
                    for (std::size_t i = 0; i < r.coefficients.size(); ++i)
                        if (r.coefficients[i] > 1e-8)
                            worst = std::max(worst, projector_residual(lower, r.left_vectors[i]));
                }
            }
    return report(6, "Schmidt confinement", worst <= 1e-8,
                  std::to_string(states) + " basis states, max residual " + sci(worst));
}

bool criterion_saturation() {
    double saturation = 0, fixed_point = 0;
    int boxes = 0;
    std::mt19937_64 rng(11);
    for (const auto &y : shapes_up_to(4, 2)) {
        const int d = y.n_rows();
        const int n = y.n_boxes();
        for (const Box &box : removable_boxes(y)) {
            ++boxes;
            const auto sector = subspace_basis(optimizer_tableau(y, box), d);
            for (int kind = 0; kind < 2; ++kind) {
                const auto frame = kind == 0 ? OrthonormalFrame::computational(d, d)
                                             : OrthonormalFrame::from_unitary(random_unitary(d, rng), d);
                const auto psi = optimizer_state(y, box, frame, d);
                saturation = std::max(saturation, std::abs(schmidt_decompose(psi, n - 1).lambda1_sq() -
                                                           to_double(bound_for_box(y, box))));
                fixed_point = std::max(fixed_point, verify_fixed_point(psi, sector, n - 1));
            }
        }
    }
    return report(7, "saturating-state verification", saturation <= 1e-8 && fixed_point <= 1e-7,
                  std::to_string(boxes) + " boxes, saturation " + sci(saturation) + ", fixed point " +
                      sci(fixed_point));
}

bool criterion_entropy() {
    double margin = INFINITY;
    int subspaces = 0;
    std::mt19937_64 rng(8);
    for (const auto &y : shapes_up_to(4, 2)) {
        const int d = y.n_rows();
        const int n = y.n_boxes();
        const double floor = entropy_lower_bound(y);
        std::vector<SubspaceProjector> spaces{SubspaceProjector(irrep_block_basis(y, d))};
        for (const auto &t : enumerate_standard_tableaux(y))
            spaces.emplace_back(subspace_basis(t, d));
        for (const auto &space : spaces) {
            ++subspaces;
            for (int i = 0; i < 200; ++i)
                margin = std::min(margin, entanglement_entropy(space.random_state(rng), n - 1) - floor);
        }
    }
    return report(8, "entropy corollary", margin >= -1e-7,
                  std::to_string(subspaces) + " subspaces x 200 states, min S - bound " + sci(margin));
}

bool criterion_dimensions() {
    bool ok = true;
    for (int n = 1; n <= 8; ++n) {
        BigInt sum = 0;
        for (const auto &y : partitions_of(n))
            sum += dim_irrep_SN(y) * dim_irrep_SN(y);
        ok = ok && sum == factorial(n);
    }
    for (int n = 1; n <= 6; ++n)
        for (int d = 1; d <= 4; ++d) {
            BigInt sum = 0, power = 1;
            for (const auto &y : partitions_of(n))
                sum += dim_irrep_SN(y) * dim_irrep_Ud(y, d);
            for (int i = 0; i < n; ++i)
                power *= d;
            ok = ok && sum == power;
        }
    return report(9, "dimension identities", ok, "sum dim S^2 = N! (N <= 8), sum dim S dim V = d^N (N <= 6, d <= 4)");
}

} // namespace

int main() {
    bool all = true;
    all &= criterion_exact_bounds();
    all &= criterion_numeric_vs_analytic();
    all &= criterion_projector_algebra();
    all &= criterion_closed_forms();
    all &= criterion_orthogonal_form();
    all &= criterion_confinement();
    all &= criterion_saturation();
    all &= criterion_entropy();
    all &= criterion_dimensions();
    std::printf("%s\n", all ? "all acceptance criteria passed" : "acceptance FAILED");
    return all ? 0 : 1;
}
