#include "schurweyl/spectral.hpp"

#include "schurweyl/error.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

namespace schurweyl {

namespace {

using RowMajorMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

std::int64_t int_pow(int base, int exponent) {
    std::int64_t out = 1;
    for (int i = 0; i < exponent; ++i)
        out *= base;
    return out;
}

void require_cut(const TensorState &psi, int k) {
    if (k < 1 || k > psi.n_factors() - 1)
        throw InvalidArgument("cut k must satisfy 1 <= k <= N-1");
}

Eigen::Map<const RowMajorMatrix> amplitude_matrix(const TensorState &psi, int k) {
    const auto rows = int_pow(psi.local_dim(), k);
    const auto cols = psi.size() / rows;
    return {psi.amplitudes().data(), rows, cols};
}

struct TopPair {
    double lambda1_sq = 0.0;
    TensorState left;
    TensorState right;
};

TopPair top_schmidt_pair(const TensorState &psi, int k) {
    const auto m = amplitude_matrix(psi, k);
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const double s = svd.singularValues()(0);
    return {s * s, TensorState(psi.local_dim(), k, svd.matrixU().col(0)),
            TensorState(psi.local_dim(), psi.n_factors() - k, svd.matrixV().col(0).conjugate())};
}

} // namespace

Eigen::MatrixXcd reduced_density_matrix(const TensorState &psi, std::span<const int> keep) {
    const int n = psi.n_factors();
    std::vector<bool> kept(static_cast<std::size_t>(n), false);
    int n_keep = 0;
    for (int p : keep) {
        if (p < 1 || p > n)
            throw InvalidArgument("kept factor out of range");
        if (!kept[static_cast<std::size_t>(p - 1)])
            ++n_keep;
        kept[static_cast<std::size_t>(p - 1)] = true;
    }
    if (n_keep == 0 || n_keep == n)
        throw InvalidArgument("keep set must be a nonempty proper subset of the factors");

    const int d = psi.local_dim();
    const auto kept_dim = int_pow(d, n_keep);
    const auto traced_dim = psi.size() / kept_dim;
    Eigen::MatrixXcd m(kept_dim, traced_dim);
    std::vector<int> digits(static_cast<std::size_t>(n), 0);
    for (std::int64_t flat = 0; flat < psi.size(); ++flat) {
        std::int64_t rest = flat;
        for (int p = n - 1; p >= 0; --p) {
            digits[static_cast<std::size_t>(p)] = static_cast<int>(rest % d);
            rest /= d;
        }
        std::int64_t row = 0;
        std::int64_t col = 0;
        for (int p = 0; p < n; ++p) {
            if (kept[static_cast<std::size_t>(p)])
                row = row * d + digits[static_cast<std::size_t>(p)];
            else
                col = col * d + digits[static_cast<std::size_t>(p)];
        }
        m(row, col) = psi[flat];
    }
    return m * m.adjoint();
}

SchmidtResult schmidt_decompose(const TensorState &psi, int k) {
    require_cut(psi, k);
    const auto m = amplitude_matrix(psi, k);
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    SchmidtResult out;
    out.cut = k;
    const auto &s = svd.singularValues();
    for (Eigen::Index i = 0; i < s.size(); ++i) {
        out.coefficients.push_back(s(i));
        out.left_vectors.emplace_back(psi.local_dim(), k, svd.matrixU().col(i));
        out.right_vectors.emplace_back(psi.local_dim(), psi.n_factors() - k, svd.matrixV().col(i).conjugate());
    }
    return out;
}

std::vector<double> schmidt_coefficients(const TensorState &psi, int k) {
    require_cut(psi, k);
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(amplitude_matrix(psi, k));
    const auto &s = svd.singularValues();
    return {s.data(), s.data() + s.size()};
}

double entropy_of_probabilities(std::span<const double> probabilities) {
    double s = 0.0;
    for (double p : probabilities)
        if (p > 0.0)
            s -= p * std::log(p);
    return s;
}

double entanglement_entropy(const TensorState &psi, int k) {
    std::vector<double> p;
    for (double lambda : schmidt_coefficients(psi, k))
        p.push_back(lambda * lambda);
    return entropy_of_probabilities(p);
}

SubspaceProjector::SubspaceProjector(std::span<const TensorState> basis) {
    if (basis.empty())
        throw InvalidArgument("empty subspace basis");
    local_dim_ = basis.front().local_dim();
    n_factors_ = basis.front().n_factors();
    columns_.resize(basis.front().size(), static_cast<Eigen::Index>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        require_same_space(basis.front(), basis[i]);
        columns_.col(static_cast<Eigen::Index>(i)) = basis[i].amplitudes();
    }
    const Eigen::MatrixXcd gram = columns_.adjoint() * columns_;
    const double deviation = (gram - Eigen::MatrixXcd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
    if (deviation > 1e-8)
        throw InvalidArgument("subspace basis is not orthonormal (deviation " + std::to_string(deviation) + ")");
}

TensorState SubspaceProjector::apply(const TensorState &psi) const {
    if (psi.local_dim() != local_dim_ || psi.n_factors() != n_factors_)
        throw InvalidArgument("state does not live on the subspace's tensor space");
    return TensorState(local_dim_, n_factors_, columns_ * (columns_.adjoint() * psi.amplitudes()));
}

double SubspaceProjector::distance_from_subspace(const TensorState &psi) const { return distance(psi, apply(psi)); }

TensorState SubspaceProjector::random_state(std::mt19937_64 &rng) const {
    std::normal_distribution<double> gauss;
    Eigen::VectorXcd c(columns_.cols());
    for (Eigen::Index i = 0; i < c.size(); ++i) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        c[i] = Complex(re, im);
    }
    c.normalize();
    return TensorState(local_dim_, n_factors_, columns_ * c);
}

namespace {

RestartReport run_restart(const SubspaceProjector &projector, int k, const MaximizationConfig &config,
                          std::size_t index, TensorState &final_state) {
    RestartReport report;
    report.index = index;
    const int d = projector.local_dim();
    const int n = projector.n_factors();

    TensorState x;
    const auto n_random = static_cast<std::size_t>(config.restarts);
    if (index < n_random) {
        std::seed_seq seq{config.seed, static_cast<std::uint64_t>(index)};
        std::mt19937_64 rng(seq);
        x = tensor_product(TensorState::random(d, k, rng), TensorState::random(d, n - k, rng));
    } else {
        report.from_seed_state = true;
        const TopPair seed = top_schmidt_pair(config.seed_states[index - n_random], k);
        x = tensor_product(seed.left, seed.right);
    }

    double previous = -1.0;
    for (int it = 1; it <= config.max_iterations; ++it) {
        const TensorState y = projector.apply(x);
        const double objective = y.amplitudes().squaredNorm();
        report.iterations = it;
        if (objective <= std::numeric_limits<double>::min())
            break; // seed orthogonal to U
        if (config.record_trace)
            report.trace.push_back(objective);
        if (objective < previous - 1e-12)
            report.monotone = false;
        report.objective = objective;

        const TensorState psi = (1.0 / std::sqrt(objective)) * y;
        const TopPair top = top_schmidt_pair(psi, k);
        final_state = psi;
        report.lambda1_sq = top.lambda1_sq;
        if (it > 1 && objective - previous < config.tolerance) {
            report.converged = true;
            break;
        }
        previous = objective;
        x = tensor_product(top.left, top.right);
    }
    return report;
}

} // namespace

MaximizationReport max_lambda1_over_subspace(const SubspaceProjector &projector, int k,
                                             const MaximizationConfig &config) {
    if (k < 1 || k > projector.n_factors() - 1)
        throw InvalidArgument("cut k must satisfy 1 <= k <= N-1");
    if (config.restarts < 0 || config.max_iterations < 1 || !(config.tolerance > 0.0))
        throw InvalidArgument("invalid maximization configuration");
    for (const auto &s : config.seed_states)
        if (s.local_dim() != projector.local_dim() || s.n_factors() != projector.n_factors())
            throw InvalidArgument("seed state does not live on the subspace's tensor space");

    const std::size_t total = static_cast<std::size_t>(config.restarts) + config.seed_states.size();
    if (total == 0)
        throw InvalidArgument("at least one restart is required");
    std::vector<RestartReport> runs(total);
    std::vector<TensorState> states(total);

    unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, total));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < total; i = next++)
            runs[i] = run_restart(projector, k, config, i, states[i]);
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
    }

    MaximizationReport report;
    report.restarts = static_cast<int>(total);
    report.best_lambda1_sq = -1.0;
    for (std::size_t i = 0; i < total; ++i) {
        report.all_monotone = report.all_monotone && runs[i].monotone;
        if (runs[i].lambda1_sq > report.best_lambda1_sq) {
            report.best_lambda1_sq = runs[i].lambda1_sq;
            report.best_restart = i;
        }
    }
    report.best_lambda1_sq = std::clamp(report.best_lambda1_sq, 0.0, 1.0);
    report.maximizer = states[report.best_restart];
    report.runs = std::move(runs);
    return report;
}

MaximizationReport max_lambda1_over_subspace(std::span<const TensorState> basis, int k,
                                             const MaximizationConfig &config) {
    return max_lambda1_over_subspace(SubspaceProjector(basis), k, config);
}

double verify_fixed_point(const TensorState &psi, const SubspaceProjector &projector, int k) {
    require_cut(psi, k);
    if (projector.distance_from_subspace(psi) > 1e-6)
        throw InvalidArgument("state lies outside the subspace");
    const TopPair top = top_schmidt_pair(psi, k);
    const TensorState y = projector.apply(tensor_product(top.left, top.right));
    const double norm = y.norm();
    if (norm == 0.0)
        throw Error("projected top Schmidt pair vanishes");
    return distance(psi, (1.0 / norm) * y);
}

double verify_fixed_point(const TensorState &psi, std::span<const TensorState> basis, int k) {
    return verify_fixed_point(psi, SubspaceProjector(basis), k);
}

} // namespace schurweyl
