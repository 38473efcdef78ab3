#pragma once

#include "schurweyl/rational.hpp"
#include "schurweyl/tensor_state.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace schurweyl {

/// Schmidt decomposition across the cut (1..k | k+1..N):
/// psi = sum_i coefficients[i] left_vectors[i] ⊗ right_vectors[i].
struct SchmidtResult {
    int cut = 0;
    std::vector<double> coefficients; // descending, nonnegative
    std::vector<TensorState> left_vectors;
    std::vector<TensorState> right_vectors;

    double lambda1_sq() const { return coefficients.empty() ? 0.0 : coefficients.front() * coefficients.front(); }
};

/// Partial trace keeping the listed (1-based) factors, in increasing order.
/// keep must be a nonempty proper subset; psi must be normalized.
Eigen::MatrixXcd reduced_density_matrix(const TensorState &psi, std::span<const int> keep);

/// SVD of the d^k x d^{N-k} amplitude matrix, 1 <= k <= N-1.
SchmidtResult schmidt_decompose(const TensorState &psi, int k);

/// Schmidt coefficients only (cheaper: no vectors).
std::vector<double> schmidt_coefficients(const TensorState &psi, int k);

/// -sum lambda_i^2 ln lambda_i^2 across cut k, with 0 ln 0 = 0.
double entanglement_entropy(const TensorState &psi, int k);

/// Von Neumann entropy of a density matrix's spectrum.
double entropy_of_probabilities(std::span<const double> probabilities);

/// Orthonormal basis of a subspace U, stored column-wise; P_U = B B^†.
class SubspaceProjector {
  public:
    /// Throws InvalidArgument on an empty or non-orthonormal basis (tolerance 1e-8).
    explicit SubspaceProjector(std::span<const TensorState> basis);

    int local_dim() const noexcept { return local_dim_; }
    int n_factors() const noexcept { return n_factors_; }
    Eigen::Index rank() const noexcept { return columns_.cols(); }

    TensorState apply(const TensorState &psi) const;
    /// ||psi - P_U psi||.
    double distance_from_subspace(const TensorState &psi) const;
    /// Normalized random state of U.
    TensorState random_state(std::mt19937_64 &rng) const;

    const Eigen::MatrixXcd &columns() const noexcept { return columns_; }

  private:
    int local_dim_ = 1;
    int n_factors_ = 0;
    Eigen::MatrixXcd columns_;
};

struct MaximizationConfig {
    int restarts = 32;
    int max_iterations = 500;
    double tolerance = 1e-10;
    std::uint64_t seed = 1;
    /// Extra restarts initialized from the top Schmidt pair of these states.
    std::vector<TensorState> seed_states;
    bool record_trace = false;
    /// 0 means std::thread::hardware_concurrency().
    unsigned threads = 0;
};

struct RestartReport {
    std::size_t index = 0;
    bool from_seed_state = false;
    int iterations = 0;
    bool converged = false;
    bool monotone = true;
    double objective = 0.0;  // final ||P_U(alpha ⊗ beta)||^2
    double lambda1_sq = 0.0; // lambda_1^2 of the final state
    std::vector<double> trace;
};

struct MaximizationReport {
    double best_lambda1_sq = 0.0;
    std::size_t best_restart = 0;
    int restarts = 0;
    std::vector<RestartReport> runs;
    TensorState maximizer;
    std::optional<Rational> analytic_bound;
    bool all_monotone = true;
};

/// Alternating ascent on ||P_U(alpha ⊗ beta)||^2 across cut k: from a random
/// product seed, psi <- P_U(alpha ⊗ beta)/||.||, then (alpha, beta) <- top
/// Schmidt pair of psi, until the objective gains less than the tolerance.
/// Restarts are independent (parallel); the best lambda_1^2 wins, ties to the
/// lowest restart index.
MaximizationReport max_lambda1_over_subspace(std::span<const TensorState> basis, int k,
                                             const MaximizationConfig &config = {});

/// Same, with a prebuilt projector.
MaximizationReport max_lambda1_over_subspace(const SubspaceProjector &projector, int k,
                                             const MaximizationConfig &config = {});

/// ||psi - P_U(psi_A^1 ⊗ psi_B^1)/||P_U(psi_A^1 ⊗ psi_B^1)|| ||.
/// Throws InvalidArgument when psi lies outside span(basis) (residual > 1e-6).
double verify_fixed_point(const TensorState &psi, std::span<const TensorState> basis, int k);
double verify_fixed_point(const TensorState &psi, const SubspaceProjector &projector, int k);

} // namespace schurweyl
