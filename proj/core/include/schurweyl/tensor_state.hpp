#pragma once

#include "schurweyl/permutation.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace schurweyl {

using Complex = std::complex<double>;

/// Default limit on d^N.
inline constexpr std::int64_t kDefaultDimensionCap = std::int64_t{1} << 20;

/// Current cap: SCHURWEYL_CAP from the environment if set and valid, else the default.
std::int64_t dimension_cap();
/// Overrides the cap for this process (0 restores the environment/default).
void set_dimension_cap(std::int64_t cap);

/// d^N, or throws DimensionCapExceeded when above dimension_cap().
std::int64_t checked_dimension(int local_dim, int n_factors);

/// A dense vector in (C^d)^{⊗N}.
///
/// Basis tuple (i_1, ..., i_N), i_k in 0..d-1, sits at flat index
/// sum_k i_k d^{N-k}: factor 1 is the most significant digit.
class TensorState {
  public:
    TensorState() = default;

    /// Zero state.
    TensorState(int local_dim, int n_factors);
    TensorState(int local_dim, int n_factors, Eigen::VectorXcd amplitudes);

    /// e_{i_1} ⊗ ... ⊗ e_{i_N}.
    static TensorState basis_state(int local_dim, std::span<const int> digits);
    static TensorState basis_state(int local_dim, std::initializer_list<int> digits);
    static TensorState basis_index(int local_dim, int n_factors, std::int64_t flat_index);

    /// Complex-Gaussian entries, normalized.
    static TensorState random(int local_dim, int n_factors, std::mt19937_64 &rng);

    /// A single-factor state (N = 1) from its d components.
    static TensorState vector(std::span<const Complex> components);

    int local_dim() const noexcept { return local_dim_; }
    int n_factors() const noexcept { return n_factors_; }
    std::int64_t size() const noexcept { return amplitudes_.size(); }

    const Eigen::VectorXcd &amplitudes() const noexcept { return amplitudes_; }
    Complex operator[](std::int64_t flat_index) const { return amplitudes_[flat_index]; }

    double norm() const { return amplitudes_.norm(); }
    /// Throws InvalidArgument for the zero vector.
    TensorState normalized() const;

    /// <this|other>, antilinear in this.
    Complex inner(const TensorState &other) const;

    friend TensorState operator+(const TensorState &a, const TensorState &b);
    friend TensorState operator-(const TensorState &a, const TensorState &b);
    friend TensorState operator*(Complex c, const TensorState &a);

    /// Exact equality: same space and identical amplitudes.
    friend bool operator==(const TensorState &a, const TensorState &b) {
        return a.local_dim_ == b.local_dim_ && a.n_factors_ == b.n_factors_ && a.amplitudes_ == b.amplitudes_;
    }

  private:
    int local_dim_ = 1;
    int n_factors_ = 0;
    Eigen::VectorXcd amplitudes_;
};

/// a ⊗ b (a's factors first). Local dimensions must agree.
TensorState tensor_product(const TensorState &a, const TensorState &b);

/// Throws InvalidArgument unless both states live on the same space.
void require_same_space(const TensorState &a, const TensorState &b);

/// ||a - b||.
double distance(const TensorState &a, const TensorState &b);

/// U_sigma: the factor at position p moves to position sigma(p).
TensorState apply_permutation(const Permutation &sigma, const TensorState &psi);

/// out += coeff * U_sigma in, for flat amplitude buffers of d^N entries.
void accumulate_permuted(const Permutation &sigma, int local_dim, std::span<const Complex> in,
                         std::span<Complex> out, Complex coeff);

/// Transposition of factors k and l (1-based).
TensorState swap_factors(const TensorState &psi, int k, int l);

/// (U ⊗ ... ⊗ U) psi for a d x d matrix U.
TensorState apply_local(const Eigen::MatrixXcd &u, const TensorState &psi);

/// Haar-distributed d x d unitary (QR of a complex Ginibre matrix).
Eigen::MatrixXcd random_unitary(int d, std::mt19937_64 &rng);

} // namespace schurweyl
