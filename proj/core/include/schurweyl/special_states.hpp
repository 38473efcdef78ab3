#pragma once

#include "schurweyl/tableau.hpp"
#include "schurweyl/tensor_state.hpp"

#include <Eigen/Dense>

#include <span>
#include <vector>

namespace schurweyl {

/// Orthonormal vectors u_1, ..., u_m in C^d.
class OrthonormalFrame {
  public:
    /// Throws InvalidArgument unless the vectors are single-factor states of one
    /// dimension with pairwise inner products delta_ij (tolerance 1e-12).
    explicit OrthonormalFrame(std::vector<TensorState> vectors);

    /// e_0, ..., e_{count-1} in C^d.
    static OrthonormalFrame computational(int d, int count);
    /// First `count` columns of a d x d unitary.
    static OrthonormalFrame from_unitary(const Eigen::MatrixXcd &u, int count);

    int local_dim() const noexcept { return vectors_.front().local_dim(); }
    std::size_t size() const noexcept { return vectors_.size(); }
    /// 0-based.
    const TensorState &operator[](std::size_t i) const { return vectors_[i]; }

  private:
    std::vector<TensorState> vectors_;
};

/// |u_{i_1} ∧ ... ∧ u_{i_k}>, normalized, indices 0-based and distinct.
TensorState slater(const OrthonormalFrame &frame, std::span<const int> indices);
/// |u_0 ∧ ... ∧ u_{k-1}>.
TensorState slater_prefix(const OrthonormalFrame &frame, int k);

/// Nested column Slaters |u_1∧..∧u_{c_1}> ⊗ ... ⊗ |u_1∧..∧u_{c_{r_1}}> for a
/// column-ordered tableau; lies in Im(P_t).
TensorState coherent_state(const StandardTableau &t, const OrthonormalFrame &frame, int d);

/// The tableau with N in `box` and column-ordered otherwise.
StandardTableau optimizer_tableau(const YoungDiagram &diagram, const Box &box);

/// State saturating bound_for_box(diagram, box) across the final cut:
/// column Slaters left of the box's column, tensored with the normalized
/// P_{t_B}-projection of the remaining (shortened) column Slaters ⊗ u_{c_l}.
TensorState optimizer_state(const YoungDiagram &diagram, const Box &box, const OrthonormalFrame &frame, int d);

struct ColemanCheck {
    double norm_sq = 0.0; // ||P^A(phi ⊗ u)||^2
    bool condition = false; // ||(1 ⊗ <u|) phi|| < 1e-9
};

/// phi on k-1 factors, u on one factor, both normalized.
ColemanCheck coleman_equality_check(const TensorState &phi, const TensorState &u);

/// (1 ⊗ <u|) phi: contracts the last factor of phi with u.
TensorState contract_last(const TensorState &phi, const TensorState &u);

} // namespace schurweyl
