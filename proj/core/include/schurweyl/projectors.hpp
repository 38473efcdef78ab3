#pragma once

#include "schurweyl/operator_expr.hpp"
#include "schurweyl/orthogonal_form.hpp"
#include "schurweyl/tableau.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace schurweyl {

/// P^S_i = (1/r_i!) sum over Sym(R_i) of U_sigma, R_i the entries of row i.
OperatorExpr row_symmetrizer(const StandardTableau &t, int i);

/// P^A_j = (1/c_j!) sum over Sym(C_j) of sgn(sigma) U_sigma, C_j the entries of column j.
OperatorExpr column_antisymmetrizer(const StandardTableau &t, int j);

/// Projector onto the totally antisymmetric subspace of n factors.
OperatorExpr full_antisymmetrizer(int n);
/// Projector onto the totally symmetric subspace of n factors.
OperatorExpr full_symmetrizer(int n);

/// S_t, the product of all row symmetrizers.
OperatorExpr row_symmetrizer_product(const StandardTableau &t);
/// A_t, the product of all column antisymmetrizers.
OperatorExpr column_antisymmetrizer_product(const StandardTableau &t);

/// Y_t = kappa S_t A_t with kappa = (prod r_i!)(prod c_j!) / prod hooks.
/// Idempotent but in general not hermitian.
OperatorExpr young_projection(const StandardTableau &t);

/// Orthogonal projector onto V^nu ⊗ |t>:
/// P_t = Y_t for N <= 2, otherwise (P_{t↓} ⊗ 1) Y_t (P_{t↓} ⊗ 1).
/// Expressions are cached per tableau, so sub-tableaux down Young's lattice
/// share their operator trees.
OperatorExpr orthogonal_projector(const StandardTableau &t);

/// kappa S_t A_t S_t for row-ordered t, kappa A_t S_t A_t for column-ordered t.
/// Throws InvalidArgument("closed form unavailable") otherwise.
OperatorExpr closed_form_projector(const StandardTableau &t);

/// Projector onto the isotypic block V^nu ⊗ S^nu,
/// (dim S^nu / N!) sum_sigma chi^nu(sigma) U_sigma, characters taken from
/// Young's orthogonal form.
OperatorExpr isotypic_projector(const YoungDiagram &diagram);

/// Jucys-Murphy element X_k = sum_{i<k} (i k), 2 <= k <= n. On Im(P_t) it acts
/// as the content (column - row) of the box holding k.
OperatorExpr jucys_murphy_element(int n, int k);

struct SubspaceOptions {
    /// Residual below this fraction of the projected norm counts as dependent.
    double rank_tolerance = 1e-8;
    /// Stop after this many consecutive dependent probes.
    int dependent_probes_to_stop = 2;
    std::uint64_t seed = 0x5eed5eedULL;
};

/// Orthonormal basis of Im(P) for an orthogonal projector P on d-dimensional factors.
/// Random probes are projected and Gram-Schmidt orthogonalized until the
/// image stops growing.
std::vector<TensorState> projector_image_basis(const OperatorExpr &projector, int d,
                                               const SubspaceOptions &options = {});

/// Orthonormal basis of Im(P_t); its length is dim V^nu(d) (empty when d < c_1).
std::vector<TensorState> subspace_basis(const StandardTableau &t, int d, const SubspaceOptions &options = {});

/// Union over Std(nu) of subspace_basis: an orthonormal basis of V^nu ⊗ S^nu.
std::vector<TensorState> irrep_block_basis(const YoungDiagram &diagram, int d, const SubspaceOptions &options = {});

/// Tableau-labeled basis |v_a ⊗ t> of V^nu ⊗ S^nu with phases fixed so the
/// adjacent transpositions act by Young's orthogonal form:
/// U_(k k+1) |v_a ⊗ t> = sum_s M_k[s,t] |v_a ⊗ s>.
struct AlignedIrrepBasis {
    std::shared_ptr<const TableauBasis> tableaux;
    /// vectors[t][a] = |v_a ⊗ t>, t indexing tableaux in canonical order.
    std::vector<std::vector<TensorState>> vectors;

    std::size_t multiplicity() const { return vectors.empty() ? 0 : vectors.front().size(); }
};

/// Starts from an orthonormal basis of Im(P_{t_0}) (t_0 first in canonical
/// order) and reaches every other tableau through
/// |v ⊗ t~> = (U_k - 1/r) |v ⊗ t> / sqrt(1 - 1/r^2).
AlignedIrrepBasis aligned_irrep_basis(const YoungDiagram &diagram, int d, const SubspaceOptions &options = {});

/// ||P psi - psi||: zero iff psi lies in Im(P) for an orthogonal projector P.
double projector_residual(const OperatorExpr &projector, const TensorState &psi);

} // namespace schurweyl
