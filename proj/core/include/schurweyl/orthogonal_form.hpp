#pragma once

#include "schurweyl/permutation.hpp"
#include "schurweyl/tableau.hpp"

#include <Eigen/Dense>

#include <memory>
#include <vector>

namespace schurweyl {

/// Tableau basis of S^nu in canonical order, with index lookup.
class TableauBasis {
  public:
    explicit TableauBasis(const YoungDiagram &diagram);

    const YoungDiagram &diagram() const noexcept { return diagram_; }
    const std::vector<StandardTableau> &tableaux() const noexcept { return tableaux_; }
    std::size_t size() const noexcept { return tableaux_.size(); }
    const StandardTableau &operator[](std::size_t i) const { return tableaux_[i]; }

    /// Position of t in the basis; throws InvalidArgument if t has another shape.
    std::size_t index_of(const StandardTableau &t) const;

  private:
    YoungDiagram diagram_;
    std::vector<StandardTableau> tableaux_;
};

/// Shared, cached basis for a diagram.
std::shared_ptr<const TableauBasis> tableau_basis(const YoungDiagram &diagram);

/// A matrix of Young's orthogonal representation. Column t holds the
/// coefficients of sigma|t> in the tableau basis.
struct IrrepMatrix {
    std::shared_ptr<const TableauBasis> basis;
    Eigen::MatrixXd entries;

    const YoungDiagram &diagram() const { return basis->diagram(); }
};

/// Action of (k k+1), 1 <= k <= N-1. Cached per (diagram, k); thread-safe.
const IrrepMatrix &adjacent_transposition_matrix(const YoungDiagram &diagram, int k);

/// Product of generator matrices along the bubble-sort factorization of sigma.
IrrepMatrix permutation_matrix(const YoungDiagram &diagram, const Permutation &sigma);

/// Product of generator matrices along an explicit factorization
/// sigma = s_{k_1} s_{k_2} ... (used to test factorization independence).
IrrepMatrix product_of_generators(const YoungDiagram &diagram, const std::vector<int> &factorization);

/// Trace of permutation_matrix(diagram, sigma).
double character(const YoungDiagram &diagram, const Permutation &sigma);

} // namespace schurweyl
