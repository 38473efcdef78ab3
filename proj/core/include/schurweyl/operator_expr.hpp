#pragma once

#include "schurweyl/permutation.hpp"
#include "schurweyl/rational.hpp"
#include "schurweyl/tensor_state.hpp"

#include <memory>
#include <utility>
#include <vector>

namespace schurweyl {

/// A linear map on (C^d)^{⊗n} built from permutation actions.
///
/// Expressions are immutable trees of shared nodes: formal permutation sums
/// with rational coefficients, products, scalings, sums and embeddings
/// (op ⊗ 1 style placement on a factor range). Application is matrix-free,
/// by index shuffling, and works for any local dimension d.
class OperatorExpr {
  public:
    struct Term {
        Rational coefficient;
        Permutation permutation;
    };

    /// Identity on n factors.
    static OperatorExpr identity(int n);

    /// sum_k coefficient_k U_{sigma_k}; all permutations act on n factors.
    static OperatorExpr permutation_sum(int n, std::vector<Term> terms);

    /// Applies right-to-left: product({A, B}) x = A(B(x)). All factors share one arity.
    static OperatorExpr product(std::vector<OperatorExpr> factors);

    static OperatorExpr sum(std::vector<OperatorExpr> terms);

    OperatorExpr scaled(const Rational &c) const;

    /// This operator placed on factors offset+1..offset+arity() of n factors,
    /// identity elsewhere.
    OperatorExpr embedded(int n, int offset) const;

    int arity() const;

    /// 1-based factor positions the operator can act nontrivially on.
    std::vector<int> support() const;

    /// Requires psi.n_factors() == arity().
    TensorState apply(const TensorState &psi) const;

    /// <x|Op|x> convenience: ||Op x||^2 equals this for orthogonal projectors.
    Complex expectation(const TensorState &psi) const;

    /// Dense d^n x d^n matrix (tests and small diagnostics only).
    Eigen::MatrixXcd dense_matrix(int local_dim) const;

    struct Node;
    friend struct OperatorExprAccess;

  private:
    explicit OperatorExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

OperatorExpr operator*(const OperatorExpr &a, const OperatorExpr &b);

} // namespace schurweyl
