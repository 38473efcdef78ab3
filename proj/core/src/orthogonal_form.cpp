#include "schurweyl/orthogonal_form.hpp"

#include "schurweyl/error.hpp"
#include "shared_cache.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace schurweyl {

TableauBasis::TableauBasis(const YoungDiagram &diagram)
    : diagram_(diagram), tableaux_(enumerate_standard_tableaux(diagram)) {}

std::size_t TableauBasis::index_of(const StandardTableau &t) const {
    auto it = std::lower_bound(tableaux_.begin(), tableaux_.end(), t);
    if (it == tableaux_.end() || !(*it == t))
        throw InvalidArgument("tableau " + to_string(t) + " not in basis of shape " + to_string(diagram_));
    return static_cast<std::size_t>(it - tableaux_.begin());
}

namespace {

using detail::SharedCache;

IrrepMatrix build_generator(const YoungDiagram &diagram, int k) {
    auto basis = tableau_basis(diagram);
    const auto dim = static_cast<Eigen::Index>(basis->size());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
    for (Eigen::Index c = 0; c < dim; ++c) {
        const StandardTableau &t = (*basis)[static_cast<std::size_t>(c)];
        const Box a = t.position(k);
        const Box b = t.position(k + 1);
        if (a.row == b.row) {
            m(c, c) = 1.0;
        } else if (a.col == b.col) {
            m(c, c) = -1.0;
        } else {
            const double r = axial_distance(t, k);
            m(c, c) = 1.0 / r;
            const auto partner = static_cast<Eigen::Index>(basis->index_of(swap_entries(t, k)));
            m(partner, c) = std::sqrt(1.0 - 1.0 / (r * r));
        }
    }
    return {std::move(basis), std::move(m)};
}

} // namespace

std::shared_ptr<const TableauBasis> tableau_basis(const YoungDiagram &diagram) {
    static SharedCache<std::vector<int>, std::shared_ptr<const TableauBasis>> cache;
    return cache.get(diagram.rows(), [&] { return std::make_shared<const TableauBasis>(diagram); });
}

const IrrepMatrix &adjacent_transposition_matrix(const YoungDiagram &diagram, int k) {
    if (k < 1 || k > diagram.n_boxes() - 1)
        throw InvalidArgument("transposition index k must satisfy 1 <= k <= N-1");
    static SharedCache<std::pair<std::vector<int>, int>, IrrepMatrix> cache;
    return cache.get({diagram.rows(), k}, [&] { return build_generator(diagram, k); });
}

IrrepMatrix product_of_generators(const YoungDiagram &diagram, const std::vector<int> &factorization) {
    auto basis = tableau_basis(diagram);
    const auto dim = static_cast<Eigen::Index>(basis->size());
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(dim, dim);
    for (int k : factorization)
        m = m * adjacent_transposition_matrix(diagram, k).entries;
    return {std::move(basis), std::move(m)};
}

IrrepMatrix permutation_matrix(const YoungDiagram &diagram, const Permutation &sigma) {
    if (sigma.size() != diagram.n_boxes())
        throw InvalidArgument("permutation size does not match the diagram");
    return product_of_generators(diagram, sigma.adjacent_factorization());
}

double character(const YoungDiagram &diagram, const Permutation &sigma) {
    return permutation_matrix(diagram, sigma).entries.trace();
}

} // namespace schurweyl
