#include "schurweyl/projectors.hpp"

#include "schurweyl/error.hpp"
#include "shared_cache.hpp"

#include <cmath>
#include <deque>
#include <random>

namespace schurweyl {

namespace {

OperatorExpr symmetric_group_sum(int n, const std::vector<int> &symbols, bool antisymmetric) {
    const auto perms = permutations_of(n, symbols);
    const Rational weight(1, factorial(static_cast<int>(symbols.size())));
    std::vector<OperatorExpr::Term> terms;
    terms.reserve(perms.size());
    for (const auto &sigma : perms) {
        Rational c = weight;
        if (antisymmetric && sigma.sign() < 0)
            c = -c;
        terms.push_back({c, sigma});
    }
    return OperatorExpr::permutation_sum(n, std::move(terms));
}

OperatorExpr product_or_identity(int n, std::vector<OperatorExpr> factors) {
    if (factors.empty())
        return OperatorExpr::identity(n);
    if (factors.size() == 1)
        return factors.front();
    return OperatorExpr::product(std::move(factors));
}

} // namespace

OperatorExpr row_symmetrizer(const StandardTableau &t, int i) {
    if (i < 1 || i > t.diagram().n_rows())
        throw InvalidArgument("row index out of range");
    return symmetric_group_sum(t.n_boxes(), t.row_entries(i), false);
}

OperatorExpr column_antisymmetrizer(const StandardTableau &t, int j) {
    if (j < 1 || j > t.diagram().n_columns())
        throw InvalidArgument("column index out of range");
    return symmetric_group_sum(t.n_boxes(), t.column_entries(j), true);
}

OperatorExpr full_antisymmetrizer(int n) {
    if (n < 1)
        throw InvalidArgument("antisymmetrizer needs n >= 1");
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p)
        all[static_cast<std::size_t>(p)] = p + 1;
    return symmetric_group_sum(n, all, true);
}

OperatorExpr full_symmetrizer(int n) {
    if (n < 1)
        throw InvalidArgument("symmetrizer needs n >= 1");
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p)
        all[static_cast<std::size_t>(p)] = p + 1;
    return symmetric_group_sum(n, all, false);
}

OperatorExpr row_symmetrizer_product(const StandardTableau &t) {
    std::vector<OperatorExpr> factors;
    for (int i = 1; i <= t.diagram().n_rows(); ++i)
        if (t.diagram().row_length(i) > 1)
            factors.push_back(row_symmetrizer(t, i));
    return product_or_identity(t.n_boxes(), std::move(factors));
}

OperatorExpr column_antisymmetrizer_product(const StandardTableau &t) {
    std::vector<OperatorExpr> factors;
    for (int j = 1; j <= t.diagram().n_columns(); ++j)
        if (t.diagram().column_length(j) > 1)
            factors.push_back(column_antisymmetrizer(t, j));
    return product_or_identity(t.n_boxes(), std::move(factors));
}

OperatorExpr young_projection(const StandardTableau &t) {
    return OperatorExpr::product({row_symmetrizer_product(t), column_antisymmetrizer_product(t)})
        .scaled(young_normalization(t.diagram()));
}

OperatorExpr orthogonal_projector(const StandardTableau &t) {
    static detail::SharedCache<std::vector<std::vector<int>>, OperatorExpr> cache;
    return cache.get(t.rows(), [&] {
        if (t.n_boxes() <= 2)
            return young_projection(t);
        const OperatorExpr lower = orthogonal_projector(remove_largest(t)).embedded(t.n_boxes(), 0);
        return OperatorExpr::product({lower, young_projection(t), lower});
    });
}

OperatorExpr closed_form_projector(const StandardTableau &t) {
    const Rational kappa = young_normalization(t.diagram());
    const auto s = row_symmetrizer_product(t);
    const auto a = column_antisymmetrizer_product(t);
    if (t.is_row_ordered())
        return OperatorExpr::product({s, a, s}).scaled(kappa);
    if (t.is_column_ordered())
        return OperatorExpr::product({a, s, a}).scaled(kappa);
    throw InvalidArgument("closed form unavailable");
}

OperatorExpr isotypic_projector(const YoungDiagram &diagram) {
    const int n = diagram.n_boxes();
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p)
        all[static_cast<std::size_t>(p)] = p + 1;
    const BigInt dim = dim_irrep_SN(diagram);
    const BigInt order = factorial(n);
    std::vector<OperatorExpr::Term> terms;
    for (const auto &sigma : permutations_of(n, all)) {
        const double chi = character(diagram, sigma);
        const long rounded = std::lround(chi);
        if (std::abs(chi - static_cast<double>(rounded)) > 1e-6)
            throw Error("non-integral character value");
        if (rounded == 0)
            continue;
        Rational c(dim * rounded, order);
        c.canonicalize();
        terms.push_back({c, sigma});
    }
    return OperatorExpr::permutation_sum(n, std::move(terms));
}

OperatorExpr jucys_murphy_element(int n, int k) {
    if (k < 2 || k > n)
        throw InvalidArgument("Jucys-Murphy index must satisfy 2 <= k <= n");
    std::vector<OperatorExpr::Term> terms;
    for (int i = 1; i < k; ++i)
        terms.push_back({Rational(1), Permutation::transposition(n, i, k)});
    return OperatorExpr::permutation_sum(n, std::move(terms));
}

std::vector<TensorState> projector_image_basis(const OperatorExpr &projector, int d, const SubspaceOptions &options) {
    const int n = projector.arity();
    checked_dimension(d, n);
    std::mt19937_64 rng(options.seed);
    std::vector<TensorState> basis;
    int dependent = 0;
    while (dependent < options.dependent_probes_to_stop) {
        const TensorState probe = TensorState::random(d, n, rng);
        Eigen::VectorXcd v = projector.apply(probe).amplitudes();
        const double projected_norm = v.norm();
        bool independent = projected_norm > options.rank_tolerance * probe.norm();
        if (independent) {
            for (int pass = 0; pass < 2; ++pass)
                for (const auto &b : basis)
                    v -= b.amplitudes().dot(v) * b.amplitudes();
            independent = v.norm() > options.rank_tolerance * projected_norm;
        }
        if (!independent) {
            ++dependent;
            continue;
        }
        dependent = 0;
        v.normalize();
        basis.emplace_back(d, n, std::move(v));
        if (static_cast<std::int64_t>(basis.size()) > basis.front().size())
            throw Error("projector image exceeds the ambient dimension");
    }
    return basis;
}

std::vector<TensorState> subspace_basis(const StandardTableau &t, int d, const SubspaceOptions &options) {
    return projector_image_basis(orthogonal_projector(t), d, options);
}

std::vector<TensorState> irrep_block_basis(const YoungDiagram &diagram, int d, const SubspaceOptions &options) {
    std::vector<TensorState> out;
    for (const auto &t : tableau_basis(diagram)->tableaux()) {
        auto part = subspace_basis(t, d, options);
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
}

AlignedIrrepBasis aligned_irrep_basis(const YoungDiagram &diagram, int d, const SubspaceOptions &options) {
    AlignedIrrepBasis out;
    out.tableaux = tableau_basis(diagram);
    const auto &basis = *out.tableaux;
    out.vectors.resize(basis.size());
    out.vectors[0] = subspace_basis(basis[0], d, options);

    const int n = diagram.n_boxes();
    std::vector<bool> reached(basis.size(), false);
    reached[0] = true;
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        const std::size_t ti = queue.front();
        queue.pop_front();
        const StandardTableau &t = basis[ti];
        for (int k = 1; k < n; ++k) {
            const Box a = t.position(k);
            const Box b = t.position(k + 1);
            if (a.row == b.row || a.col == b.col)
                continue;
            const std::size_t si = basis.index_of(swap_entries(t, k));
            if (reached[si])
                continue;
            reached[si] = true;
            const double r = axial_distance(t, k);
            const double mix = std::sqrt(1.0 - 1.0 / (r * r));
            const Permutation swap = Permutation::transposition(n, k, k + 1);
            for (const auto &v : out.vectors[ti]) {
                const TensorState moved = apply_permutation(swap, v);
                out.vectors[si].push_back((1.0 / mix) * (moved - Complex(1.0 / r) * v));
            }
            queue.push_back(si);
        }
    }
    for (bool r : reached)
        if (!r)
            throw Error("tableau graph not connected");
    return out;
}

double projector_residual(const OperatorExpr &projector, const TensorState &psi) {
    return distance(projector.apply(psi), psi);
}

} // namespace schurweyl
