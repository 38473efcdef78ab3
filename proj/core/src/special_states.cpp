#include "schurweyl/special_states.hpp"

#include "schurweyl/error.hpp"
#include "schurweyl/projectors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace schurweyl {

OrthonormalFrame::OrthonormalFrame(std::vector<TensorState> vectors) : vectors_(std::move(vectors)) {
    if (vectors_.empty())
        throw InvalidArgument("empty frame");
    for (const auto &v : vectors_)
        if (v.n_factors() != 1 || v.local_dim() != vectors_.front().local_dim())
            throw InvalidArgument("frame vectors must be single-factor states of one dimension");
    for (std::size_t i = 0; i < vectors_.size(); ++i)
        for (std::size_t j = 0; j < vectors_.size(); ++j) {
            const Complex g = vectors_[i].inner(vectors_[j]);
            if (std::abs(g - Complex(i == j ? 1.0 : 0.0)) > 1e-12)
                throw InvalidArgument("frame vectors are not orthonormal");
        }
}

OrthonormalFrame OrthonormalFrame::computational(int d, int count) {
    if (count < 1 || count > d)
        throw InvalidArgument("frame size must satisfy 1 <= count <= d");
    std::vector<TensorState> vectors;
    for (int i = 0; i < count; ++i)
        vectors.push_back(TensorState::basis_state(d, {i}));
    return OrthonormalFrame(std::move(vectors));
}

OrthonormalFrame OrthonormalFrame::from_unitary(const Eigen::MatrixXcd &u, int count) {
    if (u.rows() != u.cols() || count < 1 || count > u.cols())
        throw InvalidArgument("frame size must satisfy 1 <= count <= d");
    std::vector<TensorState> vectors;
    for (int i = 0; i < count; ++i)
        vectors.emplace_back(static_cast<int>(u.rows()), 1, u.col(i));
    return OrthonormalFrame(std::move(vectors));
}

TensorState slater(const OrthonormalFrame &frame, std::span<const int> indices) {
    const int k = static_cast<int>(indices.size());
    const int d = frame.local_dim();
    if (k < 1 || k > d)
        throw InvalidArgument("slater needs 1 <= k <= d vectors");
    std::vector<int> order(indices.begin(), indices.end());
    for (int i : order)
        if (i < 0 || static_cast<std::size_t>(i) >= frame.size())
            throw InvalidArgument("slater index outside the frame");
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InvalidArgument("slater indices must be distinct");

    TensorState product = frame[static_cast<std::size_t>(order[0])];
    for (int i = 1; i < k; ++i)
        product = tensor_product(product, frame[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]);
    // P^A (u_{i_1} ⊗ ... ⊗ u_{i_k}) has norm 1/sqrt(k!) for orthonormal vectors.
    return full_antisymmetrizer(k).apply(product).normalized();
}

TensorState slater_prefix(const OrthonormalFrame &frame, int k) {
    std::vector<int> indices(static_cast<std::size_t>(k));
    std::iota(indices.begin(), indices.end(), 0);
    return slater(frame, indices);
}

namespace {

void require_frame(const OrthonormalFrame &frame, const YoungDiagram &diagram, int d) {
    if (frame.local_dim() != d)
        throw InvalidArgument("frame dimension does not match d");
    if (d < diagram.n_rows())
        throw InvalidArgument("d must be at least the first column length c_1");
    if (frame.size() < static_cast<std::size_t>(diagram.n_rows()))
        throw InvalidArgument("frame needs at least c_1 vectors");
}

// Slaters for column lengths `columns` tensored left to right.
std::optional<TensorState> column_slaters(const OrthonormalFrame &frame, std::span<const int> columns) {
    std::optional<TensorState> out;
    for (int c : columns) {
        if (c == 0)
            continue;
        TensorState s = slater_prefix(frame, c);
        out = out ? tensor_product(*out, s) : std::move(s);
    }
    return out;
}

} // namespace

TensorState coherent_state(const StandardTableau &t, const OrthonormalFrame &frame, int d) {
    if (!t.is_column_ordered())
        throw InvalidArgument("coherent_state requires a column-ordered tableau");
    require_frame(frame, t.diagram(), d);
    return *column_slaters(frame, t.diagram().columns());
}

StandardTableau optimizer_tableau(const YoungDiagram &diagram, const Box &box) {
    return column_ordered_with_last_in(diagram, box);
}

TensorState optimizer_state(const YoungDiagram &diagram, const Box &box, const OrthonormalFrame &frame, int d) {
    if (!is_removable(diagram, box))
        throw InvalidArgument("box " + to_string(box) + " is not removable");
    require_frame(frame, diagram, d);

    const auto &columns = diagram.columns();
    const int l = box.col;
    const int height = box.row; // c_l

    const std::span<const int> left(columns.data(), static_cast<std::size_t>(l - 1));
    const std::optional<TensorState> a_part = column_slaters(frame, left);

    // B: columns l..r_1 as their own diagram, column l shortened by the removed box.
    std::vector<int> b_columns(columns.begin() + (l - 1), columns.end());
    b_columns.front() = height - 1;
    std::optional<TensorState> b_seed = column_slaters(frame, b_columns);
    const TensorState last = frame[static_cast<std::size_t>(height - 1)];
    TensorState b_input = b_seed ? tensor_product(*b_seed, last) : last;

    std::vector<int> full_b_columns(columns.begin() + (l - 1), columns.end());
    const YoungDiagram b_diagram = YoungDiagram(full_b_columns).conjugate();
    const StandardTableau t_b = column_ordered_with_last_in(b_diagram, {height, 1});
    const TensorState b_part = orthogonal_projector(t_b).apply(b_input).normalized();

    return a_part ? tensor_product(*a_part, b_part) : b_part;
}

TensorState contract_last(const TensorState &phi, const TensorState &u) {
    if (u.n_factors() != 1 || u.local_dim() != phi.local_dim() || phi.n_factors() < 1)
        throw InvalidArgument("dimension mismatch");
    const int d = phi.local_dim();
    const std::int64_t rows = phi.size() / d;
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(rows);
    for (std::int64_t r = 0; r < rows; ++r)
        for (int i = 0; i < d; ++i)
            out[r] += std::conj(u[i]) * phi[r * d + i];
    return TensorState(d, phi.n_factors() - 1, std::move(out));
}

ColemanCheck coleman_equality_check(const TensorState &phi, const TensorState &u) {
    if (u.n_factors() != 1 || u.local_dim() != phi.local_dim())
        throw InvalidArgument("dimension mismatch");
    const int k = phi.n_factors() + 1;
    const TensorState joined = tensor_product(phi, u);
    ColemanCheck out;
    out.norm_sq = full_antisymmetrizer(k).apply(joined).amplitudes().squaredNorm();
    out.condition = contract_last(phi, u).norm() < 1e-9;
    return out;
}

} // namespace schurweyl
