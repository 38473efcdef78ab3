#include "schurweyl/tableau.hpp"

#include "schurweyl/error.hpp"

#include <algorithm>
#include <functional>

namespace schurweyl {

namespace {

std::vector<int> shape_of(const std::vector<std::vector<int>> &rows) {
    std::vector<int> shape;
    shape.reserve(rows.size());
    for (const auto &row : rows) {
        if (row.empty())
            throw InvalidArgument("tableau rows must be nonempty");
        shape.push_back(static_cast<int>(row.size()));
    }
    return shape;
}

} // namespace

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows)
    : diagram_(shape_of(rows)), rows_(std::move(rows)) {
    const int n = diagram_.n_boxes();
    positions_.assign(static_cast<std::size_t>(n), Box{0, 0});
    for (int i = 1; i <= diagram_.n_rows(); ++i) {
        for (int j = 1; j <= diagram_.row_length(i); ++j) {
            const int v = rows_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
            if (v < 1 || v > n)
                throw InvalidArgument("tableau entry " + std::to_string(v) + " outside 1.." + std::to_string(n));
            auto &slot = positions_[static_cast<std::size_t>(v - 1)];
            if (slot.row != 0)
                throw InvalidArgument("tableau entry " + std::to_string(v) + " repeated");
            slot = {i, j};
            if (j > 1 && at({i, j - 1}) >= v)
                throw InvalidArgument("tableau rows must increase");
            if (i > 1 && at({i - 1, j}) >= v)
                throw InvalidArgument("tableau columns must increase");
        }
    }
}

int StandardTableau::at(const Box &box) const {
    if (!diagram_.contains(box))
        throw InvalidArgument("box outside diagram");
    return rows_[static_cast<std::size_t>(box.row - 1)][static_cast<std::size_t>(box.col - 1)];
}

Box StandardTableau::position(int k) const {
    if (k < 1 || k > n_boxes())
        throw InvalidArgument("entry " + std::to_string(k) + " not in tableau");
    return positions_[static_cast<std::size_t>(k - 1)];
}

std::vector<int> StandardTableau::row_entries(int i) const {
    diagram_.row_length(i); // range check
    return rows_[static_cast<std::size_t>(i - 1)];
}

std::vector<int> StandardTableau::column_entries(int j) const {
    const int c = diagram_.column_length(j);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(c));
    for (int i = 1; i <= c; ++i)
        out.push_back(at({i, j}));
    return out;
}

std::vector<int> StandardTableau::reading_word() const {
    std::vector<int> out;
    for (const auto &row : rows_)
        out.insert(out.end(), row.begin(), row.end());
    return out;
}

bool StandardTableau::is_row_ordered() const { return *this == row_ordered(diagram_); }

bool StandardTableau::is_column_ordered() const { return *this == column_ordered(diagram_); }

std::strong_ordering operator<=>(const StandardTableau &a, const StandardTableau &b) {
    if (auto c = a.diagram_ <=> b.diagram_; c != 0)
        return c;
    const auto wa = a.reading_word();
    const auto wb = b.reading_word();
    return std::lexicographical_compare_three_way(wa.begin(), wa.end(), wb.begin(), wb.end());
}

std::string to_string(const StandardTableau &t) {
    std::string out = "[";
    for (std::size_t i = 0; i < t.rows().size(); ++i) {
        if (i)
            out += ',';
        out += '[';
        for (std::size_t j = 0; j < t.rows()[i].size(); ++j) {
            if (j)
                out += ',';
            out += std::to_string(t.rows()[i][j]);
        }
        out += ']';
    }
    return out + "]";
}

StandardTableau row_ordered(const YoungDiagram &diagram) {
    std::vector<std::vector<int>> rows;
    int next = 1;
    for (int r : diagram.rows()) {
        std::vector<int> row(static_cast<std::size_t>(r));
        for (auto &v : row)
            v = next++;
        rows.push_back(std::move(row));
    }
    return StandardTableau(std::move(rows));
}

StandardTableau column_ordered(const YoungDiagram &diagram) {
    std::vector<std::vector<int>> rows;
    for (int r : diagram.rows())
        rows.emplace_back(static_cast<std::size_t>(r), 0);
    int next = 1;
    for (int j = 1; j <= diagram.n_columns(); ++j)
        for (int i = 1; i <= diagram.column_length(j); ++i)
            rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = next++;
    return StandardTableau(std::move(rows));
}

StandardTableau column_ordered_with_last_in(const YoungDiagram &diagram, const Box &box) {
    if (!is_removable(diagram, box))
        throw InvalidArgument("box " + to_string(box) + " is not removable");
    const StandardTableau rest = column_ordered(diagram.without(box));
    auto rows = rest.rows();
    if (box.row > static_cast<int>(rows.size()))
        rows.emplace_back();
    rows[static_cast<std::size_t>(box.row - 1)].push_back(diagram.n_boxes());
    return StandardTableau(std::move(rows));
}

std::vector<StandardTableau> enumerate_standard_tableaux(const YoungDiagram &diagram) {
    std::vector<StandardTableau> out;
    // Place N, N-1, ... into removable corners of the shrinking shape.
    std::vector<std::vector<int>> filling;
    for (int r : diagram.rows())
        filling.emplace_back(static_cast<std::size_t>(r), 0);
    std::function<void(const YoungDiagram &)> rec = [&](const YoungDiagram &shape) {
        if (shape.empty()) {
            out.emplace_back(filling);
            return;
        }
        for (const Box &box : removable_boxes(shape)) {
            filling[static_cast<std::size_t>(box.row - 1)][static_cast<std::size_t>(box.col - 1)] =
                shape.n_boxes();
            rec(shape.without(box));
        }
    };
    rec(diagram);
    std::sort(out.begin(), out.end());
    return out;
}

StandardTableau remove_largest(const StandardTableau &t) {
    if (t.n_boxes() < 1)
        throw InvalidArgument("cannot remove from an empty tableau");
    const Box box = t.position(t.n_boxes());
    auto rows = t.rows();
    auto &row = rows[static_cast<std::size_t>(box.row - 1)];
    row.pop_back();
    if (row.empty())
        rows.pop_back();
    return StandardTableau(std::move(rows));
}

TableauSplit split_tableau(const StandardTableau &t, int k) {
    const int n = t.n_boxes();
    if (k < 1 || k > n - 1)
        throw InvalidArgument("split point must satisfy 1 <= k <= N-1");

    std::vector<std::vector<int>> first;
    for (const auto &row : t.rows()) {
        std::vector<int> kept;
        for (int v : row)
            if (v <= k)
                kept.push_back(v);
        if (kept.empty())
            break;
        first.push_back(std::move(kept));
    }

    int min_row = n + 1;
    int min_col = n + 1;
    for (int v = k + 1; v <= n; ++v) {
        const Box b = t.position(v);
        min_row = std::min(min_row, b.row);
        min_col = std::min(min_col, b.col);
    }
    // Shift the remaining boxes so the top-left one sits at (1,1), then check shape.
    std::vector<std::vector<int>> grid;
    for (int v = k + 1; v <= n; ++v) {
        const Box b = t.position(v);
        const auto i = static_cast<std::size_t>(b.row - min_row);
        const auto j = static_cast<std::size_t>(b.col - min_col);
        if (grid.size() <= i)
            grid.resize(i + 1);
        if (grid[i].size() <= j)
            grid[i].resize(j + 1, 0);
        grid[i][j] = v - k;
    }
    TableauSplit out{StandardTableau(std::move(first)), std::nullopt};
    bool straight = true;
    for (std::size_t i = 0; i < grid.size() && straight; ++i) {
        if (grid[i].empty())
            straight = false;
        for (int v : grid[i])
            straight = straight && v != 0;
        if (i > 0 && grid[i].size() > grid[i - 1].size())
            straight = false;
    }
    if (straight)
        out.second = StandardTableau(std::move(grid));
    return out;
}

int axial_distance(const StandardTableau &t, int k) {
    if (k < 1 || k > t.n_boxes() - 1)
        throw InvalidArgument("k must satisfy 1 <= k <= N-1");
    const Box a = t.position(k);
    const Box b = t.position(k + 1);
    return (b.col - b.row) - (a.col - a.row);
}

StandardTableau swap_entries(const StandardTableau &t, int k) {
    if (k < 1 || k > t.n_boxes() - 1)
        throw InvalidArgument("k must satisfy 1 <= k <= N-1");
    auto rows = t.rows();
    const Box a = t.position(k);
    const Box b = t.position(k + 1);
    rows[static_cast<std::size_t>(a.row - 1)][static_cast<std::size_t>(a.col - 1)] = k + 1;
    rows[static_cast<std::size_t>(b.row - 1)][static_cast<std::size_t>(b.col - 1)] = k;
    return StandardTableau(std::move(rows));
}

} // namespace schurweyl
