#include "schurweyl/young.hpp"

#include "schurweyl/error.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace schurweyl {

std::string to_string(const Box &box) {
    return "(" + std::to_string(box.row) + "," + std::to_string(box.col) + ")";
}

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] <= 0)
            throw InvalidArgument("partition rows must be positive");
        if (i > 0 && rows_[i] > rows_[i - 1])
            throw InvalidArgument("partition rows must be weakly decreasing");
    }
    n_boxes_ = std::accumulate(rows_.begin(), rows_.end(), 0);
    const int width = rows_.empty() ? 0 : rows_.front();
    columns_.assign(static_cast<std::size_t>(width), 0);
    for (int r : rows_)
        for (int j = 0; j < r; ++j)
            ++columns_[static_cast<std::size_t>(j)];
}

int YoungDiagram::row_length(int i) const {
    if (i < 1 || i > n_rows())
        throw InvalidArgument("row index out of range");
    return rows_[static_cast<std::size_t>(i - 1)];
}

int YoungDiagram::column_length(int j) const {
    if (j < 1 || j > n_columns())
        throw InvalidArgument("column index out of range");
    return columns_[static_cast<std::size_t>(j - 1)];
}

bool YoungDiagram::contains(const Box &box) const noexcept {
    return box.row >= 1 && box.row <= n_rows() && box.col >= 1 &&
           box.col <= rows_[static_cast<std::size_t>(box.row - 1)];
}

YoungDiagram YoungDiagram::conjugate() const { return YoungDiagram(columns_); }

YoungDiagram YoungDiagram::without(const Box &box) const {
    if (!is_removable(*this, box))
        throw InvalidArgument("box " + to_string(box) + " is not removable");
    auto rows = rows_;
    if (--rows[static_cast<std::size_t>(box.row - 1)] == 0)
        rows.pop_back();
    return YoungDiagram(std::move(rows));
}

std::vector<Box> YoungDiagram::boxes() const {
    std::vector<Box> out;
    out.reserve(static_cast<std::size_t>(n_boxes_));
    for (int i = 1; i <= n_rows(); ++i)
        for (int j = 1; j <= row_length(i); ++j)
            out.push_back({i, j});
    return out;
}

std::string to_string(const YoungDiagram &diagram) {
    std::string out;
    for (std::size_t i = 0; i < diagram.rows().size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(diagram.rows()[i]);
    }
    return out;
}

std::vector<YoungDiagram> partitions_of(int n) {
    if (n < 0)
        throw InvalidArgument("partitions_of requires n >= 0");
    std::vector<YoungDiagram> out;
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int remaining, int cap) {
        if (remaining == 0) {
            out.emplace_back(parts);
            return;
        }
        for (int p = std::min(remaining, cap); p >= 1; --p) {
            parts.push_back(p);
            rec(remaining - p, p);
            parts.pop_back();
        }
    };
    rec(n, n);
    return out;
}

int hook_length(const YoungDiagram &diagram, const Box &box) {
    if (!diagram.contains(box))
        throw InvalidArgument("box outside diagram");
    return diagram.row_length(box.row) - box.col + diagram.column_length(box.col) - box.row + 1;
}

std::vector<Box> removable_boxes(const YoungDiagram &diagram) {
    std::vector<Box> out;
    for (int l = 1; l <= diagram.n_columns(); ++l) {
        const Box box{diagram.column_length(l), l};
        if (diagram.row_length(box.row) == l)
            out.push_back(box);
    }
    return out;
}

bool is_removable(const YoungDiagram &diagram, const Box &box) {
    return diagram.contains(box) && hook_length(diagram, box) == 1;
}

Rational bound_for_box(const YoungDiagram &diagram, const Box &box) {
    if (!diagram.contains(box))
        throw InvalidArgument("box outside diagram");
    if (!is_removable(diagram, box))
        throw InvalidArgument("box " + to_string(box) + " is not removable");
    Rational product = 1;
    for (int i = 1; i < box.row; ++i) {
        const int h = hook_length(diagram, {i, box.col});
        product *= Rational(h - 1, h);
    }
    product.canonicalize();
    return product;
}

std::vector<std::pair<Box, Rational>> bounds_per_box(const YoungDiagram &diagram) {
    std::vector<std::pair<Box, Rational>> out;
    for (const Box &box : removable_boxes(diagram))
        out.emplace_back(box, bound_for_box(diagram, box));
    return out;
}

BoundResult theorem1_bound(const YoungDiagram &diagram) {
    if (diagram.n_boxes() < 2)
        throw InvalidArgument("theorem requires N ≥ 2");
    const auto bounds = bounds_per_box(diagram);
    // removable_boxes is ordered by column, so a strict comparison keeps the smallest l on ties.
    auto best = bounds.front();
    for (const auto &entry : bounds)
        if (entry.second > best.second)
            best = entry;
    return {best.second, best.first};
}

double entropy_lower_bound(const YoungDiagram &diagram) {
    if (diagram.n_boxes() < 2)
        throw InvalidArgument("theorem requires N ≥ 2");
    double best = 0.0;
    bool first = true;
    for (const Box &box : removable_boxes(diagram)) {
        Rational ratio = 1;
        for (int i = 1; i < box.row; ++i) {
            const int h = hook_length(diagram, {i, box.col});
            ratio *= Rational(h, h - 1);
        }
        ratio.canonicalize();
        // ln(p/q) from the exact integers keeps precision for large products.
        const double value =
            std::log(ratio.get_num().get_d()) - std::log(ratio.get_den().get_d());
        if (first || value < best)
            best = value;
        first = false;
    }
    return best;
}

BigInt factorial(int n) {
    if (n < 0)
        throw InvalidArgument("factorial of a negative number");
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

namespace {

BigInt hook_product(const YoungDiagram &diagram) {
    BigInt product = 1;
    for (const Box &box : diagram.boxes())
        product *= hook_length(diagram, box);
    return product;
}

BigInt exact_quotient(const BigInt &num, const BigInt &den, const char *what) {
    if (num % den != 0)
        throw Error(std::string(what) + ": non-integral hook formula quotient");
    return num / den;
}

} // namespace

BigInt dim_irrep_SN(const YoungDiagram &diagram) {
    return exact_quotient(factorial(diagram.n_boxes()), hook_product(diagram), "dim_irrep_SN");
}

BigInt dim_irrep_Ud(const YoungDiagram &diagram, int d) {
    if (d < 1)
        throw InvalidArgument("local dimension must be >= 1");
    if (d < diagram.n_rows())
        return 0;
    BigInt numerator = 1;
    for (const Box &box : diagram.boxes())
        numerator *= d + box.col - box.row;
    return exact_quotient(numerator, hook_product(diagram), "dim_irrep_Ud");
}

Rational young_normalization(const YoungDiagram &diagram) {
    BigInt numerator = 1;
    for (int r : diagram.rows())
        numerator *= factorial(r);
    for (int c : diagram.columns())
        numerator *= factorial(c);
    Rational out(numerator, hook_product(diagram));
    out.canonicalize();
    return out;
}

} // namespace schurweyl
