#pragma once

#include "schurweyl/rational.hpp"

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace schurweyl {

/// A box of a Young diagram, 1-based (row, column).
struct Box {
    int row = 1;
    int col = 1;

    friend auto operator<=>(const Box &, const Box &) = default;
};

std::string to_string(const Box &box); // "(i,j)"

/// Young diagram of a partition of N. Immutable once constructed.
///
/// Rows are r_1 >= ... >= r_{c_1} > 0, columns are the conjugate partition
/// c_1 >= ... >= c_{r_1}.
class YoungDiagram {
  public:
    /// Empty diagram (N = 0). Only reachable through box removal.
    YoungDiagram() = default;

    /// Throws InvalidArgument unless rows is weakly decreasing and positive.
    explicit YoungDiagram(std::vector<int> rows);

    const std::vector<int> &rows() const noexcept { return rows_; }
    const std::vector<int> &columns() const noexcept { return columns_; }

    int n_boxes() const noexcept { return n_boxes_; }
    int n_rows() const noexcept { return static_cast<int>(rows_.size()); }
    int n_columns() const noexcept { return static_cast<int>(columns_.size()); }

    /// r_i, 1-based.
    int row_length(int i) const;
    /// c_j, 1-based.
    int column_length(int j) const;

    bool contains(const Box &box) const noexcept;
    bool empty() const noexcept { return n_boxes_ == 0; }

    YoungDiagram conjugate() const;

    /// The diagram with `box` deleted. The box must be removable.
    YoungDiagram without(const Box &box) const;

    /// All boxes in row-major order.
    std::vector<Box> boxes() const;

    friend bool operator==(const YoungDiagram &a, const YoungDiagram &b) { return a.rows_ == b.rows_; }
    friend auto operator<=>(const YoungDiagram &a, const YoungDiagram &b) { return a.rows_ <=> b.rows_; }

  private:
    std::vector<int> rows_;
    std::vector<int> columns_;
    int n_boxes_ = 0;
};

std::string to_string(const YoungDiagram &diagram); // "3,2,1"

/// All partitions of n in reverse lexicographic order ((n) first, (1,...,1) last).
std::vector<YoungDiagram> partitions_of(int n);

/// h_(i,j) = r_i - j + c_j - i + 1. Throws InvalidArgument("box outside diagram").
int hook_length(const YoungDiagram &diagram, const Box &box);

/// Boxes at the end of both their row and column, ordered by column index.
std::vector<Box> removable_boxes(const YoungDiagram &diagram);

bool is_removable(const YoungDiagram &diagram, const Box &box);

/// Product over the boxes above a removable box (c_l, l) of (1 - 1/h_(i,l)).
/// The empty product (box in the first row) is 1.
Rational bound_for_box(const YoungDiagram &diagram, const Box &box);

/// Per-box bound for every removable box, in removable_boxes order.
std::vector<std::pair<Box, Rational>> bounds_per_box(const YoungDiagram &diagram);

struct BoundResult {
    Rational value;
    Box witness;
};

/// Maximum of bound_for_box over removable boxes; ties go to the smallest column.
/// Requires N >= 2.
BoundResult theorem1_bound(const YoungDiagram &diagram);

/// min over removable boxes of ln prod h/(h-1), i.e. -ln theorem1_bound.
double entropy_lower_bound(const YoungDiagram &diagram);

/// N! / prod of hook lengths.
BigInt dim_irrep_SN(const YoungDiagram &diagram);

/// prod over boxes of (d + j - i) / h_(i,j); zero when d < c_1.
BigInt dim_irrep_Ud(const YoungDiagram &diagram, int d);

/// (prod r_i!)(prod c_j!) / prod hooks, the Young-projection normalization.
Rational young_normalization(const YoungDiagram &diagram);

BigInt factorial(int n);

} // namespace schurweyl
