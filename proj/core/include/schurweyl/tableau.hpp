#pragma once

#include "schurweyl/young.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace schurweyl {

/// Standard Young tableau: a filling of a diagram with 1..N increasing
/// along rows and down columns. Immutable once constructed.
class StandardTableau {
  public:
    /// The empty tableau (N = 0).
    StandardTableau() = default;

    /// rows[i] lists the entries of row i+1. Throws InvalidArgument unless the
    /// shape is a Young diagram and the filling is standard.
    explicit StandardTableau(std::vector<std::vector<int>> rows);

    const YoungDiagram &diagram() const noexcept { return diagram_; }
    const std::vector<std::vector<int>> &rows() const noexcept { return rows_; }
    int n_boxes() const noexcept { return diagram_.n_boxes(); }

    /// Entry at a box (1-based).
    int at(const Box &box) const;
    /// Box holding entry k (1 <= k <= N).
    Box position(int k) const;

    /// Entries of row i / column j, 1-based.
    std::vector<int> row_entries(int i) const;
    std::vector<int> column_entries(int j) const;

    /// Rows concatenated top to bottom.
    std::vector<int> reading_word() const;

    bool is_row_ordered() const;
    bool is_column_ordered() const;

    friend bool operator==(const StandardTableau &a, const StandardTableau &b) { return a.rows_ == b.rows_; }
    /// Canonical order: lexicographic on the reading word (shapes compared first).
    friend std::strong_ordering operator<=>(const StandardTableau &a, const StandardTableau &b);

  private:
    YoungDiagram diagram_;
    std::vector<std::vector<int>> rows_;
    std::vector<Box> positions_; // positions_[k-1] = box of k
};

std::string to_string(const StandardTableau &t); // "[[1,3],[2]]"

StandardTableau row_ordered(const YoungDiagram &diagram);
StandardTableau column_ordered(const YoungDiagram &diagram);

/// Tableau with N in the removable `box` and 1..N-1 filled column by column.
StandardTableau column_ordered_with_last_in(const YoungDiagram &diagram, const Box &box);

/// All standard tableaux of the diagram, sorted by reading word.
std::vector<StandardTableau> enumerate_standard_tableaux(const YoungDiagram &diagram);

/// Erases the box holding N.
StandardTableau remove_largest(const StandardTableau &t);

struct TableauSplit {
    StandardTableau first;                 // entries 1..k
    std::optional<StandardTableau> second; // entries k+1..N relabeled to 1..N-k, when a straight shape
};

/// Splits between k and k+1 (1 <= k <= N-1). The second part exists only if
/// the boxes holding k+1..N, shifted to start at (1,1), form a Young diagram.
TableauSplit split_tableau(const StandardTableau &t, int k);

/// (j' - i') - (j - i) for k in (i,j) and k+1 in (i',j').
int axial_distance(const StandardTableau &t, int k);

/// Swaps entries k and k+1; the result may be non-standard (then throws).
StandardTableau swap_entries(const StandardTableau &t, int k);

} // namespace schurweyl
