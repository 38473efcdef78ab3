#pragma once

// Independent reference computations. Nothing here calls the library's own
// versions of the quantity being checked.

#include "schurweyl/permutation.hpp"
#include "schurweyl/tensor_state.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

using schurweyl::Complex;

inline std::vector<int> conjugate(const std::vector<int> &rows) {
    std::vector<int> cols;
    for (int j = 1; !rows.empty() && j <= rows.front(); ++j)
        cols.push_back(static_cast<int>(std::count_if(rows.begin(), rows.end(), [j](int r) { return r >= j; })));
    return cols;
}

/// Arm (boxes to the right) + leg (boxes below) + 1, by walking the diagram.
inline int hook_by_counting(const std::vector<int> &rows, int i, int j) {
    int arm = 0;
    for (int c = j + 1; c <= rows[static_cast<std::size_t>(i - 1)]; ++c)
        ++arm;
    int leg = 0;
    for (int r = i + 1; r <= static_cast<int>(rows.size()) && rows[static_cast<std::size_t>(r - 1)] >= j; ++r)
        ++leg;
    return arm + leg + 1;
}

/// Number of fillings of the shape by a permutation of 1..N that are standard.
inline long count_standard_fillings(const std::vector<int> &rows) {
    const int n = std::accumulate(rows.begin(), rows.end(), 0);
    std::vector<int> word(static_cast<std::size_t>(n));
    std::iota(word.begin(), word.end(), 1);
    long count = 0;
    do {
        std::vector<std::vector<int>> grid;
        std::size_t pos = 0;
        for (int r : rows) {
            grid.emplace_back(word.begin() + static_cast<long>(pos), word.begin() + static_cast<long>(pos + r));
            pos += static_cast<std::size_t>(r);
        }
        bool ok = true;
        for (std::size_t i = 0; i < grid.size() && ok; ++i)
            for (std::size_t j = 0; j < grid[i].size() && ok; ++j) {
                if (j > 0 && grid[i][j] < grid[i][j - 1])
                    ok = false;
                if (i > 0 && grid[i][j] < grid[i - 1][j])
                    ok = false;
            }
        count += ok;
    } while (std::next_permutation(word.begin(), word.end()));
    return count;
}

/// Semistandard fillings with entries in 1..d (rows weakly, columns strictly
/// increasing); equals dim V^nu(d).
inline long count_semistandard(const std::vector<int> &rows, int d) {
    std::vector<std::pair<int, int>> cells;
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < rows[i]; ++j)
            cells.emplace_back(static_cast<int>(i), j);
    std::vector<std::vector<int>> grid;
    for (int r : rows)
        grid.emplace_back(static_cast<std::size_t>(r), 0);
    long count = 0;
    auto fill = [&](auto &&self, std::size_t c) -> void {
        if (c == cells.size()) {
            ++count;
            return;
        }
        const auto [i, j] = cells[c];
        int lo = 1;
        if (j > 0)
            lo = std::max(lo, grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)]);
        if (i > 0)
            lo = std::max(lo, grid[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] + 1);
        for (int v = lo; v <= d; ++v) {
            grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
            self(self, c + 1);
        }
    };
    fill(fill, 0);
    return count;
}

inline std::vector<int> digits_of(std::int64_t flat, int d, int n) {
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int p = n - 1; p >= 0; --p) {
        out[static_cast<std::size_t>(p)] = static_cast<int>(flat % d);
        flat /= d;
    }
    return out;
}

inline std::int64_t flat_of(const std::vector<int> &digits, int d) {
    std::int64_t flat = 0;
    for (int x : digits)
        flat = flat * d + x;
    return flat;
}

/// Dense U_sigma: the factor at position p moves to position sigma(p).
inline Eigen::MatrixXcd permutation_unitary(const schurweyl::Permutation &sigma, int d) {
    const int n = sigma.size();
    std::int64_t size = 1;
    for (int p = 0; p < n; ++p)
        size *= d;
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(size, size);
    for (std::int64_t in = 0; in < size; ++in) {
        const auto a = digits_of(in, d, n);
        std::vector<int> b(a.size());
        for (int p = 1; p <= n; ++p)
            b[static_cast<std::size_t>(sigma(p) - 1)] = a[static_cast<std::size_t>(p - 1)];
        u(flat_of(b, d), in) = 1.0;
    }
    return u;
}

/// rho[(i_keep),(j_keep)] = sum over the traced digits of psi(i) conj(psi(j)),
/// by explicit double loop over basis tuples.
inline Eigen::MatrixXcd partial_trace(const schurweyl::TensorState &psi, const std::vector<int> &keep) {
    const int d = psi.local_dim();
    const int n = psi.n_factors();
    std::int64_t kept_dim = 1;
    for (std::size_t i = 0; i < keep.size(); ++i)
        kept_dim *= d;
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(kept_dim, kept_dim);
    auto key = [&](const std::vector<int> &digits, bool kept_part) {
        std::vector<int> part;
        for (int p = 1; p <= n; ++p) {
            const bool in_keep = std::find(keep.begin(), keep.end(), p) != keep.end();
            if (in_keep == kept_part)
                part.push_back(digits[static_cast<std::size_t>(p - 1)]);
        }
        return flat_of(part, d);
    };
    for (std::int64_t a = 0; a < psi.size(); ++a)
        for (std::int64_t b = 0; b < psi.size(); ++b) {
            const auto da = digits_of(a, d, n);
            const auto db = digits_of(b, d, n);
            if (key(da, false) != key(db, false))
                continue;
            rho(key(da, true), key(db, true)) += psi[a] * std::conj(psi[b]);
        }
    return rho;
}

inline long binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    long out = 1;
    for (int i = 1; i <= k; ++i)
        out = out * (n - k + i) / i;
    return out;
}

inline long factorial(int n) {
    long out = 1;
    for (int i = 2; i <= n; ++i)
        out *= i;
    return out;
}

/// Partitions of n as row vectors, any order.
inline std::vector<std::vector<int>> partitions(int n, int max_part = -1) {
    if (max_part < 0)
        max_part = n;
    if (n == 0)
        return {{}};
    std::vector<std::vector<int>> out;
    for (int first = std::min(n, max_part); first >= 1; --first)
        for (auto rest : partitions(n - first, first)) {
            rest.insert(rest.begin(), first);
            out.push_back(std::move(rest));
        }
    return out;
}

} // namespace oracle
