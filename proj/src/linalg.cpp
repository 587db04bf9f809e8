// SPDX-License-Identifier: Apache-2.0
#include "akl/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "akl/errors.hpp"

namespace akl {

bool RowSpace::add(QVec row) {
    if (static_cast<int>(row.size()) != cols_)
        throw DomainError("row width does not match the row space");
    row = reduce(std::move(row));
    int pivot = -1;
    for (int j = 0; j < cols_; ++j)
        if (row[static_cast<size_t>(j)] != 0) {
            pivot = j;
            break;
        }
    if (pivot < 0) return false;
    const Rational inv = Rational(1) / row[static_cast<size_t>(pivot)];
    for (auto& v : row) v *= inv;
    // Back-eliminate the new pivot from existing rows.
    for (size_t i = 0; i < rows_.size(); ++i) {
        const Rational f = rows_[i][static_cast<size_t>(pivot)];
        if (f == 0) continue;
        for (int j = 0; j < cols_; ++j)
            rows_[i][static_cast<size_t>(j)] -= f * row[static_cast<size_t>(j)];
    }
    // Insert keeping pivot columns sorted.
    const auto at = std::upper_bound(pivots_.begin(), pivots_.end(), pivot);
    const auto idx = static_cast<size_t>(at - pivots_.begin());
    pivots_.insert(at, pivot);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(row));
    return true;
}

QVec RowSpace::reduce(QVec v) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
        const Rational f = v[static_cast<size_t>(pivots_[i])];
        if (f == 0) continue;
        for (int j = 0; j < cols_; ++j)
            v[static_cast<size_t>(j)] -= f * rows_[i][static_cast<size_t>(j)];
    }
    return v;
}

bool RowSpace::contains(const QVec& v) const {
    const QVec r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const Rational& q) { return q == 0; });
}

bool RowSpace::annihilates(const QVec& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw DomainError("vector width does not match the row space");
    for (const QVec& row : rows_) {
        Rational dot(0);
        for (int j = 0; j < cols_; ++j)
            dot += row[static_cast<size_t>(j)] * v[static_cast<size_t>(j)];
        if (dot != 0) return false;
    }
    return true;
}

QMat RowSpace::nullspace() const {
    std::vector<bool> is_pivot(static_cast<size_t>(cols_), false);
    for (int p : pivots_) is_pivot[static_cast<size_t>(p)] = true;
    QMat basis;
    for (int j = 0; j < cols_; ++j) {
        if (is_pivot[static_cast<size_t>(j)]) continue;
        QVec v(static_cast<size_t>(cols_), Rational(0));
        v[static_cast<size_t>(j)] = 1;
        for (size_t i = 0; i < rows_.size(); ++i)
            v[static_cast<size_t>(pivots_[i])] = -rows_[i][static_cast<size_t>(j)];
        basis.push_back(std::move(v));
    }
    return basis;
}

int matrix_rank(const QMat& m, int cols) {
    RowSpace rs(cols);
    for (const auto& row : m) rs.add(row);
    return rs.rank();
}

QMat nullspace(const QMat& m, int cols) {
    RowSpace rs(cols);
    for (const auto& row : m) rs.add(row);
    return rs.nullspace();
}

std::optional<QVec> solve_linear(const QMat& a, const QVec& b) {
    const size_t rows = a.size();
    if (rows != b.size()) throw DomainError("solve_linear: shape mismatch");
    const size_t cols = rows == 0 ? 0 : a[0].size();
    // Eliminate on the augmented matrix [A | b].
    QMat aug(rows, QVec(cols + 1));
    for (size_t i = 0; i < rows; ++i) {
        std::copy(a[i].begin(), a[i].end(), aug[i].begin());
        aug[i][cols] = b[i];
    }
    std::vector<int> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && aug[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(aug[sel], aug[r]);
        const Rational inv = Rational(1) / aug[r][c];
        for (auto& v : aug[r]) v *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const Rational f = aug[i][c];
            if (f == 0) continue;
            for (size_t j = c; j <= cols; ++j) aug[i][j] -= f * aug[r][j];
        }
        pivot_col.push_back(static_cast<int>(c));
        ++r;
    }
    for (size_t i = r; i < rows; ++i)
        if (aug[i][cols] != 0) return std::nullopt; // inconsistent
    QVec x(cols, Rational(0));
    for (size_t i = 0; i < r; ++i) x[static_cast<size_t>(pivot_col[i])] = aug[i][cols];
    return x;
}

Inertia symmetric_signature(QMat a) {
    const size_t n = a.size();
    Inertia sig;
    // Congruence diagonalization: symmetric row+column operations.
    for (size_t k = 0; k < n; ++k) {
        // Ensure a nonzero diagonal pivot at (k,k) if possible.
        if (a[k][k] == 0) {
            size_t swap_row = k;
            for (size_t i = k + 1; i < n; ++i)
                if (a[i][i] != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row != k) {
                std::swap(a[k], a[swap_row]);
                for (size_t i = 0; i < n; ++i) std::swap(a[i][k], a[i][swap_row]);
            } else {
                // No nonzero diagonal below; use an off-diagonal entry.
                size_t j = n;
                for (size_t c = k + 1; c < n && j == n; ++c)
                    if (a[k][c] != 0) j = c;
                if (j == n) {
                    ++sig.zero; // whole row/column is zero
                    continue;
                }
                // Row/col k += row/col j creates 2*a[k][j] on the diagonal.
                for (size_t c = 0; c < n; ++c) a[k][c] += a[j][c];
                for (size_t r2 = 0; r2 < n; ++r2) a[r2][k] += a[r2][j];
            }
        }
        const Rational p = a[k][k];
        if (p == 0) {
            ++sig.zero;
            continue;
        }
        if (p > 0) ++sig.positive;
        else ++sig.negative;
        for (size_t i = k + 1; i < n; ++i) {
            const Rational f = a[i][k] / p;
            if (f == 0) continue;
            for (size_t c = 0; c < n; ++c) a[i][c] -= f * a[k][c];
            for (size_t r2 = 0; r2 < n; ++r2) a[r2][i] -= f * a[r2][k];
        }
    }
    return sig;
}

PolyS det_polys(const std::vector<std::vector<PolyS>>& m) {
    const size_t n = m.size();
    if (n == 0) return PolyS(Rational(1));
    for (const auto& row : m)
        if (row.size() != n) throw DomainError("det of a non-square matrix");
    if (n > 25) throw DomainError("det_polys supports matrices up to 25x25");
    // dp[mask] = det of the submatrix using rows 0..popcount(mask)-1 and the
    // column set encoded by mask.
    std::unordered_map<uint32_t, PolyS> dp;
    dp[0] = PolyS(Rational(1));
    const uint32_t full = (n >= 32) ? ~0u : ((1u << n) - 1u);
    // Iterate masks grouped by popcount so dependencies are available.
    std::vector<std::vector<uint32_t>> by_count(n + 1);
    for (uint32_t mask = 0; mask <= full; ++mask) {
        const int pc = __builtin_popcount(mask);
        if (pc <= static_cast<int>(n)) by_count[static_cast<size_t>(pc)].push_back(mask);
        if (mask == full) break;
    }
    for (size_t pc = 1; pc <= n; ++pc) {
        const size_t row = pc - 1; // expand along the last row of the submatrix
        for (const uint32_t mask : by_count[pc]) {
            PolyS acc;
            int sign = (row % 2 == 0) ? 1 : -1; // (-1)^(row + idx), idx = 0
            for (size_t col = 0; col < n; ++col) {
                if (!(mask & (1u << col))) continue;
                const PolyS& entry = m[row][col];
                if (!entry.is_zero()) {
                    const PolyS& sub = dp.at(mask & ~(1u << col));
                    acc += (sign > 0) ? entry * sub : (-entry) * sub;
                }
                sign = -sign;
            }
            dp[mask] = std::move(acc);
        }
    }
    return dp.at(full);
}

Rational det_rational(QMat m) {
    const size_t n = m.size();
    Rational det(1);
    for (size_t k = 0; k < n; ++k) {
        size_t sel = k;
        while (sel < n && m[sel][k] == 0) ++sel;
        if (sel == n) return Rational(0);
        if (sel != k) {
            std::swap(m[sel], m[k]);
            det = -det;
        }
        det *= m[k][k];
        const Rational inv = Rational(1) / m[k][k];
        for (size_t i = k + 1; i < n; ++i) {
            const Rational f = m[i][k] * inv;
            if (f == 0) continue;
            for (size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return det;
}

} // namespace akl
