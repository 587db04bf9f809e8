// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "akl/poly.hpp"
#include "akl/rational.hpp"

namespace akl {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>; // row-major, possibly ragged-free rectangular

// Incrementally maintained reduced row echelon span. Rows added one at a
// time; the object keeps a canonical RREF basis of the row space.
class RowSpace {
  public:
    explicit RowSpace(int cols) : cols_(cols) {}

    // Returns true when the row enlarged the space.
    bool add(QVec row);
    int rank() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }
    const QMat& rref_rows() const { return rows_; }

    // Residual of v after reduction by the row space (zero iff v lies in it).
    QVec reduce(QVec v) const;
    bool contains(const QVec& v) const;

    // True when every row annihilates v, i.e. v lies in the kernel.
    bool annihilates(const QVec& v) const;

    // Canonical basis of {v : R v = 0 for every row R}: one vector per free
    // column, with a 1 in the free slot and pivot entries filled in from the
    // RREF rows.
    QMat nullspace() const;

  private:
    int cols_;
    QMat rows_;               // RREF rows, pivots strictly increasing
    std::vector<int> pivots_; // pivot column of each row
};

int matrix_rank(const QMat& m, int cols);
QMat nullspace(const QMat& m, int cols);

// Any solution of A x = b (free variables set to 0); nullopt if inconsistent.
std::optional<QVec> solve_linear(const QMat& a, const QVec& b);

// Inertia of a symmetric rational matrix via congruence diagonalization.
struct Inertia {
    int positive = 0, negative = 0, zero = 0;
};
Inertia symmetric_signature(QMat a);

// Exact determinant of a square matrix of univariate polynomials
// (memoized Laplace expansion over column subsets).
PolyS det_polys(const std::vector<std::vector<PolyS>>& m);

Rational det_rational(QMat m);

} // namespace akl
