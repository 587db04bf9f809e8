// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <string>
#include <vector>

#include "akl/connection.hpp"
#include "akl/linalg.hpp"
#include "akl/rational_function.hpp"

namespace akl {

// 1-jet of a vector field a ∂x + b ∂y at a base point, ordered
// (a, b, a_x, a_y, b_x, b_y).
using KillingJet = std::array<Rational, 6>;

struct BasePoint {
    Rational x, y;
};

// The Killing-field equations of a connection, written as a total linear
// system on the 1-jet: six rows expressing the second derivatives
// (a_xx, b_xx, a_xy, b_xy, a_yy, b_yy) as combinations of the 1-jet, and two
// homogeneous first-order rows coming from torsion invariance.
class KillingSystem {
  public:
    // The connection the system was assembled from.
    Connection2D source;
    // second_order[r][j]: coefficient of jet slot j in the expression of the
    // r-th second derivative; rows ordered (a_xx, b_xx, a_xy, b_xy, a_yy, b_yy).
    std::array<std::array<RationalFunction2, 6>, 6> second_order;
    // constraints[r][j]: homogeneous rows that every Killing jet annihilates.
    std::array<std::array<RationalFunction2, 6>, 2> constraints;

    // Symbolic residuals of all eight equations for the candidate field
    // a ∂x + b ∂y; the field is Killing on its domain iff all eight vanish
    // identically.
    std::array<RationalFunction2, 8> residuals(const RationalFunction2& a,
                                               const RationalFunction2& b) const;

    // Second derivatives of a Killing field at p, computed from its 1-jet:
    // rows ordered like second_order. Throws PoleError on coefficient poles.
    std::array<QVec, 6> jet_derivative_rows(const BasePoint& p) const;
};

KillingSystem assemble(const Connection2D& c);

// Space of Killing 1-jets at a base point, found by prolonging the first
// order constraints and all integrability conditions and collecting exact
// linear constraints on the 6-dimensional jet space.
struct Solution {
    std::vector<KillingJet> basis; // canonical nullspace basis
    bool stabilized = false;       // rank unchanged for two consecutive orders
    int orders_used = 0;
    RowSpace constraint_space = RowSpace(6);

    int dim() const { return static_cast<int>(basis.size()); }
    bool contains(const KillingJet& j) const;
};

Solution solve(const Connection2D& c, const BasePoint& p, int max_order = 6);

// Lie bracket of two Killing jets (value and derivative parts; second
// derivatives supplied by the Killing equations). Both jets must lie in the
// solved jet space at p.
KillingJet bracket(const KillingJet& j1, const KillingJet& j2,
                   const Connection2D& c, const BasePoint& p);
KillingJet bracket(const Solution& sol, const KillingSystem& sys,
                   const KillingJet& j1, const KillingJet& j2, const BasePoint& p);

enum class CaseKind {
    FlatTorsionFree,
    Dim4Case,
    SL2,
    SO3,
    Affine2,
    Abelian2,
    LowRank,
    Other,
};

struct AlgebraLabel {
    CaseKind kind = CaseKind::Other;
    int dim = 0;
    std::string to_string() const;
    bool operator==(const AlgebraLabel& o) const = default;
};

struct AlgebraReport {
    int dim = 0;
    std::vector<KillingJet> basis;
    // structure[i][j] = coordinates of [X_i, X_j] in the basis
    std::vector<std::vector<QVec>> structure;
    AlgebraLabel label;
    bool homogeneous_at_point = false;
    bool stabilized = true;
    bool flat = false;
    bool torsion_free = false;
};

// Structure constants + case recognition for a solved Killing-jet basis.
AlgebraReport classify_algebra(const std::vector<KillingJet>& basis,
                               const Connection2D& c, const BasePoint& p);

// True iff the value parts {(a,b)} of the jets span the tangent plane.
bool is_homogeneous(const std::vector<KillingJet>& basis);

// solve + classify_algebra + flatness/torsion flags in one call.
AlgebraReport classify_connection(const Connection2D& c, const BasePoint& p,
                                  int max_order = 6);

// ---------------------------------------------------------------------------
// Constant-coefficient certificate: impose that ∂x, ∂y and the rotational
// field (s x + y) ∂x + (s y - x) ∂y are all Killing for a connection with
// constant coefficients. The result is a homogeneous 8x8 linear system in
// (A,B,C,D,E,F,U,V) whose determinant must be a nonzero rational multiple of
// (s^2+9)(s^2+1)^3; at any s that is not a root the only such connection is
// the flat torsion-free one.
// ---------------------------------------------------------------------------
std::vector<std::vector<PolyS>> case6_matrix();
QMat case6_matrix_at(const Rational& s);
// Returns the determinant after asserting the expected form; throws
// CertificateError on mismatch.
PolyS verify_case6();

} // namespace akl
