// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <string>

#include "akl/connection.hpp"
#include "akl/numeric.hpp"

namespace akl {

// The three one-parameter subgroups of SL(2,R), up to conjugacy.
enum class Sl2Kind { Semisimple, Orthogonal, Unipotent };

// Time-t element: diag(e^t, e^{-t}); rotation by t; upper unitriangular with
// off-diagonal t. Satisfies the flow law M(t+s) = M(t) M(s).
Mat2 sl2_flow(Sl2Kind kind, double t);

// The two-dimensional homogeneous spaces of SL(2,R) that occur, each in its
// working chart:
//  - PuncturedPlane: R^2 minus the origin, row vectors acted on the right
//    ((x,y) -> (x,y) M), so composition follows act(M1 M2, p) =
//    act(M2, act(M1, p)).
//  - DiagonalComplement: complement of the diagonal in two projective lines,
//    chart (x, y) with x != y, coordinatewise fractional linear maps
//    z -> (m00 z + m01)/(m10 z + m11).
//  - HalfPlane: upper half plane, z = x + i y with y > 0, fractional linear
//    maps of the same form.
enum class ModelSpace { PuncturedPlane, DiagonalComplement, HalfPlane };

// Applies the group element. Throws DomainError when p is outside the space
// or when a fractional linear image of the DiagonalComplement chart blows up
// (the image leaves the affine chart).
Vec2 model_act(ModelSpace space, const Mat2& m, Vec2 p);

// Spaces carrying the named invariant submersions (the half plane carries
// none in this catalogue; the affine group carries two).
enum class SubmersionSpace { PuncturedPlane, DiagonalComplement, AffGroup };

struct Submersion {
    std::string formula;
    std::function<double(Vec2)> value;
    std::function<Vec2(Vec2)> gradient; // analytic, for transversality checks
};

// The eight invariant-submersion closed forms:
//   PuncturedPlane:      x y | x^2 + y^2 | x
//   DiagonalComplement:  x/y | (1 + x y)/(x - y) | 1/(x - y)
//   AffGroup ((a,b) as (x,y)): b/a for the diagonal subgroup {(lambda, 0)}
//                              (Semisimple), a for the translation subgroup
//                              {(1, tau)} (Unipotent)
// Throws DomainError for unsupported (space, kind) pairs
// (AffGroup/Orthogonal).
Submersion invariant_submersion(SubmersionSpace space, Sl2Kind kind);

// Levi-Civita connection of the metric g11 dx^2 + 2 g12 dx dy + g22 dy^2
// (exact, via the Christoffel formula). Requires det g != 0 as a function.
Connection2D levi_civita(const RationalFunction2& g11, const RationalFunction2& g12,
                         const RationalFunction2& g22);

// Levi-Civita connections of the hyperbolic metric (dx^2 + dy^2)/y^2 on the
// half plane and of the round metric 4 (dx^2 + dy^2)/(1 + x^2 + y^2)^2 in the
// stereographic chart.
Connection2D hyperbolic_connection();
Connection2D sphere_connection();

// The group of orientation-preserving affine maps of the real line,
// parameterized as (a, b) with a > 0 acting by x -> a x + b, with product
// (a1, b1) (a2, b2) = (a1 a2, a1 b2 + b1).
struct AffElement {
    double a = 1.0, b = 0.0;
};

AffElement aff_multiply(const AffElement& e1, const AffElement& e2);
AffElement aff_inverse(const AffElement& e);
// b2 (a1 - 1) = b1 (a2 - 1), up to tol; equivalent to the products in both
// orders agreeing.
bool aff_commutes(const AffElement& e1, const AffElement& e2, double tol = 1e-10);

} // namespace akl
