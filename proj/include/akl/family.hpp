// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <string>
#include <vector>

#include "akl/connection.hpp"
#include "akl/killing.hpp"
#include "akl/numeric.hpp"
#include "akl/vector_field.hpp"

namespace akl {

// The four-parameter connection family (plus the removable parameter delta):
//   nabla_dx dx = 0, nabla_dx dy = (gamma + upsilon) dx,
//   nabla_dy dx = (gamma - upsilon) dx,
//   nabla_dy dy = (beta x + delta) dx + (2 gamma - alpha) dy.
struct FamilyParams {
    Rational alpha{0}, beta{0}, gamma{0}, upsilon{0}, delta{0};
};

// The curvature obstruction of the family: R(dx,dy)dy has dx-component
// beta + (gamma+upsilon)(gamma+upsilon-alpha) (a constant).
Rational curvature_bracket(const FamilyParams& p);

// A parameter tuple is admissible when torsion and curvature do not vanish
// simultaneously, i.e. NOT (upsilon = 0 and curvature_bracket = 0).
bool is_admissible(const FamilyParams& p);

Connection2D make_connection(const FamilyParams& p);

// Eliminating delta: if q(y) solves q'' + alpha q' + beta q + delta = 0 then
// (x, y) -> (x + q(y), y) carries the delta connection to the delta = 0 one.
// q is chosen polynomial: a constant when beta != 0, linear when beta = 0 and
// alpha != 0, quadratic when alpha = beta = 0.
struct Normalization {
    FamilyParams params;           // same (alpha,beta,gamma,upsilon), delta = 0
    Rational q0{0}, q1{0}, q2{0};  // q(y) = q0 + q1 y + q2 y^2
    std::string q_string() const;
};
Normalization normalize_delta(const FamilyParams& p);

// The parameter rescaling (alpha,beta,gamma,upsilon) ->
// (mu alpha, mu^2 beta, mu gamma, mu upsilon); delta rescales with beta.
FamilyParams rescale(const FamilyParams& p, const Rational& mu);

// Root regime of P(xi) = xi^2 + alpha xi + beta, the characteristic
// polynomial of h'' + alpha h' + beta h = 0.
enum class RegimeKind { RealDistinct, ComplexPair, RealDouble };

struct Regime {
    RegimeKind kind = RegimeKind::RealDouble;
    Rational discriminant{0}; // alpha^2 - 4 beta
    // RealDistinct: roots a1 > a2.  ComplexPair: roots a +- i b, b > 0.
    // RealDouble: double root a.
    double a1 = 0.0, a2 = 0.0;
    double a = 0.0, b = 0.0;
    // True when the root data is rational (|discriminant| is a rational
    // square); the _exact fields are then populated.
    bool exact = false;
    Rational a1_exact{0}, a2_exact{0}, a_exact{0}, b_exact{0};
};

Regime regime_of(const FamilyParams& p);

// The closed-form Killing basis {x dx, dy, Z1, Z2} of an admissible member
// with delta = 0.  Z1, Z2 solve h'' + alpha h' + beta h = 0:
//   RealDistinct: Z1 = e^{a1 y} dx, Z2 = e^{a2 y} dx
//   ComplexPair:  Z1 = e^{a y} cos(b y) dx, Z2 = e^{a y} sin(b y) dx
//   RealDouble:   Z1 = e^{a y} dx, Z2 = y e^{a y} dx
std::array<VectorFieldCF, 4> killing_basis(const FamilyParams& p, const Regime& r);

// Exact 1-jets of the basis at a point (x0, 0).  Requires y0 = 0 (the basis
// values and derivatives are rational only there) and an exact regime.
std::vector<KillingJet> killing_basis_jets(const FamilyParams& p, const Regime& r,
                                           const Rational& x0);

// ---------------------------------------------------------------------------
// The isometry group G = H x| K of an admissible member.  H ~ R^2 acts by
// (x, y) -> (x e^s, y + t), K ~ R^2 by (x, y) -> (x + u h1(y) + v h2(y), y)
// where (h1, h2) is the solution basis above; an element (h, k) acts by h
// first and then k.  Products follow (h1,k1)(h2,k2) = (h1+h2, Psi_h1(k2)+k1).
// ---------------------------------------------------------------------------

struct GroupElement {
    Vec2 h; // (s, t)
    Vec2 k; // (u, v)
};

// Matrix of the H-representation on K (conjugation of the K-translation
// parameters by the H-map).
Mat2 psi(Vec2 h, const Regime& r);

GroupElement multiply(const GroupElement& g1, const GroupElement& g2, const Regime& r);
GroupElement inverse(const GroupElement& g, const Regime& r);
Vec2 act(const GroupElement& g, Vec2 pt, const Regime& r);

// The action of g as a NumericMap with analytic Jacobian (for pullback
// residual checks).
NumericMap group_map(const GroupElement& g, const Regime& r);

// Commutation criterion (1 - Psi_h1) k2 = (1 - Psi_h2) k1, tolerance on the
// component difference.
bool commutes(const GroupElement& g1, const GroupElement& g2, const Regime& r,
              double tol = 1e-9);

// Conjugation by the pure-K element (0, q): g -> (h, (1 - Psi_h) q + k).
GroupElement conjugate_by_k(Vec2 q, const GroupElement& g, const Regime& r);

// ---------------------------------------------------------------------------
// The candidate extra isometry sigma(x, y) = (-e^{alpha y} x, -y).  It is an
// isometry of the member exactly on the slice alpha = 2 gamma, upsilon = 0.
// ---------------------------------------------------------------------------
struct SigmaReport {
    bool is_isometry = false;
    double residual = 0.0;
};
SigmaReport sigma_test(const FamilyParams& p);

// ---------------------------------------------------------------------------
// Holonomy case analysis: given two commuting holonomy generators, either
// produce two commuting Killing fields whose flows realize them (after
// conjugating the pair into a normal form), or report the obstruction that
// rules out a compact quotient.
// ---------------------------------------------------------------------------

struct HolonomyVerdict {
    enum class Outcome {
        CommutingFields,
        ObstructedSubmersionY,
        ObstructedDeltaNegative,
        NotCommuting,
    };
    Outcome outcome = Outcome::NotCommuting;

    // Populated for CommutingFields.
    VectorFieldCF field1, field2;
    std::string field1_text, field2_text;
    bool has_degeneracy_curve = false;
    std::string degeneracy_curve; // e.g. "(a1 - a2) x = c e^{a1 y}"
    std::string note;

    std::string outcome_string() const;
};

HolonomyVerdict classify_holonomy(const FamilyParams& p, const GroupElement& g1,
                                  const GroupElement& g2);

} // namespace akl
