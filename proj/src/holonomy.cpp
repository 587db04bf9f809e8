// SPDX-License-Identifier: Apache-2.0
//
// Holonomy case analysis for the four-parameter family: given two commuting
// generators in G = H x| K, normalize them by conjugation and generator swaps
// until they visibly lie on a two-parameter abelian subgroup generated by the
// flows of two commuting Killing fields, or until one of the structural
// obstructions is reached.

#include "akl/family.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace akl {

std::string HolonomyVerdict::outcome_string() const {
    switch (outcome) {
    case Outcome::CommutingFields: return "CommutingFields";
    case Outcome::ObstructedSubmersionY: return "ObstructedSubmersionY";
    case Outcome::ObstructedDeltaNegative: return "ObstructedDeltaNegative";
    case Outcome::NotCommuting: return "NotCommuting";
    }
    return "NotCommuting";
}

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

VectorFieldCF scaled_x_dx_plus_dy(double coef) {
    // coef * x dx + dy
    return VectorFieldCF::x_dx().scaled(coef) + VectorFieldCF::dy();
}

} // namespace

HolonomyVerdict classify_holonomy(const FamilyParams& p, const GroupElement& g1_in,
                                  const GroupElement& g2_in) {
    Regime r = regime_of(p);
    HolonomyVerdict v;
    const double tol = 1e-9;
    const double match_tol = 1e-7;

    if (!commutes(g1_in, g2_in, r, tol)) {
        v.outcome = HolonomyVerdict::Outcome::NotCommuting;
        v.note = "the generators do not commute, so they generate no torus holonomy";
        return v;
    }

    GroupElement g1 = g1_in, g2 = g2_in;

    const auto set_both_in_h = [&v]() {
        v.outcome = HolonomyVerdict::Outcome::CommutingFields;
        v.field1 = VectorFieldCF::x_dx();
        v.field2 = VectorFieldCF::dy();
        v.field1_text = v.field1.to_string();
        v.field2_text = v.field2.to_string();
        v.has_degeneracy_curve = true;
        v.degeneracy_curve = "x = 0";
    };

    if (norm_inf(g1.k) < tol && norm_inf(g2.k) < tol) {
        set_both_in_h();
        v.note = "both generators already lie in the H-factor";
        return v;
    }

    // If 1 - Psi_h is invertible for either generator, a pure-K conjugation
    // moves that generator into H, and commutation forces the other one in
    // as well.
    for (const GroupElement* g : {&g1, &g2}) {
        const Mat2 m = Mat2::identity() - psi(g->h, r);
        if (std::fabs(m.det()) > tol) {
            const Vec2 w = m.inverse() * g->k;
            const Vec2 q{-w.x, -w.y};
            g1 = conjugate_by_k(q, g1, r);
            g2 = conjugate_by_k(q, g2, r);
            set_both_in_h();
            v.note = "conjugated both generators into the H-factor";
            return v;
        }
    }

    // From here on both 1 - Psi are singular.
    if (norm_inf(g1.h) < tol && norm_inf(g2.h) < tol) {
        v.outcome = HolonomyVerdict::Outcome::ObstructedSubmersionY;
        v.note = "both generators lie in the K-factor; they preserve every "
                 "level set of the submersion y, which therefore descends to "
                 "an unbounded real-valued submersion on the quotient";
        return v;
    }

    if (r.kind == RegimeKind::ComplexPair) {
        v.outcome = HolonomyVerdict::Outcome::ObstructedDeltaNegative;
        v.note = "negative discriminant: the only singular H-parts are the "
                 "periods t in (2 pi / b) Z, where Psi is the identity; the "
                 "K-translation parts cannot be conjugated away and survive "
                 "on every finite cover";
        return v;
    }

    if (r.kind == RegimeKind::RealDistinct) {
        if (std::fabs(g1.h.y) < tol)
            std::swap(g1, g2);
        // Relabel the roots so that the first generator satisfies s1 = a1 t1
        // (singularity of 1 - Psi means s = a1 t or s = a2 t).
        const double s1 = g1.h.x, t1 = g1.h.y;
        if (std::fabs(s1 - r.a1 * t1) > std::fabs(s1 - r.a2 * t1)) {
            std::swap(r.a1, r.a2);
            std::swap(r.a1_exact, r.a2_exact);
            // K-coordinates are tied to the root order.
            std::swap(g1.k.x, g1.k.y);
            std::swap(g2.k.x, g2.k.y);
        }
        const double a1 = r.a1, a2 = r.a2;
        // Kill the second K-coordinate of g1; the first is untouched because
        // (1 - Psi_h1) has a zero first row here.
        const double f1 = 1.0 - std::exp((a1 - a2) * t1);
        const Vec2 q{0.0, -g1.k.y / f1};
        g1 = conjugate_by_k(q, g1, r);
        g2 = conjugate_by_k(q, g2, r);

        const double s2 = g2.h.x, t2 = g2.h.y;
        if (std::fabs(s2 - a1 * t2) < match_tol) {
            // Both generators lie on the subgroup
            // (xi, zeta) -> ((a1 xi, xi), (zeta, 0)), generated by the flows
            // of a1 x dx + dy and e^{a1 y} dx.
            v.outcome = HolonomyVerdict::Outcome::CommutingFields;
            v.field1 = scaled_x_dx_plus_dy(a1);
            v.field2 = VectorFieldCF::h_dx(1.0, 0, a1);
            v.field1_text = v.field1.to_string();
            v.field2_text = v.field2.to_string();
            v.note = "generators realized by the flows of the two fields";
            return v;
        }
        // Otherwise s2 = a2 t2 with t2 != 0; commutation forces the first
        // K-coordinate of g1 to vanish, and g2 is the time-t2 flow of
        // a2 x dx + dy + c e^{a1 y} dx.
        const double c = g2.k.x * (a1 - a2) / (1.0 - std::exp((a2 - a1) * t2));
        v.outcome = HolonomyVerdict::Outcome::CommutingFields;
        v.field1 = scaled_x_dx_plus_dy(a1);
        v.field2 = scaled_x_dx_plus_dy(a2) + VectorFieldCF::h_dx(c, 0, a1);
        v.field1_text = v.field1.to_string();
        v.field2_text = v.field2.to_string();
        v.has_degeneracy_curve = true;
        v.degeneracy_curve = "(a1 - a2) x = c e^{a1 y} with a1 = " + fmt(a1) +
                             ", a2 = " + fmt(a2) + ", c = " + fmt(c);
        v.note = "generators realized by the flows of the two fields; they "
                 "become dependent exactly on the stated curve";
        return v;
    }

    // Double root: both H-parts have the singular form (a t, t).
    if (std::fabs(g1.h.y) < tol)
        std::swap(g1, g2);
    const double a = r.a, t1 = g1.h.y;
    // (1 - Psi_h1) q = (t1 q_v, 0): kill the first K-coordinate of g1.
    const Vec2 q{0.0, -g1.k.x / t1};
    g1 = conjugate_by_k(q, g1, r);
    g2 = conjugate_by_k(q, g2, r);
    const double c = g1.k.y / t1;
    // Both generators lie on the subgroup
    // (xi, zeta) -> ((a xi, xi), (zeta - c xi^2 / 2, c xi)), generated by the
    // flows of e^{a y} dx and a x dx + dy + c y e^{a y} dx.
    v.outcome = HolonomyVerdict::Outcome::CommutingFields;
    v.field1 = VectorFieldCF::h_dx(1.0, 0, a);
    v.field2 = scaled_x_dx_plus_dy(a) + VectorFieldCF::h_dx(c, 1, a);
    v.field1_text = v.field1.to_string();
    v.field2_text = v.field2.to_string();
    v.note = "generators realized by the flows of the two fields";
    return v;
}

} // namespace akl
