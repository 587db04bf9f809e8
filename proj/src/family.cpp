// SPDX-License-Identifier: Apache-2.0
#include "akl/family.hpp"

#include <cmath>
#include <sstream>

#include "akl/errors.hpp"

namespace akl {

Rational curvature_bracket(const FamilyParams& p) {
    const Rational gu = p.gamma + p.upsilon;
    return p.beta + gu * (gu - p.alpha);
}

bool is_admissible(const FamilyParams& p) {
    return !(p.upsilon == 0 && curvature_bracket(p) == 0);
}

Connection2D make_connection(const FamilyParams& p) {
    Connection2D c = Connection2D::zero();
    c.C = RationalFunction2::constant(p.gamma);
    c.F = RationalFunction2::constant(2 * p.gamma - p.alpha);
    c.E = RationalFunction2(Poly2::x().scaled(p.beta) + Poly2::constant(p.delta));
    c.U = RationalFunction2::constant(2 * p.upsilon);
    return c;
}

std::string Normalization::q_string() const {
    std::ostringstream os;
    os << "q(y) = " << rational_to_string(q0);
    if (q1 != 0)
        os << " + (" << rational_to_string(q1) << ")*y";
    if (q2 != 0)
        os << " + (" << rational_to_string(q2) << ")*y^2";
    return os.str();
}

Normalization normalize_delta(const FamilyParams& p) {
    Normalization n;
    n.params = p;
    n.params.delta = 0;
    if (p.beta != 0) {
        n.q0 = -p.delta / p.beta;
    } else if (p.alpha != 0) {
        n.q1 = -p.delta / p.alpha;
    } else {
        n.q2 = -p.delta / 2;
    }
    return n;
}

FamilyParams rescale(const FamilyParams& p, const Rational& mu) {
    if (mu == 0)
        throw DomainError("rescale: mu must be nonzero");
    FamilyParams out;
    out.alpha = mu * p.alpha;
    out.beta = mu * mu * p.beta;
    out.gamma = mu * p.gamma;
    out.upsilon = mu * p.upsilon;
    out.delta = mu * mu * p.delta;
    return out;
}

Regime regime_of(const FamilyParams& p) {
    Regime r;
    r.discriminant = p.alpha * p.alpha - 4 * p.beta;
    const double alpha_d = to_double(p.alpha);
    const double disc_d = to_double(r.discriminant);
    Rational root;
    if (r.discriminant > 0) {
        r.kind = RegimeKind::RealDistinct;
        const double sq = std::sqrt(disc_d);
        r.a1 = (-alpha_d + sq) / 2.0;
        r.a2 = (-alpha_d - sq) / 2.0;
        if (rational_square_root(r.discriminant, &root)) {
            r.exact = true;
            r.a1_exact = (-p.alpha + root) / 2;
            r.a2_exact = (-p.alpha - root) / 2;
        }
    } else if (r.discriminant < 0) {
        r.kind = RegimeKind::ComplexPair;
        r.a = -alpha_d / 2.0;
        r.b = std::sqrt(-disc_d) / 2.0;
        if (rational_square_root(-r.discriminant, &root)) {
            r.exact = true;
            r.a_exact = -p.alpha / 2;
            r.b_exact = root / 2;
        }
    } else {
        r.kind = RegimeKind::RealDouble;
        r.a = -alpha_d / 2.0;
        r.exact = true;
        r.a_exact = -p.alpha / 2;
    }
    return r;
}

std::array<VectorFieldCF, 4> killing_basis(const FamilyParams& p, const Regime& r) {
    if (!is_admissible(p))
        throw DomainError("killing_basis: inadmissible parameters (flat member)");
    if (p.delta != 0)
        throw DomainError("killing_basis: eliminate delta first (normalize_delta)");
    std::array<VectorFieldCF, 4> basis;
    basis[0] = VectorFieldCF::x_dx();
    basis[1] = VectorFieldCF::dy();
    switch (r.kind) {
    case RegimeKind::RealDistinct:
        basis[2] = VectorFieldCF::h_dx(1.0, 0, r.a1);
        basis[3] = VectorFieldCF::h_dx(1.0, 0, r.a2);
        break;
    case RegimeKind::ComplexPair:
        basis[2] = VectorFieldCF::h_dx(1.0, 0, r.a, FieldTerm::Trig::Cos, r.b);
        basis[3] = VectorFieldCF::h_dx(1.0, 0, r.a, FieldTerm::Trig::Sin, r.b);
        break;
    case RegimeKind::RealDouble:
        basis[2] = VectorFieldCF::h_dx(1.0, 0, r.a);
        basis[3] = VectorFieldCF::h_dx(1.0, 1, r.a);
        break;
    }
    return basis;
}

std::vector<KillingJet> killing_basis_jets(const FamilyParams& p, const Regime& r,
                                           const Rational& x0) {
    if (!is_admissible(p))
        throw DomainError("killing_basis_jets: inadmissible parameters");
    if (!r.exact)
        throw DomainError("killing_basis_jets: regime roots are not rational");
    std::vector<KillingJet> jets;
    jets.push_back({x0, 0, 1, 0, 0, 0}); // x dx
    jets.push_back({0, 1, 0, 0, 0, 0});  // dy
    // The h(y) dx fields at y = 0: jet (h(0), 0, 0, h'(0), 0, 0).
    switch (r.kind) {
    case RegimeKind::RealDistinct:
        jets.push_back({1, 0, 0, r.a1_exact, 0, 0});
        jets.push_back({1, 0, 0, r.a2_exact, 0, 0});
        break;
    case RegimeKind::ComplexPair:
        jets.push_back({1, 0, 0, r.a_exact, 0, 0});
        jets.push_back({0, 0, 0, r.b_exact, 0, 0});
        break;
    case RegimeKind::RealDouble:
        jets.push_back({1, 0, 0, r.a_exact, 0, 0});
        jets.push_back({0, 0, 0, 1, 0, 0});
        break;
    }
    return jets;
}

// ---------------------------------------------------------------------------
// Group structure
// ---------------------------------------------------------------------------

namespace {

// Values of the solution basis (h1, h2) of h'' + alpha h' + beta h = 0 at y,
// together with the derivatives (for Jacobians of the K-action).
struct BasisEval {
    double h1, h2, dh1, dh2;
};

BasisEval basis_at(double y, const Regime& r) {
    BasisEval e{};
    switch (r.kind) {
    case RegimeKind::RealDistinct:
        e.h1 = std::exp(r.a1 * y);
        e.h2 = std::exp(r.a2 * y);
        e.dh1 = r.a1 * e.h1;
        e.dh2 = r.a2 * e.h2;
        break;
    case RegimeKind::ComplexPair: {
        const double g = std::exp(r.a * y);
        const double c = std::cos(r.b * y), s = std::sin(r.b * y);
        e.h1 = g * c;
        e.h2 = g * s;
        e.dh1 = g * (r.a * c - r.b * s);
        e.dh2 = g * (r.a * s + r.b * c);
        break;
    }
    case RegimeKind::RealDouble: {
        const double g = std::exp(r.a * y);
        e.h1 = g;
        e.h2 = y * g;
        e.dh1 = r.a * g;
        e.dh2 = g + r.a * y * g;
        break;
    }
    }
    return e;
}

} // namespace

Mat2 psi(Vec2 h, const Regime& r) {
    const double s = h.x, t = h.y;
    Mat2 m;
    switch (r.kind) {
    case RegimeKind::RealDistinct:
        m.m[0][0] = std::exp(s - r.a1 * t);
        m.m[1][1] = std::exp(s - r.a2 * t);
        break;
    case RegimeKind::ComplexPair: {
        const double g = std::exp(s - r.a * t);
        const double c = std::cos(r.b * t), sn = std::sin(r.b * t);
        m.m[0][0] = g * c;
        m.m[0][1] = -g * sn;
        m.m[1][0] = g * sn;
        m.m[1][1] = g * c;
        break;
    }
    case RegimeKind::RealDouble: {
        const double g = std::exp(s - r.a * t);
        m.m[0][0] = g;
        m.m[0][1] = -t * g;
        m.m[1][1] = g;
        break;
    }
    }
    return m;
}

GroupElement multiply(const GroupElement& g1, const GroupElement& g2, const Regime& r) {
    GroupElement out;
    out.h = g1.h + g2.h;
    out.k = psi(g1.h, r) * g2.k + g1.k;
    return out;
}

GroupElement inverse(const GroupElement& g, const Regime& r) {
    GroupElement out;
    out.h = {-g.h.x, -g.h.y};
    const Vec2 moved = psi(out.h, r) * g.k;
    out.k = {-moved.x, -moved.y};
    return out;
}

Vec2 act(const GroupElement& g, Vec2 pt, const Regime& r) {
    // First the H-part, then the K-part.
    const Vec2 q{pt.x * std::exp(g.h.x), pt.y + g.h.y};
    const BasisEval e = basis_at(q.y, r);
    return {q.x + g.k.x * e.h1 + g.k.y * e.h2, q.y};
}

NumericMap group_map(const GroupElement& g, const Regime& r) {
    NumericMap m;
    std::ostringstream os;
    os << "group element ((" << g.h.x << ", " << g.h.y << "), (" << g.k.x << ", "
       << g.k.y << "))";
    m.tag = os.str();
    m.forward = [g, r](Vec2 p) { return act(g, p, r); };
    m.jacobian = [g, r](Vec2 p) {
        Mat2 j;
        const double es = std::exp(g.h.x);
        const BasisEval e = basis_at(p.y + g.h.y, r);
        j.m[0][0] = es;
        j.m[0][1] = g.k.x * e.dh1 + g.k.y * e.dh2;
        j.m[1][0] = 0.0;
        j.m[1][1] = 1.0;
        return j;
    };
    return m;
}

bool commutes(const GroupElement& g1, const GroupElement& g2, const Regime& r,
              double tol) {
    const Mat2 one = Mat2::identity();
    const Vec2 lhs = (one - psi(g1.h, r)) * g2.k;
    const Vec2 rhs = (one - psi(g2.h, r)) * g1.k;
    return norm_inf(lhs - rhs) < tol;
}

GroupElement conjugate_by_k(Vec2 q, const GroupElement& g, const Regime& r) {
    GroupElement out;
    out.h = g.h;
    const Vec2 shift = (Mat2::identity() - psi(g.h, r)) * q;
    out.k = shift + g.k;
    return out;
}

SigmaReport sigma_test(const FamilyParams& p) {
    if (!is_admissible(p))
        throw DomainError("sigma_test: inadmissible parameters");
    const double alpha = to_double(p.alpha);
    NumericMap sigma;
    sigma.tag = "sigma(x, y) = (-e^{alpha y} x, -y)";
    sigma.forward = [alpha](Vec2 pt) {
        return Vec2{-std::exp(alpha * pt.y) * pt.x, -pt.y};
    };
    sigma.jacobian = [alpha](Vec2 pt) {
        Mat2 j;
        j.m[0][0] = -std::exp(alpha * pt.y);
        j.m[0][1] = -alpha * std::exp(alpha * pt.y) * pt.x;
        j.m[1][0] = 0.0;
        j.m[1][1] = -1.0;
        return j;
    };
    std::vector<Vec2> samples;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            samples.push_back({-1.0 + 0.5 * i, -1.0 + 0.5 * j});
    SigmaReport rep;
    rep.residual = pullback_residual(make_connection(p), sigma, samples);
    rep.is_isometry = rep.residual < 1e-4;
    return rep;
}

} // namespace akl
