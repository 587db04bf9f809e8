// SPDX-License-Identifier: Apache-2.0
#include "akl/models.hpp"

#include <cmath>

#include "akl/errors.hpp"

namespace akl {

Mat2 sl2_flow(Sl2Kind kind, double t) {
    Mat2 m;
    switch (kind) {
    case Sl2Kind::Semisimple:
        m.m[0][0] = std::exp(t);
        m.m[1][1] = std::exp(-t);
        break;
    case Sl2Kind::Orthogonal:
        m.m[0][0] = std::cos(t);
        m.m[0][1] = std::sin(t);
        m.m[1][0] = -std::sin(t);
        m.m[1][1] = std::cos(t);
        break;
    case Sl2Kind::Unipotent:
        m.m[0][0] = 1.0;
        m.m[0][1] = t;
        m.m[1][1] = 1.0;
        break;
    }
    return m;
}

namespace {

double moebius(const Mat2& m, double z) {
    const double den = m.m[1][0] * z + m.m[1][1];
    if (std::fabs(den) < 1e-12)
        throw DomainError("fractional linear image leaves the affine chart");
    return (m.m[0][0] * z + m.m[0][1]) / den;
}

} // namespace

Vec2 model_act(ModelSpace space, const Mat2& m, Vec2 p) {
    switch (space) {
    case ModelSpace::PuncturedPlane: {
        if (p.x == 0.0 && p.y == 0.0)
            throw DomainError("the punctured plane excludes the origin");
        // Row vector times matrix.
        return {p.x * m.m[0][0] + p.y * m.m[1][0], p.x * m.m[0][1] + p.y * m.m[1][1]};
    }
    case ModelSpace::DiagonalComplement: {
        if (p.x == p.y)
            throw DomainError("point lies on the excluded diagonal");
        return {moebius(m, p.x), moebius(m, p.y)};
    }
    case ModelSpace::HalfPlane: {
        if (!(p.y > 0.0))
            throw DomainError("point is not in the upper half plane");
        const double dr = m.m[1][0] * p.x + m.m[1][1];
        const double di = m.m[1][0] * p.y;
        const double den = dr * dr + di * di;
        if (den < 1e-30)
            throw DomainError("fractional linear image leaves the affine chart");
        const double nr = m.m[0][0] * p.x + m.m[0][1];
        const double ni = m.m[0][0] * p.y;
        return {(nr * dr + ni * di) / den, m.det() * p.y / den};
    }
    }
    throw DomainError("unknown model space");
}

Submersion invariant_submersion(SubmersionSpace space, Sl2Kind kind) {
    Submersion f;
    switch (space) {
    case SubmersionSpace::PuncturedPlane:
        switch (kind) {
        case Sl2Kind::Semisimple:
            f.formula = "x*y";
            f.value = [](Vec2 p) { return p.x * p.y; };
            f.gradient = [](Vec2 p) { return Vec2{p.y, p.x}; };
            return f;
        case Sl2Kind::Orthogonal:
            f.formula = "x^2+y^2";
            f.value = [](Vec2 p) { return p.x * p.x + p.y * p.y; };
            f.gradient = [](Vec2 p) { return Vec2{2.0 * p.x, 2.0 * p.y}; };
            return f;
        case Sl2Kind::Unipotent:
            f.formula = "x";
            f.value = [](Vec2 p) { return p.x; };
            f.gradient = [](Vec2) { return Vec2{1.0, 0.0}; };
            return f;
        }
        break;
    case SubmersionSpace::DiagonalComplement:
        switch (kind) {
        case Sl2Kind::Semisimple:
            f.formula = "x/y";
            f.value = [](Vec2 p) { return p.x / p.y; };
            f.gradient = [](Vec2 p) { return Vec2{1.0 / p.y, -p.x / (p.y * p.y)}; };
            return f;
        case Sl2Kind::Orthogonal:
            f.formula = "(1+x*y)/(x-y)";
            f.value = [](Vec2 p) { return (1.0 + p.x * p.y) / (p.x - p.y); };
            f.gradient = [](Vec2 p) {
                const double d = (p.x - p.y) * (p.x - p.y);
                return Vec2{-(1.0 + p.y * p.y) / d, (1.0 + p.x * p.x) / d};
            };
            return f;
        case Sl2Kind::Unipotent:
            f.formula = "1/(x-y)";
            f.value = [](Vec2 p) { return 1.0 / (p.x - p.y); };
            f.gradient = [](Vec2 p) {
                const double d = (p.x - p.y) * (p.x - p.y);
                return Vec2{-1.0 / d, 1.0 / d};
            };
            return f;
        }
        break;
    case SubmersionSpace::AffGroup:
        switch (kind) {
        case Sl2Kind::Semisimple:
            f.formula = "b/a";
            f.value = [](Vec2 p) { return p.y / p.x; };
            f.gradient = [](Vec2 p) { return Vec2{-p.y / (p.x * p.x), 1.0 / p.x}; };
            return f;
        case Sl2Kind::Unipotent:
            f.formula = "a";
            f.value = [](Vec2 p) { return p.x; };
            f.gradient = [](Vec2) { return Vec2{1.0, 0.0}; };
            return f;
        case Sl2Kind::Orthogonal:
            throw DomainError("the affine group has no orthogonal subgroup; "
                              "no invariant submersion is catalogued");
        }
        break;
    }
    throw DomainError("unsupported (space, kind) pair");
}

Connection2D levi_civita(const RationalFunction2& g11, const RationalFunction2& g12,
                         const RationalFunction2& g22) {
    const RationalFunction2 det = g11 * g22 - g12 * g12;
    if (det.is_zero())
        throw DomainError("levi_civita: degenerate metric");
    // Inverse metric.
    const RationalFunction2 iu11 = g22 / det;
    const RationalFunction2 iu12 = -(g12 / det);
    const RationalFunction2 iu22 = g11 / det;

    // g[i][j] and inv[i][j] as arrays for the index formula.
    const RationalFunction2 g[2][2] = {{g11, g12}, {g12, g22}};
    const RationalFunction2 inv[2][2] = {{iu11, iu12}, {iu12, iu22}};

    auto dg = [&](int i, int j, int var) {
        return var == 0 ? g[i][j].dx() : g[i][j].dy();
    };

    Christoffel ch;
    const Rational half(1, 2);
    for (int k = 0; k < 2; ++k)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                RationalFunction2 sum;
                for (int l = 0; l < 2; ++l)
                    sum += inv[k][l] * (dg(j, l, i) + dg(i, l, j) - dg(i, j, l));
                ch.at(k, i, j) = sum * RationalFunction2::constant(half);
            }
    return from_christoffel(ch);
}

Connection2D hyperbolic_connection() {
    const RationalFunction2 y2(Poly2::constant(Rational(1)), Poly2::y() * Poly2::y());
    return levi_civita(y2, RationalFunction2(), y2);
}

Connection2D sphere_connection() {
    const Poly2 r2 = Poly2::constant(Rational(1)) + Poly2::x() * Poly2::x() +
                     Poly2::y() * Poly2::y();
    const RationalFunction2 conf(Poly2::constant(Rational(4)), r2 * r2);
    return levi_civita(conf, RationalFunction2(), conf);
}

AffElement aff_multiply(const AffElement& e1, const AffElement& e2) {
    if (!(e1.a > 0.0) || !(e2.a > 0.0))
        throw DomainError("affine group elements require a > 0");
    return {e1.a * e2.a, e1.a * e2.b + e1.b};
}

AffElement aff_inverse(const AffElement& e) {
    if (!(e.a > 0.0))
        throw DomainError("affine group elements require a > 0");
    return {1.0 / e.a, -e.b / e.a};
}

bool aff_commutes(const AffElement& e1, const AffElement& e2, double tol) {
    return std::fabs(e2.b * (e1.a - 1.0) - e1.b * (e2.a - 1.0)) < tol;
}

} // namespace akl
