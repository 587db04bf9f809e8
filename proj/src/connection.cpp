// SPDX-License-Identifier: Apache-2.0
#include "akl/connection.hpp"

#include <cmath>

#include "akl/errors.hpp"

namespace akl {

namespace {

const RationalFunction2 kHalf = RationalFunction2::constant(Rational(1, 2));
const RationalFunction2 kTwo = RationalFunction2::constant(Rational(2));

// Double-precision evaluator with precompiled coefficients, used by the
// numeric paths (geodesics, pullbacks) to avoid repeated bignum conversion.
struct CompiledPoly {
    struct Term {
        double c;
        int dx, dy;
    };
    std::vector<Term> terms;

    static CompiledPoly compile(const Poly2& p) {
        CompiledPoly out;
        for (const auto& [e, c] : p.terms()) out.terms.push_back({to_double(c), e.dx, e.dy});
        return out;
    }
    double eval(double x, double y) const {
        double acc = 0.0;
        for (const auto& t : terms) {
            double v = t.c;
            for (int i = 0; i < t.dx; ++i) v *= x;
            for (int i = 0; i < t.dy; ++i) v *= y;
            acc += v;
        }
        return acc;
    }
};

struct CompiledRF {
    CompiledPoly num, den;
    std::string den_name;

    static CompiledRF compile(const RationalFunction2& f) {
        return {CompiledPoly::compile(f.num()), CompiledPoly::compile(f.den()),
                f.den().to_string()};
    }
    double eval(double x, double y) const {
        const double d = den.eval(x, y);
        if (!(std::fabs(d) > 1e-14) || !std::isfinite(d))
            throw PoleError("pole: denominator " + den_name + " vanishes near sample");
        return num.eval(x, y) / d;
    }
};

} // namespace

Connection2D Connection2D::zero() { return Connection2D{}; }

Christoffel to_christoffel(const Connection2D& c) {
    Christoffel g;
    const RationalFunction2 hu = kHalf * c.U, hv = kHalf * c.V;
    g.at(0, 0, 0) = c.A;
    g.at(1, 0, 0) = c.B;
    g.at(0, 0, 1) = c.C + hu;
    g.at(1, 0, 1) = c.D + hv;
    g.at(0, 1, 0) = c.C - hu;
    g.at(1, 1, 0) = c.D - hv;
    g.at(0, 1, 1) = c.E;
    g.at(1, 1, 1) = c.F;
    return g;
}

Connection2D from_christoffel(const Christoffel& g) {
    Connection2D c;
    c.A = g.at(0, 0, 0);
    c.B = g.at(1, 0, 0);
    c.C = kHalf * (g.at(0, 0, 1) + g.at(0, 1, 0));
    c.U = g.at(0, 0, 1) - g.at(0, 1, 0);
    c.D = kHalf * (g.at(1, 0, 1) + g.at(1, 1, 0));
    c.V = g.at(1, 0, 1) - g.at(1, 1, 0);
    c.E = g.at(0, 1, 1);
    c.F = g.at(1, 1, 1);
    return c;
}

std::pair<RationalFunction2, RationalFunction2> torsion(const Connection2D& c) {
    return {c.U, c.V};
}

TensorReport curvature(const Connection2D& c) {
    const Christoffel g = to_christoffel(c);
    TensorReport rep;
    // R^l(∂x,∂y)∂j = ∂x Γ^l_{2j} - ∂y Γ^l_{1j}
    //               + Σ_k (Γ^k_{2j} Γ^l_{1k} - Γ^k_{1j} Γ^l_{2k})
    for (int j = 0; j < 2; ++j) {
        for (int l = 0; l < 2; ++l) {
            RationalFunction2 r = g.at(l, 1, j).dx() - g.at(l, 0, j).dy();
            for (int k = 0; k < 2; ++k)
                r += g.at(k, 1, j) * g.at(l, 0, k) - g.at(k, 0, j) * g.at(l, 1, k);
            (j == 0 ? rep.r_dx : rep.r_dy)[static_cast<size_t>(l)] = r;
        }
    }
    rep.flat = rep.r_dx[0].is_zero() && rep.r_dx[1].is_zero() &&
               rep.r_dy[0].is_zero() && rep.r_dy[1].is_zero();
    return rep;
}

bool is_flat(const Connection2D& c) { return curvature(c).flat; }

bool is_torsion_free(const Connection2D& c) { return c.U.is_zero() && c.V.is_zero(); }

std::vector<GeodesicPoint> geodesic(const Connection2D& c, Vec2 p0, Vec2 v0,
                                    double total_time, int steps) {
    if (steps <= 0) throw DomainError("geodesic requires a positive step count");
    // Only the symmetric part enters the geodesic equation.
    const CompiledRF A = CompiledRF::compile(c.A), B = CompiledRF::compile(c.B),
                     C = CompiledRF::compile(c.C), D = CompiledRF::compile(c.D),
                     E = CompiledRF::compile(c.E), F = CompiledRF::compile(c.F);

    struct State {
        double x, y, vx, vy;
    };
    auto rhs = [&](const State& s) -> State {
        const double ax = -(A.eval(s.x, s.y) * s.vx * s.vx +
                            2.0 * C.eval(s.x, s.y) * s.vx * s.vy +
                            E.eval(s.x, s.y) * s.vy * s.vy);
        const double ay = -(B.eval(s.x, s.y) * s.vx * s.vx +
                            2.0 * D.eval(s.x, s.y) * s.vx * s.vy +
                            F.eval(s.x, s.y) * s.vy * s.vy);
        return {s.vx, s.vy, ax, ay};
    };

    const double h = total_time / steps;
    std::vector<GeodesicPoint> out;
    out.reserve(static_cast<size_t>(steps) + 1);
    State s{p0.x, p0.y, v0.x, v0.y};
    out.push_back({0.0, s.x, s.y, s.vx, s.vy});
    for (int n = 0; n < steps; ++n) {
        try {
            const State k1 = rhs(s);
            const State s2{s.x + 0.5 * h * k1.x, s.y + 0.5 * h * k1.y,
                           s.vx + 0.5 * h * k1.vx, s.vy + 0.5 * h * k1.vy};
            const State k2 = rhs(s2);
            const State s3{s.x + 0.5 * h * k2.x, s.y + 0.5 * h * k2.y,
                           s.vx + 0.5 * h * k2.vx, s.vy + 0.5 * h * k2.vy};
            const State k3 = rhs(s3);
            const State s4{s.x + h * k3.x, s.y + h * k3.y, s.vx + h * k3.vx,
                           s.vy + h * k3.vy};
            const State k4 = rhs(s4);
            s.x += h / 6.0 * (k1.x + 2 * k2.x + 2 * k3.x + k4.x);
            s.y += h / 6.0 * (k1.y + 2 * k2.y + 2 * k3.y + k4.y);
            s.vx += h / 6.0 * (k1.vx + 2 * k2.vx + 2 * k3.vx + k4.vx);
            s.vy += h / 6.0 * (k1.vy + 2 * k2.vy + 2 * k3.vy + k4.vy);
        } catch (const PoleError& e) {
            throw PoleError("geodesic step " + std::to_string(n + 1) + ": " + e.what());
        }
        if (!std::isfinite(s.x) || !std::isfinite(s.y) || !std::isfinite(s.vx) ||
            !std::isfinite(s.vy))
            throw DomainError("geodesic diverged at step " + std::to_string(n + 1));
        out.push_back({h * (n + 1), s.x, s.y, s.vx, s.vy});
    }
    return out;
}

std::array<double, 8> christoffel_values(const Connection2D& c, Vec2 p) {
    const Christoffel g = to_christoffel(c);
    std::array<double, 8> v{};
    int idx = 0;
    for (int k = 0; k < 2; ++k)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) v[static_cast<size_t>(idx++)] = g.at(k, i, j).eval_double(p.x, p.y);
    return v;
}

double pullback_residual(const Connection2D& c, const NumericMap& map,
                         const std::vector<Vec2>& samples) {
    const Christoffel g = to_christoffel(c);
    CompiledRF gamma[2][2][2];
    for (int k = 0; k < 2; ++k)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) gamma[k][i][j] = CompiledRF::compile(g.at(k, i, j));

    const double fd = 1e-6;
    double worst = 0.0;
    for (const Vec2 p : samples) {
        const Vec2 q = map.forward(p);
        const Mat2 J = map.jacobian(p);
        if (std::fabs(J.det()) < 1e-12)
            throw DomainError("pullback_residual: singular Jacobian at sample (" +
                              std::to_string(p.x) + ", " + std::to_string(p.y) + ")");
        const Mat2 Jinv = J.inverse();
        // Second derivatives H[a][i][j] = ∂_i ∂_j map^a by central differences
        // of the Jacobian columns.
        const Mat2 Jxp = map.jacobian({p.x + fd, p.y});
        const Mat2 Jxm = map.jacobian({p.x - fd, p.y});
        const Mat2 Jyp = map.jacobian({p.x, p.y + fd});
        const Mat2 Jym = map.jacobian({p.x, p.y - fd});
        double H[2][2][2];
        for (int a = 0; a < 2; ++a)
            for (int j = 0; j < 2; ++j) {
                H[a][0][j] = (Jxp.m[a][j] - Jxm.m[a][j]) / (2 * fd);
                H[a][1][j] = (Jyp.m[a][j] - Jym.m[a][j]) / (2 * fd);
            }

        double gq[2][2][2], gp[2][2][2];
        for (int k = 0; k < 2; ++k)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    gq[k][i][j] = gamma[k][i][j].eval(q.x, q.y);
                    gp[k][i][j] = gamma[k][i][j].eval(p.x, p.y);
                }

        // (map*Γ)^k_{ij} = (J^{-1})^k_a [ Γ^a_{bc}(q) J^b_i J^c_j + H^a_{ij} ]
        for (int k = 0; k < 2; ++k)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    double val = 0.0;
                    for (int a = 0; a < 2; ++a) {
                        double inner = H[a][i][j];
                        for (int b = 0; b < 2; ++b)
                            for (int cc = 0; cc < 2; ++cc)
                                inner += gq[a][b][cc] * J.m[b][i] * J.m[cc][j];
                        val += Jinv.m[k][a] * inner;
                    }
                    worst = std::max(worst, std::fabs(val - gp[k][i][j]));
                }
    }
    return worst;
}

} // namespace akl
