// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "akl/numeric.hpp"
#include "akl/rational_function.hpp"

namespace akl {

// An affine connection on a coordinate chart, described by eight coefficient
// functions. The two covariant derivatives of the frame fields are
//   ∇_∂x ∂x = A ∂x + B ∂y            ∇_∂x ∂y = (C + U/2) ∂x + (D + V/2) ∂y
//   ∇_∂y ∂x = (C - U/2) ∂x + (D - V/2) ∂y    ∇_∂y ∂y = E ∂x + F ∂y
// so (U, V) is the torsion vector T(∂x, ∂y) and A..F carry the symmetric part.
struct Connection2D {
    RationalFunction2 A, B, C, D, E, F, U, V;

    static Connection2D zero();
    bool operator==(const Connection2D& o) const = default;
};

// Christoffel symbols G[k][i][j] = Γ^k_{ij} with the first lower index i the
// differentiation direction: ∇_{∂_i} ∂_j = Γ^k_{ij} ∂_k.
struct Christoffel {
    std::array<std::array<std::array<RationalFunction2, 2>, 2>, 2> G;

    const RationalFunction2& at(int k, int i, int j) const {
        return G[static_cast<size_t>(k)][static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    RationalFunction2& at(int k, int i, int j) {
        return G[static_cast<size_t>(k)][static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
};

Christoffel to_christoffel(const Connection2D& c);
Connection2D from_christoffel(const Christoffel& g);

// Torsion vector (T^1, T^2) of T(∂x, ∂y) = ∇_∂x ∂y - ∇_∂y ∂x - [∂x, ∂y].
std::pair<RationalFunction2, RationalFunction2> torsion(const Connection2D& c);

// Curvature R(X,Y) = ∇_X ∇_Y - ∇_Y ∇_X - ∇_[X,Y] evaluated on the frame:
// R(∂x,∂y)∂x = r_dx[0] ∂x + r_dx[1] ∂y and likewise r_dy for R(∂x,∂y)∂y.
struct TensorReport {
    std::array<RationalFunction2, 2> r_dx;
    std::array<RationalFunction2, 2> r_dy;
    bool flat = false;
};

TensorReport curvature(const Connection2D& c);
bool is_flat(const Connection2D& c);
bool is_torsion_free(const Connection2D& c);

struct GeodesicPoint {
    double t, x, y, vx, vy;
};

// Classical fixed-step RK4 on the geodesic equation
//   d2x^k/dt2 + Γ^k_(ij) dx^i/dt dx^j/dt = 0
// using only the symmetric part of the connection (A..F); torsion does not
// enter. Throws PoleError when a coefficient pole is crossed, naming the
// first offending step.
std::vector<GeodesicPoint> geodesic(const Connection2D& c, Vec2 p0, Vec2 v0,
                                    double total_time, int steps);

// A numeric self-map of the chart together with its Jacobian.
struct NumericMap {
    std::string tag;
    std::function<Vec2(Vec2)> forward;
    std::function<Mat2(Vec2)> jacobian;
};

// Max-norm deviation between the connection and its pullback under the map,
// over the sample points: zero (up to numerics) iff the map is an isometry
// on the sampled region. Second derivatives of the map are obtained by
// central finite differences of the Jacobian with step 1e-6.
double pullback_residual(const Connection2D& c, const NumericMap& map,
                         const std::vector<Vec2>& samples);

// Evaluates all eight Christoffel entries at a point (doubles).
std::array<double, 8> christoffel_values(const Connection2D& c, Vec2 p);

} // namespace akl
