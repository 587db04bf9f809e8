// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "akl/connection.hpp"
#include "akl/errors.hpp"
#include "akl/rational_function.hpp"

using namespace akl;

namespace {

RationalFunction2 rf(const std::string& text) { return parse_rational_function(text); }

// Levi-Civita connection of (dx^2 + dy^2)/y^2, written out by hand.
Connection2D half_plane_connection() {
    Connection2D c = Connection2D::zero();
    c.B = rf("1/y");
    c.C = rf("-1/y");
    c.F = rf("-1/y");
    return c;
}

Connection2D random_connection(std::mt19937& rng) {
    std::uniform_int_distribution<int> coef(-5, 5);
    const auto r = [&] { return RationalFunction2::constant(Rational(coef(rng))); };
    return Connection2D{r(), r(), r(), r(), r(), r(), r(), r()};
}

} // namespace

TEST_CASE("christoffel symbols round trip and split the torsion") {
    Connection2D c = Connection2D::zero();
    c.C = rf("x");
    c.U = rf("3");
    c.V = rf("-2");
    c.E = rf("y^2");

    const Christoffel g = to_christoffel(c);
    CHECK(g.at(0, 0, 1) == rf("x + 3/2")); // C + U/2
    CHECK(g.at(0, 1, 0) == rf("x - 3/2")); // C - U/2
    CHECK(g.at(1, 0, 1) == rf("-1"));      // D + V/2
    CHECK(g.at(1, 1, 0) == rf("1"));       // D - V/2
    CHECK(g.at(0, 1, 1) == rf("y^2"));
    CHECK(from_christoffel(g) == c);

    const auto [t1, t2] = torsion(c);
    CHECK(t1 == c.U);
    CHECK(t2 == c.V);
    CHECK_FALSE(is_torsion_free(c));
    CHECK(is_torsion_free(half_plane_connection()));

    std::mt19937 rng(404);
    for (int i = 0; i < 10; ++i) {
        const Connection2D r = random_connection(rng);
        CHECK(from_christoffel(to_christoffel(r)) == r);
    }

    // christoffel_values flattens as (k, i, j) in row-major order.
    const auto vals = christoffel_values(c, {2.0, 1.0});
    CHECK(vals[1] == doctest::Approx(3.5));  // Gamma^1_{12} at x = 2
    CHECK(vals[2] == doctest::Approx(0.5));  // Gamma^1_{21}
    CHECK(vals[3] == doctest::Approx(1.0));  // Gamma^1_{22} = y^2
    CHECK(vals[5] == doctest::Approx(-1.0)); // Gamma^2_{12}
}

TEST_CASE("curvature of the half-plane connection") {
    const TensorReport rep = curvature(half_plane_connection());
    CHECK(rep.r_dx[0].is_zero());
    CHECK(rep.r_dx[1] == rf("1/y^2"));
    CHECK(rep.r_dy[0] == rf("-1/y^2"));
    CHECK(rep.r_dy[1].is_zero());
    CHECK_FALSE(rep.flat);
}

TEST_CASE("flat connections are recognized") {
    CHECK(is_flat(Connection2D::zero()));
    CHECK(is_torsion_free(Connection2D::zero()));

    // Constant A alone gives a flat chart (x'' = -A x'^2 is affine in
    // disguise; all other covariant derivatives vanish).
    Connection2D only_a = Connection2D::zero();
    only_a.A = rf("2");
    CHECK(is_flat(only_a));

    // C = 1, F = 0, E = x: R(dx,dy)dy = (beta + F C - C^2) dx = (1 - 1) dx = 0.
    Connection2D cancel = Connection2D::zero();
    cancel.C = rf("1");
    cancel.E = rf("x");
    CHECK(is_flat(cancel));
    cancel.E = rf("2*x"); // the component becomes 2 - 1 = 1
    CHECK_FALSE(is_flat(cancel));

    // The flat flag in the curvature report agrees with is_flat.
    std::mt19937 rng(811);
    for (int i = 0; i < 8; ++i) {
        const Connection2D r = random_connection(rng);
        const TensorReport rep = curvature(r);
        const bool zero = rep.r_dx[0].is_zero() && rep.r_dx[1].is_zero() &&
                          rep.r_dy[0].is_zero() && rep.r_dy[1].is_zero();
        CHECK(rep.flat == zero);
        CHECK(is_flat(r) == zero);
    }
}

TEST_CASE("geodesics against closed forms") {
    SUBCASE("x'' + x = 0 along straight y") {
        // nabla_dy dy = x dx gives x'' + x y'^2 = 0, y'' = 0.
        Connection2D c = Connection2D::zero();
        c.E = rf("x");
        const auto path = geodesic(c, {1.0, 0.0}, {0.0, 1.0}, 1.0, 400);
        REQUIRE(path.size() == 401);
        const GeodesicPoint end = path.back();
        CHECK(end.t == doctest::Approx(1.0));
        CHECK(end.x == doctest::Approx(std::cos(1.0)).epsilon(1e-9));
        CHECK(end.y == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(end.vx == doctest::Approx(-std::sin(1.0)).epsilon(1e-9));
        CHECK(end.vy == doctest::Approx(1.0).epsilon(1e-12));
    }

    SUBCASE("x'' = x'^2 / x has the exponential solution") {
        Connection2D c = Connection2D::zero();
        c.A = rf("-1/x");
        const auto path = geodesic(c, {1.0, 0.0}, {1.0, 0.0}, 1.0, 400);
        CHECK(path.back().x == doctest::Approx(std::exp(1.0)).epsilon(1e-9));
        CHECK(path.back().vx == doctest::Approx(std::exp(1.0)).epsilon(1e-9));
        CHECK(path.back().y == 0.0);
    }

    SUBCASE("fourth-order convergence") {
        Connection2D c = Connection2D::zero();
        c.E = rf("x");
        const auto coarse = geodesic(c, {1.0, 0.0}, {0.0, 1.0}, 1.0, 20);
        const auto fine = geodesic(c, {1.0, 0.0}, {0.0, 1.0}, 1.0, 40);
        const double e_coarse = std::fabs(coarse.back().x - std::cos(1.0));
        const double e_fine = std::fabs(fine.back().x - std::cos(1.0));
        CHECK(e_coarse / e_fine > 8.0); // ~16 for RK4
    }

    SUBCASE("torsion does not move geodesics") {
        std::mt19937 rng(27);
        Connection2D sym = random_connection(rng);
        sym.U = RationalFunction2();
        sym.V = RationalFunction2();
        Connection2D twisted = sym;
        twisted.U = rf("3");
        twisted.V = rf("x - y");
        const auto p1 = geodesic(sym, {0.1, 0.2}, {0.3, -0.4}, 0.5, 50);
        const auto p2 = geodesic(twisted, {0.1, 0.2}, {0.3, -0.4}, 0.5, 50);
        REQUIRE(p1.size() == p2.size());
        for (size_t i = 0; i < p1.size(); ++i) {
            CHECK(p1[i].x == p2[i].x);
            CHECK(p1[i].y == p2[i].y);
            CHECK(p1[i].vx == p2[i].vx);
            CHECK(p1[i].vy == p2[i].vy);
        }
    }

    SUBCASE("errors") {
        Connection2D c = Connection2D::zero();
        c.A = rf("1/(x - 1/2)");
        CHECK_THROWS_AS(geodesic(c, {0.5, 0.0}, {1.0, 0.0}, 1.0, 10), PoleError);
        CHECK_THROWS_AS(geodesic(c, {0.0, 0.0}, {1.0, 0.0}, 1.0, 0), DomainError);
    }
}

TEST_CASE("pullback residual detects isometries") {
    // nabla_dy dy = x dx is preserved by x-scalings and y-translations.
    Connection2D c = Connection2D::zero();
    c.E = rf("x");

    const std::vector<Vec2> samples = {{1.0, 0.0}, {0.5, 0.3}, {-0.7, 1.1}, {2.0, -0.4}};

    const NumericMap identity{
        "identity", [](Vec2 p) { return p; }, [](Vec2) { return Mat2::identity(); }};
    CHECK(pullback_residual(c, identity, samples) < 1e-12);

    const NumericMap scale_x{"scale-x", [](Vec2 p) { return Vec2{2.0 * p.x, p.y}; },
                             [](Vec2) {
                                 Mat2 j = Mat2::identity();
                                 j.m[0][0] = 2.0;
                                 return j;
                             }};
    CHECK(pullback_residual(c, scale_x, samples) < 1e-10);

    const NumericMap shift_y{"shift-y", [](Vec2 p) { return Vec2{p.x, p.y + 0.8}; },
                             [](Vec2) { return Mat2::identity(); }};
    CHECK(pullback_residual(c, shift_y, samples) < 1e-10);

    // Scaling y instead rescales the nabla_dy dy coefficient by 4.
    const NumericMap scale_y{"scale-y", [](Vec2 p) { return Vec2{p.x, 2.0 * p.y}; },
                             [](Vec2) {
                                 Mat2 j = Mat2::identity();
                                 j.m[1][1] = 2.0;
                                 return j;
                             }};
    CHECK(pullback_residual(c, scale_y, samples) > 0.1);

    SUBCASE("half plane under the hyperbolic dilation") {
        const Connection2D h = half_plane_connection();
        const std::vector<Vec2> upper = {{0.0, 1.0}, {0.5, 2.0}, {-1.0, 0.5}};
        const NumericMap dilate{"dilate", [](Vec2 p) { return Vec2{3.0 * p.x, 3.0 * p.y}; },
                                [](Vec2) { return Mat2::identity().scaled(3.0); }};
        CHECK(pullback_residual(h, dilate, upper) < 1e-9);

        // A plain Euclidean rotation is not a hyperbolic isometry.
        const double th = 0.4;
        const NumericMap rotate{
            "rotate",
            [th](Vec2 p) {
                return Vec2{std::cos(th) * p.x - std::sin(th) * p.y,
                            std::sin(th) * p.x + std::cos(th) * p.y};
            },
            [th](Vec2) {
                Mat2 j;
                j.m[0][0] = std::cos(th);
                j.m[0][1] = -std::sin(th);
                j.m[1][0] = std::sin(th);
                j.m[1][1] = std::cos(th);
                return j;
            }};
        CHECK(pullback_residual(h, rotate, upper) > 0.05);
    }
}
