// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "akl/errors.hpp"
#include "akl/killing.hpp"
#include "akl/rational_function.hpp"

using namespace akl;

namespace {

RationalFunction2 rf(const std::string& text) { return parse_rational_function(text); }

// Levi-Civita connection of (dx^2 + dy^2)/y^2.
Connection2D half_plane_connection() {
    Connection2D c = Connection2D::zero();
    c.B = rf("1/y");
    c.C = rf("-1/y");
    c.F = rf("-1/y");
    return c;
}

// Levi-Civita connection of 4 (dx^2 + dy^2)/(1 + x^2 + y^2)^2, the round
// sphere in the stereographic chart.
Connection2D round_sphere_connection() {
    const std::string r2 = "(1 + x^2 + y^2)";
    Connection2D c;
    c.A = rf("-2*x/" + r2);
    c.B = rf("2*y/" + r2);
    c.C = rf("-2*y/" + r2);
    c.D = rf("-2*x/" + r2);
    c.E = rf("2*x/" + r2);
    c.F = rf("-2*y/" + r2);
    c.U = RationalFunction2();
    c.V = RationalFunction2();
    return c;
}

// nabla_dy dy = x dx; its symmetries are x dx, dy, cos(y) dx, sin(y) dx.
Connection2D oscillator_connection() {
    Connection2D c = Connection2D::zero();
    c.E = rf("x");
    return c;
}

bool all_zero(const std::array<RationalFunction2, 8>& res) {
    for (const auto& r : res)
        if (!r.is_zero()) return false;
    return true;
}

} // namespace

TEST_CASE("assembled system degenerates correctly for the flat chart") {
    const KillingSystem sys = assemble(Connection2D::zero());
    for (const auto& row : sys.second_order)
        for (const auto& entry : row) CHECK(entry.is_zero());
    for (const auto& row : sys.constraints)
        for (const auto& entry : row) CHECK(entry.is_zero());
}

TEST_CASE("symbolic residuals vanish exactly on known symmetries") {
    SUBCASE("half plane") {
        const KillingSystem sys = assemble(half_plane_connection());
        CHECK(all_zero(sys.residuals(rf("1"), rf("0"))));          // dx
        CHECK(all_zero(sys.residuals(rf("x"), rf("y"))));          // x dx + y dy
        CHECK(all_zero(sys.residuals(rf("x^2 - y^2"), rf("2*x*y"))));
        CHECK_FALSE(all_zero(sys.residuals(rf("y"), rf("0"))));    // y dx is not
        CHECK_FALSE(all_zero(sys.residuals(rf("0"), rf("1"))));    // dy is not
    }

    SUBCASE("round sphere") {
        const KillingSystem sys = assemble(round_sphere_connection());
        CHECK(all_zero(sys.residuals(rf("-y"), rf("x"))));
        CHECK(all_zero(sys.residuals(rf("(1 + x^2 - y^2)/2"), rf("x*y"))));
        CHECK(all_zero(sys.residuals(rf("x*y"), rf("(1 + y^2 - x^2)/2"))));
        CHECK_FALSE(all_zero(sys.residuals(rf("1"), rf("0"))));
    }

    SUBCASE("oscillator") {
        const KillingSystem sys = assemble(oscillator_connection());
        CHECK(all_zero(sys.residuals(rf("x"), rf("0"))));
        CHECK(all_zero(sys.residuals(rf("0"), rf("1"))));
        CHECK_FALSE(all_zero(sys.residuals(rf("y"), rf("0"))));
        CHECK_FALSE(all_zero(sys.residuals(rf("1"), rf("0"))));
    }

    SUBCASE("torsion rows appear for twisted connections") {
        Connection2D twisted = oscillator_connection();
        twisted.U = rf("2");
        const KillingSystem sys = assemble(twisted);
        bool some_constraint = false;
        for (const auto& row : sys.constraints)
            for (const auto& entry : row)
                if (!entry.is_zero()) some_constraint = true;
        CHECK(some_constraint);
    }
}

TEST_CASE("jet solver on the flat chart") {
    const Solution sol = solve(Connection2D::zero(), {Rational(0), Rational(0)});
    CHECK(sol.dim() == 6);
    CHECK(sol.stabilized);
    const AlgebraReport rep =
        classify_connection(Connection2D::zero(), {Rational(0), Rational(0)});
    CHECK(rep.label == AlgebraLabel{CaseKind::FlatTorsionFree, 6});
    CHECK(rep.homogeneous_at_point);
    CHECK(rep.flat);
    CHECK(rep.torsion_free);
}

TEST_CASE("jet solver on the oscillator connection") {
    const Connection2D c = oscillator_connection();
    const BasePoint origin{Rational(0), Rational(0)};
    const Solution sol = solve(c, origin);
    REQUIRE(sol.dim() == 4);
    CHECK(sol.stabilized);

    // 1-jets of x dx, dy, cos(y) dx, sin(y) dx at the origin, ordered
    // (a, b, a_x, a_y, b_x, b_y).
    const KillingJet jet_xdx{0, 0, 1, 0, 0, 0};
    const KillingJet jet_dy{0, 1, 0, 0, 0, 0};
    const KillingJet jet_cos{1, 0, 0, 0, 0, 0};
    const KillingJet jet_sin{0, 0, 0, 1, 0, 0};
    CHECK(sol.contains(jet_xdx));
    CHECK(sol.contains(jet_dy));
    CHECK(sol.contains(jet_cos));
    CHECK(sol.contains(jet_sin));
    CHECK_FALSE(sol.contains(KillingJet{0, 0, 0, 0, 1, 0})); // would be y dy-ish

    SUBCASE("second derivatives recovered from the jet") {
        const KillingSystem sys = assemble(c);
        const auto rows = sys.jet_derivative_rows(origin);
        // Rows are ordered (a_xx, b_xx, a_xy, b_xy, a_yy, b_yy); for
        // cos(y) dx the only nonzero second derivative at 0 is a_yy = -1.
        const auto dot = [&](int r, const KillingJet& j) {
            Rational s(0);
            for (int k = 0; k < 6; ++k) s += rows[static_cast<size_t>(r)][static_cast<size_t>(k)] * j[static_cast<size_t>(k)];
            return s;
        };
        for (int r = 0; r < 6; ++r) {
            CHECK(dot(r, jet_cos) == (r == 4 ? Rational(-1) : Rational(0)));
            CHECK(dot(r, jet_sin) == Rational(0)); // a_yy of sin(y) is -sin(0) = 0
            CHECK(dot(r, jet_xdx) == Rational(0));
        }
    }

    SUBCASE("brackets at the origin") {
        // [dy, cos(y) dx] = -sin(y) dx, whose origin jet is (0,0,0,-1,0,0).
        const KillingJet b1 = bracket(jet_dy, jet_cos, c, origin);
        CHECK(b1 == KillingJet{0, 0, 0, -1, 0, 0});
        // [x dx, cos(y) dx] = -cos(y) dx.
        const KillingJet b2 = bracket(jet_xdx, jet_cos, c, origin);
        CHECK(b2 == KillingJet{-1, 0, 0, 0, 0, 0});
        // [x dx, dy] = 0.
        const KillingJet b3 = bracket(jet_xdx, jet_dy, c, origin);
        CHECK(b3 == KillingJet{0, 0, 0, 0, 0, 0});
    }

    SUBCASE("classification") {
        const AlgebraReport rep = classify_connection(c, origin);
        CHECK(rep.label == AlgebraLabel{CaseKind::Dim4Case, 4});
        CHECK(rep.homogeneous_at_point);
        CHECK_FALSE(rep.flat);
        CHECK(rep.torsion_free);
    }

    SUBCASE("the base point does not change the answer") {
        const AlgebraReport rep = classify_connection(c, {Rational(5), Rational(-2)});
        CHECK(rep.label == AlgebraLabel{CaseKind::Dim4Case, 4});
    }
}

TEST_CASE("metric connections land in the semisimple cases") {
    SUBCASE("half plane gives sl2") {
        const BasePoint p{Rational(0), Rational(1)};
        const Solution sol = solve(half_plane_connection(), p);
        REQUIRE(sol.dim() == 3);
        CHECK(sol.contains(KillingJet{1, 0, 0, 0, 0, 0}));        // dx
        CHECK(sol.contains(KillingJet{0, 1, 1, 0, 0, 1}));        // x dx + y dy
        CHECK(sol.contains(KillingJet{-1, 0, 0, -2, 2, 0}));      // (x^2-y^2) dx + 2xy dy
        const AlgebraReport rep = classify_connection(half_plane_connection(), p);
        CHECK(rep.label == AlgebraLabel{CaseKind::SL2, 3});
        CHECK(rep.homogeneous_at_point);
    }

    SUBCASE("round sphere gives so3") {
        const BasePoint p{Rational(0), Rational(0)};
        const Connection2D c = round_sphere_connection();
        const Solution sol = solve(c, p);
        REQUIRE(sol.dim() == 3);
        CHECK(sol.contains(KillingJet{0, 0, 0, -1, 1, 0}));
        CHECK(sol.contains(KillingJet{Rational(1, 2), 0, 0, 0, 0, 0}));
        CHECK(sol.contains(KillingJet{0, Rational(1, 2), 0, 0, 0, 0}));
        const AlgebraReport rep = classify_connection(c, p);
        CHECK(rep.label == AlgebraLabel{CaseKind::SO3, 3});
        CHECK(rep.homogeneous_at_point);
    }
}

TEST_CASE("low-symmetry connections") {
    SUBCASE("generic constant coefficients keep only the translations") {
        Connection2D c;
        c.A = rf("1");
        c.B = rf("1");
        c.C = rf("2");
        c.D = rf("0");
        c.E = rf("1");
        c.F = rf("3");
        c.U = rf("1");
        c.V = rf("0");
        const AlgebraReport rep = classify_connection(c, {Rational(0), Rational(0)});
        CHECK(rep.label == AlgebraLabel{CaseKind::Abelian2, 2});
        CHECK(rep.homogeneous_at_point);
    }

    SUBCASE("coefficients proportional to 1/x keep scaling and y-shift") {
        Connection2D c = Connection2D::zero();
        c.A = rf("1/x");
        c.B = rf("2/x");
        c.D = rf("-1/x");
        c.E = rf("3/x");
        c.F = rf("1/x");
        const AlgebraReport at10 = classify_connection(c, {Rational(1), Rational(0)});
        CHECK(at10.label == AlgebraLabel{CaseKind::Affine2, 2});
        CHECK(at10.homogeneous_at_point);
        // Same local model at another point of the same orbit.
        const AlgebraReport at23 = classify_connection(c, {Rational(2), Rational(3)});
        CHECK(at23.label == AlgebraLabel{CaseKind::Affine2, 2});
    }

    SUBCASE("x-dependent coefficients keep only the y-shift") {
        Connection2D c = Connection2D::zero();
        c.A = rf("x");
        c.B = rf("1");
        c.C = rf("x^2");
        c.E = rf("2");
        c.F = rf("x");
        const AlgebraReport rep = classify_connection(c, {Rational(1), Rational(0)});
        CHECK(rep.label == AlgebraLabel{CaseKind::LowRank, 1});
        CHECK_FALSE(rep.homogeneous_at_point);
    }

    SUBCASE("fully generic coefficients have no symmetries") {
        Connection2D c = Connection2D::zero();
        c.A = rf("x + y^2");
        c.B = rf("x*y");
        c.C = rf("y");
        c.D = rf("x^2");
        c.E = rf("1 + x");
        c.F = rf("y - 3");
        const AlgebraReport rep = classify_connection(c, {Rational(1), Rational(1)});
        CHECK(rep.label == AlgebraLabel{CaseKind::LowRank, 0});
        CHECK_FALSE(rep.homogeneous_at_point);
    }
}

TEST_CASE("constant-coefficient rotational certificate") {
    const auto m = case6_matrix();
    REQUIRE(m.size() == 8);
    for (const auto& row : m) REQUIRE(row.size() == 8);

    const PolyS det = verify_case6();
    CHECK(det == det_polys(m));
    CHECK(det.degree() == 8);

    // (s^2 + 9)(s^2 + 1)^3, expanded.
    const PolyS s = PolyS::variable();
    const PolyS s2 = s * s;
    const PolyS expected = (s2 + PolyS(Rational(9))) * (s2 + PolyS(Rational(1))) *
                           (s2 + PolyS(Rational(1))) * (s2 + PolyS(Rational(1)));
    CHECK(det == expected);

    CHECK(det.eval(Rational(1)) == Rational(80));
    CHECK(matrix_rank(case6_matrix_at(Rational(1)), 8) == 8);
}
