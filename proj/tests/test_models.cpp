// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "akl/errors.hpp"
#include "akl/killing.hpp"
#include "akl/models.hpp"
#include "akl/rational_function.hpp"

using namespace akl;

namespace {

RationalFunction2 rf(const std::string& text) { return parse_rational_function(text); }

bool approx_eq(Vec2 a, Vec2 b, double tol = 1e-10) { return norm_inf(a - b) < tol; }

} // namespace

TEST_CASE("one-parameter subgroups of sl2") {
    const double t = 0.6, s = -0.9;
    for (const Sl2Kind kind :
         {Sl2Kind::Semisimple, Sl2Kind::Orthogonal, Sl2Kind::Unipotent}) {
        const Mat2 sum = sl2_flow(kind, t + s);
        const Mat2 prod = sl2_flow(kind, t) * sl2_flow(kind, s);
        CHECK((sum - prod).norm_inf() < 1e-12);
        CHECK(sl2_flow(kind, t).det() == doctest::Approx(1.0));
        CHECK((sl2_flow(kind, 0.0) - Mat2::identity()).norm_inf() < 1e-15);
    }

    const Mat2 d = sl2_flow(Sl2Kind::Semisimple, t);
    CHECK(d.m[0][0] == doctest::Approx(std::exp(t)));
    CHECK(d.m[1][1] == doctest::Approx(std::exp(-t)));
    CHECK(d.m[0][1] == 0.0);

    // Counterclockwise for the row-vector action: (1, 0) R = (cos t, sin t).
    const Mat2 r = sl2_flow(Sl2Kind::Orthogonal, t);
    CHECK(r.m[0][0] == doctest::Approx(std::cos(t)));
    CHECK(r.m[0][1] == doctest::Approx(std::sin(t)));
    CHECK(r.m[1][0] == doctest::Approx(-std::sin(t)));

    const Mat2 u = sl2_flow(Sl2Kind::Unipotent, t);
    CHECK(u.m[0][0] == 1.0);
    CHECK(u.m[0][1] == doctest::Approx(t));
    CHECK(u.m[1][0] == 0.0);
    CHECK(u.m[1][1] == 1.0);
}

TEST_CASE("model space actions") {
    SUBCASE("punctured plane acts by row vectors on the right") {
        const Mat2 m = sl2_flow(Sl2Kind::Semisimple, 0.5);
        CHECK(approx_eq(model_act(ModelSpace::PuncturedPlane, m, {1.0, 1.0}),
                        {std::exp(0.5), std::exp(-0.5)}));
        const Mat2 n = sl2_flow(Sl2Kind::Unipotent, 2.0);
        // (x, y) [[1,2],[0,1]] = (x, 2x + y)
        CHECK(approx_eq(model_act(ModelSpace::PuncturedPlane, n, {3.0, 1.0}),
                        {3.0, 7.0}));
        // Right action: applying m then n composes as the product m n.
        const Vec2 p{0.7, -0.4};
        CHECK(approx_eq(model_act(ModelSpace::PuncturedPlane, m * n, p),
                        model_act(ModelSpace::PuncturedPlane, n,
                                  model_act(ModelSpace::PuncturedPlane, m, p))));
        CHECK_THROWS_AS(model_act(ModelSpace::PuncturedPlane, m, {0.0, 0.0}),
                        DomainError);
    }

    SUBCASE("diagonal complement acts coordinatewise by fractional linear maps") {
        const Mat2 m = sl2_flow(Sl2Kind::Unipotent, 1.5);
        CHECK(approx_eq(model_act(ModelSpace::DiagonalComplement, m, {2.0, -1.0}),
                        {3.5, 0.5}));
        const Mat2 d = sl2_flow(Sl2Kind::Semisimple, 0.3);
        CHECK(approx_eq(model_act(ModelSpace::DiagonalComplement, d, {2.0, -1.0}),
                        {2.0 * std::exp(0.6), -std::exp(0.6)}));
        CHECK_THROWS_AS(model_act(ModelSpace::DiagonalComplement, m, {1.0, 1.0}),
                        DomainError);
        // x -> (0*x + 1)/(-x + 0) sends x = 0 out of the chart ... but both
        // coordinates escaping simultaneously never happens; a single blow-up
        // already throws.
        Mat2 w;
        w.m[0][1] = 1.0;
        w.m[1][0] = -1.0;
        CHECK_THROWS_AS(model_act(ModelSpace::DiagonalComplement, w, {0.0, 2.0}),
                        DomainError);
    }

    SUBCASE("half plane is the usual Moebius action") {
        const Mat2 u = sl2_flow(Sl2Kind::Unipotent, 2.5);
        CHECK(approx_eq(model_act(ModelSpace::HalfPlane, u, {0.5, 1.0}), {3.0, 1.0}));
        const Mat2 d = sl2_flow(Sl2Kind::Semisimple, 0.4);
        CHECK(approx_eq(model_act(ModelSpace::HalfPlane, d, {0.5, 1.0}),
                        {0.5 * std::exp(0.8), std::exp(0.8)}));
        // Rotations fix i.
        const Mat2 r = sl2_flow(Sl2Kind::Orthogonal, 0.7);
        CHECK(approx_eq(model_act(ModelSpace::HalfPlane, r, {0.0, 1.0}), {0.0, 1.0}));
        CHECK_THROWS_AS(model_act(ModelSpace::HalfPlane, u, {0.0, -1.0}), DomainError);
    }
}

TEST_CASE("invariant submersions") {
    SUBCASE("catalogue formulas and sample values") {
        const Submersion s1 =
            invariant_submersion(SubmersionSpace::PuncturedPlane, Sl2Kind::Semisimple);
        CHECK(s1.formula == "x*y");
        CHECK(s1.value({2.0, 3.0}) == doctest::Approx(6.0));
        CHECK(approx_eq(s1.gradient({2.0, 3.0}), {3.0, 2.0}));

        const Submersion s2 =
            invariant_submersion(SubmersionSpace::PuncturedPlane, Sl2Kind::Orthogonal);
        CHECK(s2.formula == "x^2+y^2");
        CHECK(approx_eq(s2.gradient({2.0, 3.0}), {4.0, 6.0}));

        const Submersion s3 =
            invariant_submersion(SubmersionSpace::PuncturedPlane, Sl2Kind::Unipotent);
        CHECK(s3.formula == "x");

        CHECK(invariant_submersion(SubmersionSpace::DiagonalComplement,
                                   Sl2Kind::Semisimple)
                  .formula == "x/y");
        CHECK(invariant_submersion(SubmersionSpace::DiagonalComplement,
                                   Sl2Kind::Orthogonal)
                  .formula == "(1+x*y)/(x-y)");
        CHECK(invariant_submersion(SubmersionSpace::DiagonalComplement,
                                   Sl2Kind::Unipotent)
                  .formula == "1/(x-y)");
        CHECK(invariant_submersion(SubmersionSpace::AffGroup, Sl2Kind::Semisimple)
                  .formula == "b/a");
        CHECK(invariant_submersion(SubmersionSpace::AffGroup, Sl2Kind::Unipotent)
                  .formula == "a");
        CHECK_THROWS_AS(
            invariant_submersion(SubmersionSpace::AffGroup, Sl2Kind::Orthogonal),
            DomainError);
    }

    SUBCASE("levels are preserved along the matching flows") {
        for (const Sl2Kind kind :
             {Sl2Kind::Semisimple, Sl2Kind::Orthogonal, Sl2Kind::Unipotent}) {
            const Submersion f =
                invariant_submersion(SubmersionSpace::PuncturedPlane, kind);
            const Vec2 p{0.8, 0.6};
            for (const double t : {-0.5, 0.25, 1.0}) {
                const Vec2 moved =
                    model_act(ModelSpace::PuncturedPlane, sl2_flow(kind, t), p);
                CHECK(f.value(moved) == doctest::Approx(f.value(p)).epsilon(1e-12));
            }
            // Not preserved along a different subgroup.
            const Sl2Kind other =
                kind == Sl2Kind::Semisimple ? Sl2Kind::Orthogonal : Sl2Kind::Semisimple;
            const Vec2 astray =
                model_act(ModelSpace::PuncturedPlane, sl2_flow(other, 0.5), p);
            CHECK(std::fabs(f.value(astray) - f.value(p)) > 1e-3);
        }

        const Submersion g = invariant_submersion(SubmersionSpace::DiagonalComplement,
                                                  Sl2Kind::Orthogonal);
        const Vec2 q{1.5, -0.5};
        const Vec2 moved = model_act(ModelSpace::DiagonalComplement,
                                     sl2_flow(Sl2Kind::Orthogonal, 0.2), q);
        CHECK(g.value(moved) == doctest::Approx(g.value(q)).epsilon(1e-12));
    }

    SUBCASE("affine-group invariants under left translation") {
        const Submersion ratio =
            invariant_submersion(SubmersionSpace::AffGroup, Sl2Kind::Semisimple);
        const Submersion first =
            invariant_submersion(SubmersionSpace::AffGroup, Sl2Kind::Unipotent);
        const AffElement p{1.7, -0.4};
        const AffElement by_scale = aff_multiply({2.5, 0.0}, p);
        const AffElement by_shift = aff_multiply({1.0, 0.9}, p);
        CHECK(ratio.value({by_scale.a, by_scale.b}) ==
              doctest::Approx(ratio.value({p.a, p.b})));
        CHECK(first.value({by_shift.a, by_shift.b}) ==
              doctest::Approx(first.value({p.a, p.b})));
    }

    SUBCASE("gradients match finite differences") {
        const double h = 1e-6;
        const std::pair<SubmersionSpace, Sl2Kind> pairs[] = {
            {SubmersionSpace::DiagonalComplement, Sl2Kind::Orthogonal},
            {SubmersionSpace::DiagonalComplement, Sl2Kind::Unipotent},
            {SubmersionSpace::AffGroup, Sl2Kind::Semisimple},
        };
        const Vec2 p{1.4, -0.6};
        for (const auto& [space, kind] : pairs) {
            const Submersion f = invariant_submersion(space, kind);
            const Vec2 grad = f.gradient(p);
            const double fx =
                (f.value({p.x + h, p.y}) - f.value({p.x - h, p.y})) / (2 * h);
            const double fy =
                (f.value({p.x, p.y + h}) - f.value({p.x, p.y - h})) / (2 * h);
            CHECK(grad.x == doctest::Approx(fx).epsilon(1e-6));
            CHECK(grad.y == doctest::Approx(fy).epsilon(1e-6));
        }
    }
}

TEST_CASE("levi-civita connections") {
    SUBCASE("euclidean metric is flat and empty") {
        const Connection2D c = levi_civita(rf("1"), rf("0"), rf("1"));
        CHECK(c == Connection2D::zero());
    }

    SUBCASE("hyperbolic metric in closed form") {
        const Connection2D c = levi_civita(rf("1/y^2"), rf("0"), rf("1/y^2"));
        CHECK(c.A.is_zero());
        CHECK(c.B == rf("1/y"));
        CHECK(c.C == rf("-1/y"));
        CHECK(c.D.is_zero());
        CHECK(c.E.is_zero());
        CHECK(c.F == rf("-1/y"));
        CHECK(c.U.is_zero());
        CHECK(c.V.is_zero());
        CHECK(hyperbolic_connection() == c);
    }

    SUBCASE("round metric in closed form") {
        const std::string conf = "4/(1 + x^2 + y^2)^2";
        const Connection2D c = levi_civita(rf(conf), rf("0"), rf(conf));
        const std::string r2 = "(1 + x^2 + y^2)";
        CHECK(c.A == rf("-2*x/" + r2));
        CHECK(c.B == rf("2*y/" + r2));
        CHECK(c.C == rf("-2*y/" + r2));
        CHECK(c.D == rf("-2*x/" + r2));
        CHECK(c.E == rf("2*x/" + r2));
        CHECK(c.F == rf("-2*y/" + r2));
        CHECK(sphere_connection() == c);
    }

    SUBCASE("degenerate metrics are rejected") {
        CHECK_THROWS_AS(levi_civita(rf("1"), rf("1"), rf("1")), DomainError);
        CHECK_THROWS_AS(levi_civita(rf("0"), rf("0"), rf("1")), DomainError);
    }

    SUBCASE("classification of the two metric models") {
        const AlgebraReport hyp =
            classify_connection(hyperbolic_connection(), {Rational(0), Rational(1)});
        CHECK(hyp.label == AlgebraLabel{CaseKind::SL2, 3});
        CHECK(hyp.torsion_free);
        CHECK_FALSE(hyp.flat);

        const AlgebraReport sph =
            classify_connection(sphere_connection(), {Rational(0), Rational(0)});
        CHECK(sph.label == AlgebraLabel{CaseKind::SO3, 3});
        CHECK(sph.torsion_free);
        CHECK_FALSE(sph.flat);
    }
}

TEST_CASE("affine group of the line") {
    const AffElement p = aff_multiply({2.0, 0.0}, {3.0, 5.0});
    CHECK(p.a == doctest::Approx(6.0));
    CHECK(p.b == doctest::Approx(10.0));
    const AffElement q = aff_multiply({3.0, 5.0}, {2.0, 0.0});
    CHECK(q.a == doctest::Approx(6.0));
    CHECK(q.b == doctest::Approx(5.0));

    const AffElement g{2.5, -1.5};
    const AffElement gi = aff_inverse(g);
    const AffElement id = aff_multiply(g, gi);
    CHECK(id.a == doctest::Approx(1.0));
    CHECK(id.b == doctest::Approx(0.0).epsilon(1e-12));

    CHECK(aff_commutes({2.0, 1.0}, {3.0, 2.0}));        // (a-1, b) proportional
    CHECK_FALSE(aff_commutes({2.0, 1.0}, {3.0, 5.0}));
    CHECK(aff_commutes({1.0, 0.7}, {1.0, -0.2}));       // translations commute
    const AffElement ab = aff_multiply({2.0, 1.0}, {3.0, 2.0});
    const AffElement ba = aff_multiply({3.0, 2.0}, {2.0, 1.0});
    CHECK(ab.a == doctest::Approx(ba.a));
    CHECK(ab.b == doctest::Approx(ba.b));

    CHECK_THROWS_AS(aff_multiply({-1.0, 0.0}, {1.0, 0.0}), DomainError);
    CHECK_THROWS_AS(aff_inverse({0.0, 2.0}), DomainError);
}
