// SPDX-License-Identifier: Apache-2.0
//
// Killing fields of an affine connection on a two-dimensional chart.
//
// A vector field W = a(x,y) d/dx + b(x,y) d/dy preserves the connection
// exactly when the pair (a, b) satisfies a linear second-order PDE system.
// The system is of finite type: all second derivatives of (a, b) are linear
// combinations of the six jet coordinates (a, b, a_x, a_y, b_x, b_y), and two
// zeroth-order rows coming from the torsion must vanish as well.  Solving the
// system at a point therefore reduces to linear algebra on the jet space:
// every obstruction is a covector on Q^6, and the space of Killing jets is
// the common kernel of all obstructions obtained by repeated prolongation.

#include "akl/killing.hpp"

#include "akl/errors.hpp"
#include "akl/linalg.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <utility>
#include <vector>

namespace akl {

namespace {

// ---------------------------------------------------------------------------
// The defining equations, written once as a table.
//
// Symbols name either a connection coefficient or one of its first partial
// derivatives; slots name jet coordinates of the unknown field, including the
// six second derivatives.  Each equation is a sum of (factor * symbol * slot)
// terms that must vanish identically.
// ---------------------------------------------------------------------------

enum class Sym {
    One,
    A, B, C, D, E, F, U, V,
    Ax, Bx, Cx, Dx, Ex, Fx, Ux, Vx,
    Ay, By, Cy, Dy, Ey, Fy, Uy, Vy,
};

enum Slot {
    Ja = 0, Jb, Jax, Jay, Jbx, Jby,          // first-order jet
    Jaxx, Jbxx, Jaxy, Jbxy, Jayy, Jbyy,      // second derivatives
    SlotCount,
};

struct Term {
    int factor;
    Sym sym;
    Slot slot;
};

using Equation = std::vector<Term>;

// Equations 0..5 express the vanishing of the covariant Lie derivative and
// each contains exactly one second-derivative slot with unit coefficient:
// a_xx, b_xx, a_xy, b_xy, a_yy, b_yy in that order.  Equations 6 and 7 are
// the zeroth-order torsion rows.
const std::array<Equation, 8>& equation_table() {
    static const std::array<Equation, 8> table = {{
        // a_xx + A a_x - B a_y + 2C b_x + A_x a + A_y b
        {{1, Sym::One, Jaxx},
         {1, Sym::A, Jax},
         {-1, Sym::B, Jay},
         {2, Sym::C, Jbx},
         {1, Sym::Ax, Ja},
         {1, Sym::Ay, Jb}},
        // b_xx + 2B a_x + (2D - A) b_x - B b_y + B_x a + B_y b
        {{1, Sym::One, Jbxx},
         {2, Sym::B, Jax},
         {2, Sym::D, Jbx},
         {-1, Sym::A, Jbx},
         {-1, Sym::B, Jby},
         {1, Sym::Bx, Ja},
         {1, Sym::By, Jb}},
        // a_xy + (A - D) a_y + E b_x + C b_y + C_x a + C_y b
        {{1, Sym::One, Jaxy},
         {1, Sym::A, Jay},
         {-1, Sym::D, Jay},
         {1, Sym::E, Jbx},
         {1, Sym::C, Jby},
         {1, Sym::Cx, Ja},
         {1, Sym::Cy, Jb}},
        // b_xy + D a_x + B a_y + (F - C) b_x + D_x a + D_y b
        {{1, Sym::One, Jbxy},
         {1, Sym::D, Jax},
         {1, Sym::B, Jay},
         {1, Sym::F, Jbx},
         {-1, Sym::C, Jbx},
         {1, Sym::Dx, Ja},
         {1, Sym::Dy, Jb}},
        // a_yy - E a_x + (2C - F) a_y + 2E b_y + E_x a + E_y b
        {{1, Sym::One, Jayy},
         {-1, Sym::E, Jax},
         {2, Sym::C, Jay},
         {-1, Sym::F, Jay},
         {2, Sym::E, Jby},
         {1, Sym::Ex, Ja},
         {1, Sym::Ey, Jb}},
        // b_yy + 2D a_y - E b_x + F b_y + F_x a + F_y b
        {{1, Sym::One, Jbyy},
         {2, Sym::D, Jay},
         {-1, Sym::E, Jbx},
         {1, Sym::F, Jby},
         {1, Sym::Fx, Ja},
         {1, Sym::Fy, Jb}},
        // U_x a + U_y b - V a_y + U b_y
        {{1, Sym::Ux, Ja},
         {1, Sym::Uy, Jb},
         {-1, Sym::V, Jay},
         {1, Sym::U, Jby}},
        // V_x a + V_y b + V a_x - U b_x
        {{1, Sym::Vx, Ja},
         {1, Sym::Vy, Jb},
         {1, Sym::V, Jax},
         {-1, Sym::U, Jbx}},
    }};
    return table;
}

std::array<RationalFunction2, 25> symbol_values(const Connection2D& c) {
    std::array<RationalFunction2, 25> v;
    v[static_cast<int>(Sym::One)] = RationalFunction2(Poly2::constant(Rational(1)));
    v[static_cast<int>(Sym::A)] = c.A;
    v[static_cast<int>(Sym::B)] = c.B;
    v[static_cast<int>(Sym::C)] = c.C;
    v[static_cast<int>(Sym::D)] = c.D;
    v[static_cast<int>(Sym::E)] = c.E;
    v[static_cast<int>(Sym::F)] = c.F;
    v[static_cast<int>(Sym::U)] = c.U;
    v[static_cast<int>(Sym::V)] = c.V;
    const std::array<Sym, 8> base = {Sym::A, Sym::B, Sym::C, Sym::D,
                                     Sym::E, Sym::F, Sym::U, Sym::V};
    for (std::size_t i = 0; i < base.size(); ++i) {
        const auto& f = v[static_cast<int>(base[i])];
        v[static_cast<int>(Sym::Ax) + static_cast<int>(i)] = f.dx();
        v[static_cast<int>(Sym::Ay) + static_cast<int>(i)] = f.dy();
    }
    return v;
}

} // namespace

KillingSystem assemble(const Connection2D& c) {
    KillingSystem sys;
    sys.source = c;
    const auto vals = symbol_values(c);
    const auto& eqs = equation_table();
    for (int r = 0; r < 6; ++r) {
        for (const Term& t : eqs[r]) {
            if (t.slot >= Jaxx)
                continue; // the lone unit second-derivative term
            // Solve the equation for its second derivative: move the
            // first-order part to the other side.
            sys.second_order[r][t.slot] = sys.second_order[r][t.slot] -
                vals[static_cast<int>(t.sym)].scaled(Rational(t.factor));
        }
    }
    for (int r = 0; r < 2; ++r) {
        for (const Term& t : eqs[6 + r]) {
            sys.constraints[r][t.slot] = sys.constraints[r][t.slot] +
                vals[static_cast<int>(t.sym)].scaled(Rational(t.factor));
        }
    }
    return sys;
}

std::array<RationalFunction2, 8>
KillingSystem::residuals(const RationalFunction2& a, const RationalFunction2& b) const {
    std::array<RationalFunction2, SlotCount> jet;
    jet[Ja] = a;
    jet[Jb] = b;
    jet[Jax] = a.dx();
    jet[Jay] = a.dy();
    jet[Jbx] = b.dx();
    jet[Jby] = b.dy();
    jet[Jaxx] = jet[Jax].dx();
    jet[Jaxy] = jet[Jax].dy();
    jet[Jayy] = jet[Jay].dy();
    jet[Jbxx] = jet[Jbx].dx();
    jet[Jbxy] = jet[Jbx].dy();
    jet[Jbyy] = jet[Jby].dy();

    const auto vals = symbol_values(source);
    std::array<RationalFunction2, 8> out;
    const auto& eqs = equation_table();
    for (int e = 0; e < 8; ++e) {
        RationalFunction2 acc;
        for (const Term& t : eqs[e])
            acc = acc + (vals[static_cast<int>(t.sym)] * jet[t.slot]).scaled(Rational(t.factor));
        out[e] = acc;
    }
    return out;
}

std::array<QVec, 6> KillingSystem::jet_derivative_rows(const BasePoint& p) const {
    std::array<QVec, 6> rows;
    for (int r = 0; r < 6; ++r) {
        rows[r] = QVec(6, Rational(0));
        for (int j = 0; j < 6; ++j)
            rows[r][j] = second_order[r][j].eval(p.x, p.y);
    }
    return rows;
}

bool Solution::contains(const KillingJet& jet) const {
    QVec v(6);
    for (int i = 0; i < 6; ++i)
        v[i] = jet[i];
    return constraint_space.annihilates(v);
}

namespace {

// Truncated Taylor expansions of the prolongation data at the base point.
// Working with series (rather than rational functions) keeps the degree of
// every intermediate bounded, which matters because each prolongation step
// multiplies rows by the structure matrices.

using SeriesRow = std::array<Poly2, 6>;
using SeriesMat = std::array<SeriesRow, 6>;

Poly2 taylor_at(const RationalFunction2& f, const BasePoint& p, int order) {
    const Poly2 num = f.num().shifted(p.x, p.y).truncated(order);
    Poly2 den = f.den().shifted(p.x, p.y);
    if (den.constant_term() == 0) {
        std::ostringstream os;
        os << "connection coefficient " << f.to_string()
           << " has a pole at the base point (" << rational_to_string(p.x)
           << ", " << rational_to_string(p.y) << ")";
        throw PoleError(os.str());
    }
    den = den.truncated(order);
    return series_mul(num, series_inverse(den, order), order);
}

bool row_is_zero(const SeriesRow& r) {
    return std::all_of(r.begin(), r.end(), [](const Poly2& p) { return p.is_zero(); });
}

SeriesRow row_dx(const SeriesRow& r) {
    SeriesRow out;
    for (int j = 0; j < 6; ++j)
        out[j] = r[j].dx();
    return out;
}

SeriesRow row_dy(const SeriesRow& r) {
    SeriesRow out;
    for (int j = 0; j < 6; ++j)
        out[j] = r[j].dy();
    return out;
}

SeriesRow row_add(const SeriesRow& lhs, const SeriesRow& rhs) {
    SeriesRow out;
    for (int j = 0; j < 6; ++j)
        out[j] = lhs[j] + rhs[j];
    return out;
}

SeriesRow row_sub(const SeriesRow& lhs, const SeriesRow& rhs) {
    SeriesRow out;
    for (int j = 0; j < 6; ++j)
        out[j] = lhs[j] - rhs[j];
    return out;
}

// (row * M)_j = sum_k row_k M_kj, truncated.
SeriesRow row_times_mat(const SeriesRow& row, const SeriesMat& m, int order) {
    SeriesRow out;
    for (int j = 0; j < 6; ++j) {
        Poly2 acc;
        for (int k = 0; k < 6; ++k) {
            if (row[k].is_zero() || m[k][j].is_zero())
                continue;
            acc = acc + series_mul(row[k], m[k][j], order);
        }
        out[j] = acc;
    }
    return out;
}

SeriesMat mat_mul(const SeriesMat& a, const SeriesMat& b, int order) {
    SeriesMat out;
    for (int i = 0; i < 6; ++i)
        out[i] = row_times_mat(a[i], b, order);
    return out;
}

QVec constant_terms(const SeriesRow& r) {
    QVec v(6, Rational(0));
    for (int j = 0; j < 6; ++j)
        v[j] = r[j].constant_term();
    return v;
}

} // namespace

Solution solve(const Connection2D& c, const BasePoint& p, int max_order) {
    if (max_order < 1)
        throw DomainError("solve: max_order must be at least 1");
    const KillingSystem sys = assemble(c);
    const int order = max_order + 2;

    // L[r] is the series row expressing the r-th second derivative
    // (a_xx, b_xx, a_xy, b_xy, a_yy, b_yy) in terms of the jet.
    SeriesMat L;
    for (int r = 0; r < 6; ++r)
        for (int j = 0; j < 6; ++j)
            L[r][j] = taylor_at(sys.second_order[r][j], p, order);

    // Jet transport: d(jet)/dx = P * jet and d(jet)/dy = Q * jet, where the
    // jet is ordered (a, b, a_x, a_y, b_x, b_y).
    SeriesMat P{};
    SeriesMat Q{};
    const Poly2 one = Poly2::constant(Rational(1));
    P[0][2] = one; // d a / dx = a_x
    P[1][4] = one; // d b / dx = b_x
    P[2] = L[0];   // d a_x / dx = a_xx
    P[3] = L[2];   // d a_y / dx = a_xy
    P[4] = L[1];   // d b_x / dx = b_xx
    P[5] = L[3];   // d b_y / dx = b_xy
    Q[0][3] = one; // d a / dy = a_y
    Q[1][5] = one; // d b / dy = b_y
    Q[2] = L[2];   // d a_x / dy = a_xy
    Q[3] = L[4];   // d a_y / dy = a_yy
    Q[4] = L[3];   // d b_x / dy = b_xy
    Q[5] = L[5];   // d b_y / dy = b_yy

    // Seed obstructions: the two torsion rows, plus the integrability matrix
    // dP/dy - dQ/dx + PQ - QP (rows of which must annihilate every jet).
    std::vector<SeriesRow> frontier;
    for (int r = 0; r < 2; ++r) {
        SeriesRow row;
        for (int j = 0; j < 6; ++j)
            row[j] = taylor_at(sys.constraints[r][j], p, order);
        frontier.push_back(row);
    }
    {
        const SeriesMat pq = mat_mul(P, Q, order);
        const SeriesMat qp = mat_mul(Q, P, order);
        for (int r = 0; r < 6; ++r) {
            SeriesRow row = row_add(row_sub(row_dy(P[r]), row_dx(Q[r])),
                                    row_sub(pq[r], qp[r]));
            frontier.push_back(row);
        }
    }
    frontier.erase(std::remove_if(frontier.begin(), frontier.end(), row_is_zero),
                   frontier.end());

    Solution sol;
    for (const SeriesRow& row : frontier)
        sol.constraint_space.add(constant_terms(row));

    // Prolong: differentiating an obstruction row r gives the new rows
    // dr/dx + r P and dr/dy + r Q.  The ranks of the accumulated constant
    // terms are nondecreasing; once they hold still for two consecutive
    // rounds the system has stabilized and the kernel is the solution space.
    int stable_rounds = 0;
    int prev_rank = sol.constraint_space.rank();
    sol.stabilized = frontier.empty() || sol.constraint_space.rank() == 6;
    sol.orders_used = 0;

    for (int round = 1; round <= max_order && !sol.stabilized; ++round) {
        std::vector<SeriesRow> next;
        for (const SeriesRow& row : frontier) {
            SeriesRow rx = row_add(row_dx(row), row_times_mat(row, P, order));
            SeriesRow ry = row_add(row_dy(row), row_times_mat(row, Q, order));
            if (!row_is_zero(rx)) {
                sol.constraint_space.add(constant_terms(rx));
                next.push_back(std::move(rx));
            }
            if (!row_is_zero(ry)) {
                sol.constraint_space.add(constant_terms(ry));
                next.push_back(std::move(ry));
            }
        }
        sol.orders_used = round;
        const int rank = sol.constraint_space.rank();
        stable_rounds = (rank == prev_rank) ? stable_rounds + 1 : 0;
        prev_rank = rank;
        frontier = std::move(next);
        if (stable_rounds >= 2 || rank == 6 || frontier.empty())
            sol.stabilized = true;
    }

    const std::vector<QVec> kernel = sol.constraint_space.nullspace();
    for (const QVec& v : kernel) {
        KillingJet jet;
        for (int i = 0; i < 6; ++i)
            jet[i] = v[i];
        sol.basis.push_back(jet);
    }
    return sol;
}

KillingJet bracket(const Solution& sol, const KillingSystem& sys,
                   const KillingJet& j1, const KillingJet& j2, const BasePoint& p) {
    if (!sol.contains(j1) || !sol.contains(j2))
        throw DomainError("bracket: jet does not satisfy the constraint space");
    const auto rows = sys.jet_derivative_rows(p);
    const auto second = [&rows](const KillingJet& j) {
        std::array<Rational, 6> d{}; // a_xx, b_xx, a_xy, b_xy, a_yy, b_yy
        for (int r = 0; r < 6; ++r) {
            Rational s(0);
            for (int i = 0; i < 6; ++i)
                s += rows[r][i] * j[i];
            d[r] = s;
        }
        return d;
    };
    const auto d1 = second(j1);
    const auto d2 = second(j2);
    const Rational &a1 = j1[0], &b1 = j1[1], &a1x = j1[2], &a1y = j1[3],
                   &b1x = j1[4], &b1y = j1[5];
    const Rational &a2 = j2[0], &b2 = j2[1], &a2x = j2[2], &a2y = j2[3],
                   &b2x = j2[4], &b2y = j2[5];
    const Rational &a1xx = d1[0], &b1xx = d1[1], &a1xy = d1[2], &b1xy = d1[3],
                   &a1yy = d1[4], &b1yy = d1[5];
    const Rational &a2xx = d2[0], &b2xx = d2[1], &a2xy = d2[2], &b2xy = d2[3],
                   &a2yy = d2[4], &b2yy = d2[5];

    KillingJet w;
    w[0] = a1 * a2x + b1 * a2y - a2 * a1x - b2 * a1y;
    w[1] = a1 * b2x + b1 * b2y - a2 * b1x - b2 * b1y;
    w[2] = a1x * a2x + b1x * a2y + a1 * a2xx + b1 * a2xy
         - a2x * a1x - b2x * a1y - a2 * a1xx - b2 * a1xy;
    w[3] = a1y * a2x + b1y * a2y + a1 * a2xy + b1 * a2yy
         - a2y * a1x - b2y * a1y - a2 * a1xy - b2 * a1yy;
    w[4] = a1x * b2x + b1x * b2y + a1 * b2xx + b1 * b2xy
         - a2x * b1x - b2x * b1y - a2 * b1xx - b2 * b1xy;
    w[5] = a1y * b2x + b1y * b2y + a1 * b2xy + b1 * b2yy
         - a2y * b1x - b2y * b1y - a2 * b1xy - b2 * b1yy;
    return w;
}

KillingJet bracket(const KillingJet& j1, const KillingJet& j2,
                   const Connection2D& c, const BasePoint& p) {
    const KillingSystem sys = assemble(c);
    const Solution sol = solve(c, p);
    return bracket(sol, sys, j1, j2, p);
}

std::string AlgebraLabel::to_string() const {
    switch (kind) {
    case CaseKind::FlatTorsionFree: return "FlatTorsionFree";
    case CaseKind::Dim4Case: return "Dim4Case";
    case CaseKind::SL2: return "SL2";
    case CaseKind::SO3: return "SO3";
    case CaseKind::Affine2: return "Affine2";
    case CaseKind::Abelian2: return "Abelian2";
    case CaseKind::LowRank: return "LowRank(" + std::to_string(dim) + ")";
    case CaseKind::Other: return "Other(" + std::to_string(dim) + ")";
    }
    return "Other(" + std::to_string(dim) + ")";
}

bool is_homogeneous(const std::vector<KillingJet>& basis) {
    RowSpace values(2);
    for (const KillingJet& j : basis)
        values.add(QVec{j[0], j[1]});
    return values.rank() == 2;
}

namespace {

AlgebraLabel label_from(const AlgebraReport& rep) {
    const int dim = rep.dim;
    if (dim <= 1)
        return {CaseKind::LowRank, dim};
    if (dim == 2) {
        bool abelian = true;
        for (const Rational& c : rep.structure[0][1])
            if (c != 0)
                abelian = false;
        return {abelian ? CaseKind::Abelian2 : CaseKind::Affine2, 2};
    }
    if (dim == 3) {
        // Killing form of the structure constants: K_ij = tr(ad_i ad_j),
        // where (ad_i)^k_j = structure[i][j][k].
        QMat k(3, QVec(3, Rational(0)));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                Rational s(0);
                for (int l = 0; l < 3; ++l)
                    for (int m = 0; m < 3; ++m)
                        s += rep.structure[i][l][m] * rep.structure[j][m][l];
                k[i][j] = s;
            }
        const Inertia sig = symmetric_signature(k);
        if (sig.zero == 0 && sig.negative == 3)
            return {CaseKind::SO3, 3};
        if (sig.zero == 0 && sig.positive > 0 && sig.negative > 0)
            return {CaseKind::SL2, 3};
        return {CaseKind::Other, 3};
    }
    if (dim == 4) {
        // The distinguished four-dimensional case: the derived algebra is
        // two-dimensional and abelian.
        std::vector<QVec> derived;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                derived.push_back(rep.structure[i][j]);
        RowSpace span(4);
        for (const QVec& v : derived)
            span.add(v);
        if (span.rank() != 2)
            return {CaseKind::Other, 4};
        for (const QVec& u : derived)
            for (const QVec& v : derived) {
                QVec w(4, Rational(0));
                for (int i = 0; i < 4; ++i)
                    for (int j = 0; j < 4; ++j)
                        if (u[i] != 0 && v[j] != 0)
                            for (int kk = 0; kk < 4; ++kk)
                                w[kk] += u[i] * v[j] * rep.structure[i][j][kk];
                for (const Rational& c : w)
                    if (c != 0)
                        return {CaseKind::Other, 4};
            }
        return {CaseKind::Dim4Case, 4};
    }
    if (dim == 6 && rep.flat && rep.torsion_free)
        return {CaseKind::FlatTorsionFree, 6};
    return {CaseKind::Other, dim};
}

} // namespace

AlgebraReport classify_algebra(const std::vector<KillingJet>& basis,
                               const Connection2D& c, const BasePoint& p) {
    const KillingSystem sys = assemble(c);
    const Solution sol = solve(c, p);
    for (const KillingJet& j : basis)
        if (!sol.contains(j))
            throw DomainError("classify_algebra: basis jet is not a Killing jet "
                              "at the base point");

    const int dim = static_cast<int>(basis.size());
    AlgebraReport rep;
    rep.dim = dim;
    rep.basis = basis;
    rep.stabilized = sol.stabilized;
    rep.flat = is_flat(c);
    rep.torsion_free = is_torsion_free(c);
    rep.structure.assign(dim, std::vector<QVec>(dim, QVec(dim, Rational(0))));

    // Express each bracket back in the given basis; the columns of m are the
    // basis jets.
    QMat m(6, QVec(dim, Rational(0)));
    for (int k = 0; k < dim; ++k)
        for (int r = 0; r < 6; ++r)
            m[r][k] = basis[k][r];
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
            const KillingJet w = bracket(sol, sys, basis[i], basis[j], p);
            QVec rhs(6);
            for (int r = 0; r < 6; ++r)
                rhs[r] = w[r];
            const auto coords = solve_linear(m, rhs);
            if (!coords)
                throw CertificateError("classify_algebra: brackets do not close "
                                       "on the span of the given jets");
            rep.structure[i][j] = *coords;
            for (int k = 0; k < dim; ++k)
                rep.structure[j][i][k] = -(*coords)[k];
        }

    rep.homogeneous_at_point = is_homogeneous(basis);
    rep.label = label_from(rep);
    return rep;
}

AlgebraReport classify_connection(const Connection2D& c, const BasePoint& p,
                                  int max_order) {
    const Solution sol = solve(c, p, max_order);
    if (!sol.stabilized)
        throw DomainError("classify_connection: prolongation did not stabilize "
                          "within the order cap");
    return classify_algebra(sol.basis, c, p);
}

std::vector<std::vector<PolyS>> case6_matrix() {
    // Substitute the one-jet of the field (s x + y) d/dx + (s y - x) d/dy:
    // a_x = s, a_y = 1, b_x = -1, b_y = s, with vanishing value and second
    // derivatives at the origin.  Each defining equation then becomes a row
    // of linear conditions on the eight coefficients (A, ..., F, U, V); the
    // derivative symbols drop out because the coefficients are frozen at a
    // point.
    const PolyS s = PolyS::variable();
    const PolyS one(Rational(1));
    std::array<PolyS, 6> jet; // a, b, a_x, a_y, b_x, b_y
    jet[Ja] = PolyS();
    jet[Jb] = PolyS();
    jet[Jax] = s;
    jet[Jay] = one;
    jet[Jbx] = PolyS(Rational(-1));
    jet[Jby] = s;

    const auto unknown_index = [](Sym sym) {
        switch (sym) {
        case Sym::A: return 0;
        case Sym::B: return 1;
        case Sym::C: return 2;
        case Sym::D: return 3;
        case Sym::E: return 4;
        case Sym::F: return 5;
        case Sym::U: return 6;
        case Sym::V: return 7;
        default: return -1;
        }
    };

    std::vector<std::vector<PolyS>> m(8, std::vector<PolyS>(8));
    const auto& eqs = equation_table();
    for (int e = 0; e < 8; ++e) {
        for (const Term& t : eqs[e]) {
            const int col = unknown_index(t.sym);
            if (col < 0)
                continue; // second-derivative slots and derivative symbols
            m[e][col] = m[e][col] + jet[t.slot].scaled(Rational(t.factor));
        }
    }
    return m;
}

QMat case6_matrix_at(const Rational& s) {
    const auto m = case6_matrix();
    QMat out(8, QVec(8, Rational(0)));
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            out[i][j] = m[i][j].eval(s);
    return out;
}

PolyS verify_case6() {
    const PolyS det = det_polys(case6_matrix());
    // Expected determinant shape: a nonzero rational multiple of
    // (s^2 + 9)(s^2 + 1)^3.
    const PolyS s = PolyS::variable();
    const PolyS s2 = s * s;
    const PolyS f1 = s2 + PolyS(Rational(9));
    const PolyS f2 = s2 + PolyS(Rational(1));
    const PolyS target = f1 * f2 * f2 * f2;
    PolyS q, r;
    PolyS::divrem(det, target, &q, &r);
    if (!r.is_zero() || q.degree() != 0 || q.coeff(0) == 0)
        throw CertificateError("unique-multiplier determinant does not have "
                               "the predicted factorization");
    return det;
}

} // namespace akl
