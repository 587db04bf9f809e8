// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "akl/connection.hpp"
#include "akl/numeric.hpp"

namespace akl {

// One summand of a closed-form field component:
//   coef * x^px * y^py * e^(expk*y) * trig(freq*y)
// Every field handled by the classification (polynomial fields, x ∂x, h(y) ∂x
// with h built from exponentials and trigonometric functions) is a sum of
// these.
struct FieldTerm {
    double coef = 0.0;
    int px = 0, py = 0;
    double expk = 0.0;
    enum class Trig { None, Cos, Sin } trig = Trig::None;
    double freq = 0.0;

    double eval(double x, double y) const;
    // d/dx and d/dy as term sums (product rule).
    std::vector<FieldTerm> ddx() const;
    std::vector<FieldTerm> ddy() const;
    std::string to_string() const;
};

// Closed-form vector field  comp_x(x,y) ∂x + comp_y(x,y) ∂y.
struct VectorFieldCF {
    std::vector<FieldTerm> comp_x, comp_y;

    Vec2 eval(Vec2 p) const;
    Mat2 jacobian(Vec2 p) const; // analytic, J[k][i] = ∂_i comp_k

    VectorFieldCF scaled(double k) const;
    VectorFieldCF operator+(const VectorFieldCF& o) const;

    std::string to_string() const;

    // Time-tau flow as a NumericMap. Integrates the flow ODE together with
    // its variational equation with fixed-step RK4; the step count keeps the
    // integration error orders of magnitude below the certificate tolerances.
    NumericMap flow(double tau, int steps = 64) const;

    static VectorFieldCF zero();
    static VectorFieldCF x_dx();                // x ∂x
    static VectorFieldCF dy();                  // ∂y
    static VectorFieldCF h_dx(double coef, int ypow, double expk,
                              FieldTerm::Trig trig = FieldTerm::Trig::None,
                              double freq = 0.0); // coef y^ypow e^{expk y} trig(freq y) ∂x
    static VectorFieldCF poly_dx(const std::vector<FieldTerm>& terms);
};

// Pointwise Lie bracket [W1, W2] = (W1·∇)W2 - (W2·∇)W1 evaluated with
// analytic Jacobians.
Vec2 lie_bracket_value(const VectorFieldCF& w1, const VectorFieldCF& w2, Vec2 p);

} // namespace akl
