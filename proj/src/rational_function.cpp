// SPDX-License-Identifier: Apache-2.0
#include "akl/rational_function.hpp"

#include <cmath>

#include "akl/errors.hpp"

namespace akl {

RationalFunction2::RationalFunction2(Poly2 num, Poly2 den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    normalize();
}

RationalFunction2 RationalFunction2::constant(const Rational& c) {
    return RationalFunction2(Poly2::constant(c));
}

RationalFunction2 RationalFunction2::x() { return RationalFunction2(Poly2::x()); }
RationalFunction2 RationalFunction2::y() { return RationalFunction2(Poly2::y()); }

void RationalFunction2::normalize() {
    if (num_.is_zero()) {
        den_ = Poly2::constant(Rational(1));
        return;
    }
    const Poly2 g = poly2_gcd(num_, den_);
    if (g.total_degree() > 0) {
        num_ = poly2_div_exact(num_, g);
        den_ = poly2_div_exact(den_, g);
    }
    const Rational lead = den_.leading_coefficient();
    if (lead != 1) {
        const Rational inv = Rational(1) / lead;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RationalFunction2 RationalFunction2::operator-() const {
    RationalFunction2 r(*this);
    r.num_ = -r.num_;
    return r;
}

RationalFunction2 RationalFunction2::scaled(const Rational& k) const {
    if (k == 0) return RationalFunction2();
    RationalFunction2 r(*this);
    r.num_ = r.num_.scaled(k); // gcd(num, den) stays 1 under constant scaling
    return r;
}

RationalFunction2 RationalFunction2::operator+(const RationalFunction2& o) const {
    return RationalFunction2(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction2 RationalFunction2::operator-(const RationalFunction2& o) const {
    return RationalFunction2(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction2 RationalFunction2::operator*(const RationalFunction2& o) const {
    return RationalFunction2(num_ * o.num_, den_ * o.den_);
}

RationalFunction2 RationalFunction2::operator/(const RationalFunction2& o) const {
    if (o.is_zero()) throw PoleError("division by the zero rational function");
    return RationalFunction2(num_ * o.den_, den_ * o.num_);
}

RationalFunction2 RationalFunction2::dx() const {
    return RationalFunction2(num_.dx() * den_ - num_ * den_.dx(), den_ * den_);
}

RationalFunction2 RationalFunction2::dy() const {
    return RationalFunction2(num_.dy() * den_ - num_ * den_.dy(), den_ * den_);
}

Rational RationalFunction2::eval(const Rational& x, const Rational& y) const {
    const Rational d = den_.eval(x, y);
    if (d == 0)
        throw PoleError("pole: denominator " + den_.to_string() + " vanishes at (" +
                        rational_to_string(x) + ", " + rational_to_string(y) + ")");
    return num_.eval(x, y) / d;
}

double RationalFunction2::eval_double(double x, double y) const {
    const double d = den_.eval_double(x, y);
    if (!(std::fabs(d) > 1e-14) || !std::isfinite(d))
        throw PoleError("pole: denominator " + den_.to_string() + " vanishes near the sample point");
    return num_.eval_double(x, y) / d;
}

std::string RationalFunction2::to_string() const {
    if (is_polynomial()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

} // namespace akl
