// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "akl/poly.hpp"

namespace akl {

// Quotient of two bivariate polynomials kept in canonical form:
//  - gcd(num, den) = 1
//  - den is never zero; num = 0 forces den = 1
//  - den's grlex-leading coefficient is 1
// Canonical form makes operator== a structural comparison.
class RationalFunction2 {
  public:
    RationalFunction2() : num_(), den_(Poly2::constant(Rational(1))) {}
    RationalFunction2(Poly2 num, Poly2 den); // normalizes
    /* implicit */ RationalFunction2(const Poly2& p)
        : num_(p), den_(Poly2::constant(Rational(1))) {}
    static RationalFunction2 constant(const Rational& c);
    static RationalFunction2 x();
    static RationalFunction2 y();

    const Poly2& num() const { return num_; }
    const Poly2& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    RationalFunction2 operator-() const;
    RationalFunction2 operator+(const RationalFunction2& o) const;
    RationalFunction2 operator-(const RationalFunction2& o) const;
    RationalFunction2 operator*(const RationalFunction2& o) const;
    RationalFunction2 operator/(const RationalFunction2& o) const; // o != 0
    RationalFunction2& operator+=(const RationalFunction2& o) { return *this = *this + o; }
    RationalFunction2& operator-=(const RationalFunction2& o) { return *this = *this - o; }
    RationalFunction2& operator*=(const RationalFunction2& o) { return *this = *this * o; }
    RationalFunction2& operator/=(const RationalFunction2& o) { return *this = *this / o; }
    bool operator==(const RationalFunction2& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RationalFunction2& o) const { return !(*this == o); }

    RationalFunction2 scaled(const Rational& k) const;

    RationalFunction2 dx() const; // quotient rule, canonicalized
    RationalFunction2 dy() const;

    // Exact evaluation; throws PoleError naming the denominator when den
    // vanishes at the point.
    Rational eval(const Rational& x, const Rational& y) const;
    // Float evaluation for the numeric layer; throws PoleError on (near-)zero
    // denominators.
    double eval_double(double x, double y) const;

    std::string to_string() const;

  private:
    void normalize();
    Poly2 num_, den_;
};

// Parses an expression over the grammar  + - * / ^ ( ) x y <integer>
// (binary operators are explicit; '-' also works as unary minus; '^' takes a
// nonnegative integer exponent). Throws ParseError with the offending
// position, or PoleError if a division by the zero function occurs.
RationalFunction2 parse_rational_function(const std::string& text);

} // namespace akl
