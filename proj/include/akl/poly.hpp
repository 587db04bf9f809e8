// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

#include "akl/rational.hpp"

namespace akl {

// ---------------------------------------------------------------------------
// PolyS: dense univariate polynomial over Q. Used both for the certificate
// determinant (variable "s") and internally as Q[y] coefficients during
// bivariate gcd computations.
// ---------------------------------------------------------------------------
class PolyS {
  public:
    PolyS() = default;
    explicit PolyS(const Rational& c) { if (c != 0) c_.push_back(c); }
    static PolyS variable();
    static PolyS from_coeffs(std::vector<Rational> coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    Rational coeff(int k) const;
    const Rational& leading_coefficient() const;

    PolyS operator-() const;
    PolyS operator+(const PolyS& o) const;
    PolyS operator-(const PolyS& o) const;
    PolyS operator*(const PolyS& o) const;
    PolyS& operator+=(const PolyS& o) { return *this = *this + o; }
    PolyS& operator-=(const PolyS& o) { return *this = *this - o; }
    PolyS& operator*=(const PolyS& o) { return *this = *this * o; }
    bool operator==(const PolyS& o) const { return c_ == o.c_; }
    bool operator!=(const PolyS& o) const { return !(*this == o); }

    PolyS scaled(const Rational& k) const;
    Rational eval(const Rational& s) const;

    // Quotient/remainder over the field Q; divisor must be nonzero.
    static void divrem(const PolyS& a, const PolyS& b, PolyS* q, PolyS* r);
    // Asserting variant of divrem with zero remainder.
    static PolyS div_exact(const PolyS& a, const PolyS& b);
    // Monic gcd (gcd(0,0) = 0).
    static PolyS gcd(PolyS a, PolyS b);

    std::string to_string(const std::string& var = "s") const;

  private:
    void trim();
    std::vector<Rational> c_; // c_[k] is the coefficient of var^k
};

// ---------------------------------------------------------------------------
// Poly2: sparse bivariate polynomial over Q with graded-lex term order.
// ---------------------------------------------------------------------------
struct Exp2 {
    int dx = 0, dy = 0;
    friend bool operator==(const Exp2& a, const Exp2& b) {
        return a.dx == b.dx && a.dy == b.dy;
    }
};

struct GrlexLess {
    bool operator()(const Exp2& a, const Exp2& b) const {
        const int ta = a.dx + a.dy, tb = b.dx + b.dy;
        if (ta != tb) return ta < tb;
        if (a.dx != b.dx) return a.dx < b.dx;
        return a.dy < b.dy;
    }
};

class Poly2 {
  public:
    using TermMap = std::map<Exp2, Rational, GrlexLess>;

    Poly2() = default;
    static Poly2 constant(const Rational& c);
    static Poly2 x();
    static Poly2 y();
    static Poly2 monomial(int dx, int dy, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    int total_degree() const; // -1 for the zero polynomial
    const TermMap& terms() const { return terms_; }

    // grlex-leading data; polynomial must be nonzero
    const Exp2& leading_exponent() const;
    const Rational& leading_coefficient() const;

    Poly2 operator-() const;
    Poly2 operator+(const Poly2& o) const;
    Poly2 operator-(const Poly2& o) const;
    Poly2 operator*(const Poly2& o) const;
    Poly2& operator+=(const Poly2& o);
    Poly2& operator-=(const Poly2& o);
    Poly2& operator*=(const Poly2& o) { return *this = *this * o; }
    bool operator==(const Poly2& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly2& o) const { return !(*this == o); }

    Poly2 scaled(const Rational& k) const;
    Poly2 dx() const; // partial derivative in x
    Poly2 dy() const;

    Rational eval(const Rational& x, const Rational& y) const;
    double eval_double(double x, double y) const;

    // p(x + x0, y + y0): Taylor shift to a new base point.
    Poly2 shifted(const Rational& x0, const Rational& y0) const;
    // Drop all terms of total degree > n.
    Poly2 truncated(int n) const;

    std::string to_string() const;

    void add_term(int dx, int dy, const Rational& c); // merges, drops zeros

  private:
    TermMap terms_;
};

// Monic (grlex-leading coefficient 1) gcd over Q[x,y]; gcd(0,0) = 0.
Poly2 poly2_gcd(const Poly2& a, const Poly2& b);
// Exact division; throws CertificateError if b does not divide a.
Poly2 poly2_div_exact(const Poly2& a, const Poly2& b);

// Power-series helpers around the origin, truncated at total degree <= order.
// series_inverse requires d(0,0) != 0.
Poly2 series_inverse(const Poly2& d, int order);
Poly2 series_mul(const Poly2& a, const Poly2& b, int order);

} // namespace akl
