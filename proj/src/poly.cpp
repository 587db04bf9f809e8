// SPDX-License-Identifier: Apache-2.0
#include "akl/poly.hpp"

#include <algorithm>
#include <sstream>

#include "akl/errors.hpp"

namespace akl {

// ---------------------------------------------------------------------------
// PolyS
// ---------------------------------------------------------------------------

PolyS PolyS::variable() {
    PolyS p;
    p.c_ = {Rational(0), Rational(1)};
    return p;
}

PolyS PolyS::from_coeffs(std::vector<Rational> coeffs) {
    PolyS p;
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

Rational PolyS::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<size_t>(k)];
}

const Rational& PolyS::leading_coefficient() const {
    if (is_zero()) throw DomainError("leading coefficient of the zero polynomial");
    return c_.back();
}

void PolyS::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyS PolyS::operator-() const {
    PolyS r(*this);
    for (auto& v : r.c_) v = -v;
    return r;
}

PolyS PolyS::operator+(const PolyS& o) const {
    PolyS r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
    r.trim();
    return r;
}

PolyS PolyS::operator-(const PolyS& o) const { return *this + (-o); }

PolyS PolyS::operator*(const PolyS& o) const {
    if (is_zero() || o.is_zero()) return PolyS();
    PolyS r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    r.trim();
    return r;
}

PolyS PolyS::scaled(const Rational& k) const {
    if (k == 0) return PolyS();
    PolyS r(*this);
    for (auto& v : r.c_) v *= k;
    return r;
}

Rational PolyS::eval(const Rational& s) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * s + *it;
    return acc;
}

void PolyS::divrem(const PolyS& a, const PolyS& b, PolyS* q, PolyS* r) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    PolyS rem = a, quot;
    quot.c_.assign(std::max<int>(a.degree() - b.degree() + 1, 0), Rational(0));
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        const int k = rem.degree() - b.degree();
        const Rational f = rem.leading_coefficient() / b.leading_coefficient();
        quot.c_[static_cast<size_t>(k)] += f;
        for (int i = 0; i <= b.degree(); ++i)
            rem.c_[static_cast<size_t>(i + k)] -= f * b.c_[static_cast<size_t>(i)];
        rem.trim();
    }
    quot.trim();
    if (q) *q = quot;
    if (r) *r = rem;
}

PolyS PolyS::div_exact(const PolyS& a, const PolyS& b) {
    PolyS q, r;
    divrem(a, b, &q, &r);
    if (!r.is_zero()) throw CertificateError("inexact univariate polynomial division");
    return q;
}

PolyS PolyS::gcd(PolyS a, PolyS b) {
    while (!b.is_zero()) {
        PolyS r;
        divrem(a, b, nullptr, &r);
        a = b;
        b = r;
    }
    if (!a.is_zero()) a = a.scaled(Rational(1) / a.leading_coefficient());
    return a;
}

std::string PolyS::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeff(k);
        if (c == 0) continue;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        const bool unit = (mag == 1) && k > 0;
        if (!unit) out << rational_to_string(mag);
        if (k > 0) {
            if (!unit) out << "*";
            out << var;
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Poly2
// ---------------------------------------------------------------------------

Poly2 Poly2::constant(const Rational& c) {
    Poly2 p;
    p.add_term(0, 0, c);
    return p;
}

Poly2 Poly2::x() { return monomial(1, 0, Rational(1)); }
Poly2 Poly2::y() { return monomial(0, 1, Rational(1)); }

Poly2 Poly2::monomial(int dx, int dy, const Rational& c) {
    Poly2 p;
    p.add_term(dx, dy, c);
    return p;
}

void Poly2::add_term(int dx, int dy, const Rational& c) {
    if (c == 0) return;
    const Exp2 e{dx, dy};
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool Poly2::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == Exp2{0, 0});
}

Rational Poly2::constant_term() const {
    const auto it = terms_.find(Exp2{0, 0});
    return it == terms_.end() ? Rational(0) : it->second;
}

int Poly2::total_degree() const {
    if (terms_.empty()) return -1;
    const Exp2& lead = terms_.rbegin()->first;
    return lead.dx + lead.dy;
}

const Exp2& Poly2::leading_exponent() const {
    if (terms_.empty()) throw DomainError("leading exponent of the zero polynomial");
    return terms_.rbegin()->first;
}

const Rational& Poly2::leading_coefficient() const {
    if (terms_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return terms_.rbegin()->second;
}

Poly2 Poly2::operator-() const {
    Poly2 r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Poly2& Poly2::operator+=(const Poly2& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.dx, e.dy, c);
    return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.dx, e.dy, -c);
    return *this;
}

Poly2 Poly2::operator+(const Poly2& o) const {
    Poly2 r(*this);
    r += o;
    return r;
}

Poly2 Poly2::operator-(const Poly2& o) const {
    Poly2 r(*this);
    r -= o;
    return r;
}

Poly2 Poly2::operator*(const Poly2& o) const {
    Poly2 r;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_)
            r.add_term(ea.dx + eb.dx, ea.dy + eb.dy, ca * cb);
    return r;
}

Poly2 Poly2::scaled(const Rational& k) const {
    Poly2 r;
    if (k == 0) return r;
    for (const auto& [e, c] : terms_) r.add_term(e.dx, e.dy, c * k);
    return r;
}

Poly2 Poly2::dx() const {
    Poly2 r;
    for (const auto& [e, c] : terms_)
        if (e.dx > 0) r.add_term(e.dx - 1, e.dy, c * e.dx);
    return r;
}

Poly2 Poly2::dy() const {
    Poly2 r;
    for (const auto& [e, c] : terms_)
        if (e.dy > 0) r.add_term(e.dx, e.dy - 1, c * e.dy);
    return r;
}

Rational Poly2::eval(const Rational& x, const Rational& y) const {
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < e.dx; ++i) t *= x;
        for (int i = 0; i < e.dy; ++i) t *= y;
        acc += t;
    }
    return acc;
}

double Poly2::eval_double(double x, double y) const {
    double acc = 0.0;
    for (const auto& [e, c] : terms_) {
        double t = to_double(c);
        for (int i = 0; i < e.dx; ++i) t *= x;
        for (int i = 0; i < e.dy; ++i) t *= y;
        acc += t;
    }
    return acc;
}

Poly2 Poly2::shifted(const Rational& x0, const Rational& y0) const {
    // Expand (x+x0)^dx (y+y0)^dy term by term with binomial coefficients.
    Poly2 r;
    for (const auto& [e, c] : terms_) {
        std::vector<Rational> bx(static_cast<size_t>(e.dx) + 1), by(static_cast<size_t>(e.dy) + 1);
        bx[static_cast<size_t>(e.dx)] = Rational(1);
        for (int i = e.dx - 1; i >= 0; --i) bx[static_cast<size_t>(i)] = bx[static_cast<size_t>(i + 1)] * x0;
        by[static_cast<size_t>(e.dy)] = Rational(1);
        for (int j = e.dy - 1; j >= 0; --j) by[static_cast<size_t>(j)] = by[static_cast<size_t>(j + 1)] * y0;
        Integer binx = 1;
        for (int i = 0; i <= e.dx; ++i) {
            if (i > 0) binx = binx * (e.dx - i + 1) / i;
            Integer biny = 1;
            for (int j = 0; j <= e.dy; ++j) {
                if (j > 0) biny = biny * (e.dy - j + 1) / j;
                r.add_term(i, j, c * Rational(binx * biny) * bx[static_cast<size_t>(i)] * by[static_cast<size_t>(j)]);
            }
        }
    }
    return r;
}

Poly2 Poly2::truncated(int n) const {
    Poly2 r;
    for (const auto& [e, c] : terms_)
        if (e.dx + e.dy <= n) r.add_term(e.dx, e.dy, c);
    return r;
}

std::string Poly2::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Exp2& e = it->first;
        const Rational& c = it->second;
        const Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        const bool has_var = e.dx > 0 || e.dy > 0;
        const bool unit = (mag == 1) && has_var;
        if (!unit) out << rational_to_string(mag);
        if (e.dx > 0) {
            if (!unit) out << "*";
            out << "x";
            if (e.dx > 1) out << "^" << e.dx;
        }
        if (e.dy > 0) {
            if (!unit || e.dx > 0) out << "*";
            out << "y";
            if (e.dy > 1) out << "^" << e.dy;
        }
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Bivariate gcd via the primitive pseudo-remainder sequence over Q[y][x].
// ---------------------------------------------------------------------------

namespace {

// Poly2 viewed as a polynomial in x whose coefficients live in Q[y].
using XPoly = std::vector<PolyS>; // index = power of x

XPoly to_xpoly(const Poly2& p) {
    int degx = 0;
    for (const auto& [e, c] : p.terms()) degx = std::max(degx, e.dx);
    std::vector<std::vector<Rational>> cs(static_cast<size_t>(degx) + 1);
    for (const auto& [e, c] : p.terms()) {
        auto& col = cs[static_cast<size_t>(e.dx)];
        if (static_cast<int>(col.size()) <= e.dy) col.resize(static_cast<size_t>(e.dy) + 1, Rational(0));
        col[static_cast<size_t>(e.dy)] = c;
    }
    XPoly r(cs.size());
    for (size_t i = 0; i < cs.size(); ++i) r[i] = PolyS::from_coeffs(std::move(cs[i]));
    while (!r.empty() && r.back().is_zero()) r.pop_back();
    return r;
}

Poly2 from_xpoly(const XPoly& p) {
    Poly2 r;
    for (size_t i = 0; i < p.size(); ++i)
        for (int k = 0; k <= p[i].degree(); ++k)
            r.add_term(static_cast<int>(i), k, p[i].coeff(k));
    return r;
}

int deg(const XPoly& p) { return static_cast<int>(p.size()) - 1; }

void trim(XPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

XPoly scale(const XPoly& p, const PolyS& f) {
    XPoly r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = p[i] * f;
    trim(r);
    return r;
}

XPoly sub(const XPoly& a, const XPoly& b) {
    XPoly r = a;
    if (r.size() < b.size()) r.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

// Pseudo-remainder of a by b (deg b >= 0): lc(b)^k * a mod b for suitable k.
XPoly prem(XPoly a, const XPoly& b) {
    const int db = deg(b);
    const PolyS& lb = b.back();
    while (!a.empty() && deg(a) >= db) {
        const int k = deg(a) - db;
        const PolyS la = a.back();
        a = scale(a, lb);
        XPoly shifted(static_cast<size_t>(k), PolyS());
        for (const PolyS& c : b) shifted.push_back(c * la);
        a = sub(a, shifted); // leading terms la*lb cancel exactly
    }
    return a;
}

PolyS content(const XPoly& p) {
    PolyS g;
    for (const PolyS& c : p) g = PolyS::gcd(g, c);
    return g;
}

XPoly primitive_part(const XPoly& p, const PolyS& cont) {
    if (p.empty()) return p;
    XPoly r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = PolyS::div_exact(p[i], cont);
    return r;
}

} // namespace

Poly2 poly2_gcd(const Poly2& a, const Poly2& b) {
    if (a.is_zero() && b.is_zero()) return Poly2();
    if (a.is_zero() || b.is_zero()) {
        const Poly2& nz = a.is_zero() ? b : a;
        return nz.scaled(Rational(1) / nz.leading_coefficient());
    }
    XPoly pa = to_xpoly(a), pb = to_xpoly(b);
    const PolyS ca = content(pa), cb = content(pb);
    const PolyS cg = PolyS::gcd(ca, cb);
    pa = primitive_part(pa, ca);
    pb = primitive_part(pb, cb);
    if (deg(pa) < deg(pb)) std::swap(pa, pb);
    while (!pb.empty()) {
        if (deg(pb) == 0) { // coprime in x; common part is cg only
            pa = {PolyS(Rational(1))};
            break;
        }
        XPoly r = prem(pa, pb);
        pa = pb;
        pb = r.empty() ? r : primitive_part(r, content(r));
    }
    XPoly g(static_cast<size_t>(deg(pa)) + 1);
    for (size_t i = 0; i < pa.size(); ++i) g[i] = pa[i] * cg;
    Poly2 result = from_xpoly(g);
    return result.scaled(Rational(1) / result.leading_coefficient());
}

Poly2 poly2_div_exact(const Poly2& a, const Poly2& b) {
    if (b.is_zero()) throw DomainError("bivariate polynomial division by zero");
    if (a.is_zero()) return Poly2();
    XPoly pa = to_xpoly(a);
    const XPoly pb = to_xpoly(b);
    XPoly q(static_cast<size_t>(std::max(deg(pa) - deg(pb) + 1, 0)));
    while (!pa.empty() && deg(pa) >= deg(pb)) {
        const int k = deg(pa) - deg(pb);
        const PolyS f = PolyS::div_exact(pa.back(), pb.back());
        q[static_cast<size_t>(k)] += f;
        XPoly shifted(static_cast<size_t>(k), PolyS());
        for (const PolyS& c : pb) shifted.push_back(c * f);
        pa = sub(pa, shifted);
    }
    if (!pa.empty()) throw CertificateError("inexact bivariate polynomial division");
    return from_xpoly(q);
}

Poly2 series_inverse(const Poly2& d, int order) {
    const Rational c0 = d.constant_term();
    if (c0 == 0) throw PoleError("series inverse of a polynomial vanishing at the base point: " + d.to_string());
    Poly2 u = Poly2::constant(Rational(1) / c0);
    const Poly2 two = Poly2::constant(Rational(2));
    // Newton iteration u <- u(2 - d u); doubles correct order each pass.
    for (int correct = 1; correct <= order; correct *= 2)
        u = series_mul(u, two - series_mul(d, u, order), order);
    return u;
}

Poly2 series_mul(const Poly2& a, const Poly2& b, int order) {
    Poly2 r;
    for (const auto& [ea, ca] : a.terms()) {
        const int da = ea.dx + ea.dy;
        if (da > order) continue;
        for (const auto& [eb, cb] : b.terms()) {
            if (da + eb.dx + eb.dy > order) continue;
            r.add_term(ea.dx + eb.dx, ea.dy + eb.dy, ca * cb);
        }
    }
    return r;
}

} // namespace akl
