// SPDX-License-Identifier: Apache-2.0
#include "akl/vector_field.hpp"

#include <cmath>
#include <sstream>

namespace akl {

double FieldTerm::eval(double x, double y) const {
    double v = coef;
    for (int i = 0; i < px; ++i) v *= x;
    for (int i = 0; i < py; ++i) v *= y;
    if (expk != 0.0) v *= std::exp(expk * y);
    switch (trig) {
        case Trig::None: break;
        case Trig::Cos: v *= std::cos(freq * y); break;
        case Trig::Sin: v *= std::sin(freq * y); break;
    }
    return v;
}

std::vector<FieldTerm> FieldTerm::ddx() const {
    if (px == 0 || coef == 0.0) return {};
    FieldTerm t = *this;
    t.coef *= px;
    t.px -= 1;
    return {t};
}

std::vector<FieldTerm> FieldTerm::ddy() const {
    std::vector<FieldTerm> out;
    if (coef == 0.0) return out;
    if (py > 0) {
        FieldTerm t = *this;
        t.coef *= py;
        t.py -= 1;
        out.push_back(t);
    }
    if (expk != 0.0) {
        FieldTerm t = *this;
        t.coef *= expk;
        out.push_back(t);
    }
    if (trig == Trig::Cos) {
        FieldTerm t = *this;
        t.trig = Trig::Sin;
        t.coef *= -freq;
        out.push_back(t);
    } else if (trig == Trig::Sin) {
        FieldTerm t = *this;
        t.trig = Trig::Cos;
        t.coef *= freq;
        out.push_back(t);
    }
    return out;
}

std::string FieldTerm::to_string() const {
    std::ostringstream out;
    bool leading = true;
    auto star = [&]() {
        if (!leading) out << "*";
        leading = false;
    };
    if (coef != 1.0 || (px == 0 && py == 0 && expk == 0.0 && trig == Trig::None)) {
        out << coef;
        leading = false;
    }
    if (px > 0) {
        star();
        out << "x";
        if (px > 1) out << "^" << px;
    }
    if (py > 0) {
        star();
        out << "y";
        if (py > 1) out << "^" << py;
    }
    if (expk != 0.0) {
        star();
        out << "exp(" << expk << "*y)";
    }
    if (trig == Trig::Cos) {
        star();
        out << "cos(" << freq << "*y)";
    } else if (trig == Trig::Sin) {
        star();
        out << "sin(" << freq << "*y)";
    }
    return out.str();
}

Vec2 VectorFieldCF::eval(Vec2 p) const {
    Vec2 v{0.0, 0.0};
    for (const auto& t : comp_x) v.x += t.eval(p.x, p.y);
    for (const auto& t : comp_y) v.y += t.eval(p.x, p.y);
    return v;
}

Mat2 VectorFieldCF::jacobian(Vec2 p) const {
    Mat2 j;
    auto acc = [&](const std::vector<FieldTerm>& comp, int row) {
        for (const auto& t : comp) {
            for (const auto& d : t.ddx()) j.m[row][0] += d.eval(p.x, p.y);
            for (const auto& d : t.ddy()) j.m[row][1] += d.eval(p.x, p.y);
        }
    };
    acc(comp_x, 0);
    acc(comp_y, 1);
    return j;
}

VectorFieldCF VectorFieldCF::scaled(double k) const {
    VectorFieldCF r = *this;
    for (auto& t : r.comp_x) t.coef *= k;
    for (auto& t : r.comp_y) t.coef *= k;
    return r;
}

VectorFieldCF VectorFieldCF::operator+(const VectorFieldCF& o) const {
    VectorFieldCF r = *this;
    r.comp_x.insert(r.comp_x.end(), o.comp_x.begin(), o.comp_x.end());
    r.comp_y.insert(r.comp_y.end(), o.comp_y.begin(), o.comp_y.end());
    return r;
}

std::string VectorFieldCF::to_string() const {
    auto comp_str = [](const std::vector<FieldTerm>& c) {
        std::string s;
        bool any = false;
        for (const auto& t : c) {
            if (t.coef == 0.0) continue;
            if (any) s += " + ";
            s += t.to_string();
            any = true;
        }
        return any ? s : std::string();
    };
    const std::string sx = comp_str(comp_x), sy = comp_str(comp_y);
    std::string out;
    if (!sx.empty()) out += "(" + sx + ") d/dx";
    if (!sy.empty()) {
        if (!out.empty()) out += " + ";
        out += "(" + sy + ") d/dy";
    }
    return out.empty() ? "0" : out;
}

NumericMap VectorFieldCF::flow(double tau, int steps) const {
    const VectorFieldCF field = *this;
    // Integrate dp/dt = W(p), dJ/dt = DW(p(t)) J from J = I.
    auto integrate = [field, tau, steps](Vec2 p0, bool with_jac) {
        struct Full {
            Vec2 p;
            Mat2 J;
        };
        auto rhs = [&](const Full& s) {
            Full d;
            d.p = field.eval(s.p);
            d.J = field.jacobian(s.p) * s.J;
            return d;
        };
        Full s{p0, Mat2::identity()};
        const double h = tau / steps;
        for (int n = 0; n < steps; ++n) {
            const Full k1 = rhs(s);
            const Full s2{s.p + 0.5 * h * k1.p, s.J + k1.J.scaled(0.5 * h)};
            const Full k2 = rhs(s2);
            const Full s3{s.p + 0.5 * h * k2.p, s.J + k2.J.scaled(0.5 * h)};
            const Full k3 = rhs(s3);
            const Full s4{s.p + h * k3.p, s.J + k3.J.scaled(h)};
            const Full k4 = rhs(s4);
            s.p = s.p + (h / 6.0) * (k1.p + 2.0 * k2.p + 2.0 * k3.p + k4.p);
            s.J = s.J + (k1.J + k2.J.scaled(2.0) + k3.J.scaled(2.0) + k4.J).scaled(h / 6.0);
        }
        (void)with_jac;
        return s;
    };
    NumericMap map;
    map.tag = "flow(" + to_string() + ", t=" + std::to_string(tau) + ")";
    map.forward = [integrate](Vec2 p) { return integrate(p, false).p; };
    map.jacobian = [integrate](Vec2 p) { return integrate(p, true).J; };
    return map;
}

VectorFieldCF VectorFieldCF::zero() { return {}; }

VectorFieldCF VectorFieldCF::x_dx() {
    VectorFieldCF f;
    f.comp_x.push_back({1.0, 1, 0, 0.0, FieldTerm::Trig::None, 0.0});
    return f;
}

VectorFieldCF VectorFieldCF::dy() {
    VectorFieldCF f;
    f.comp_y.push_back({1.0, 0, 0, 0.0, FieldTerm::Trig::None, 0.0});
    return f;
}

VectorFieldCF VectorFieldCF::h_dx(double coef, int ypow, double expk,
                                  FieldTerm::Trig trig, double freq) {
    VectorFieldCF f;
    f.comp_x.push_back({coef, 0, ypow, expk, trig, freq});
    return f;
}

VectorFieldCF VectorFieldCF::poly_dx(const std::vector<FieldTerm>& terms) {
    VectorFieldCF f;
    f.comp_x = terms;
    return f;
}

Vec2 lie_bracket_value(const VectorFieldCF& w1, const VectorFieldCF& w2, Vec2 p) {
    const Vec2 v1 = w1.eval(p), v2 = w2.eval(p);
    const Mat2 j1 = w1.jacobian(p), j2 = w2.jacobian(p);
    return j2 * v1 - j1 * v2;
}

} // namespace akl
