// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

#include "akl/errors.hpp"

namespace akl {

struct Vec2 {
    double x = 0.0, y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double k, Vec2 v) { return {k * v.x, k * v.y}; }
inline double norm_inf(Vec2 v) { return std::max(std::fabs(v.x), std::fabs(v.y)); }

struct Mat2 {
    // m[row][col]
    double m[2][2] = {{0.0, 0.0}, {0.0, 0.0}};

    static Mat2 identity() { return {{{1.0, 0.0}, {0.0, 1.0}}}; }
    double det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

    Mat2 operator*(const Mat2& o) const {
        Mat2 r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j];
        return r;
    }
    Vec2 operator*(Vec2 v) const {
        return {m[0][0] * v.x + m[0][1] * v.y, m[1][0] * v.x + m[1][1] * v.y};
    }
    Mat2 operator+(const Mat2& o) const {
        Mat2 r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r.m[i][j] = m[i][j] + o.m[i][j];
        return r;
    }
    Mat2 operator-(const Mat2& o) const {
        Mat2 r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r.m[i][j] = m[i][j] - o.m[i][j];
        return r;
    }
    Mat2 scaled(double k) const {
        Mat2 r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r.m[i][j] = k * m[i][j];
        return r;
    }
    Mat2 inverse() const {
        const double d = det();
        if (std::fabs(d) < 1e-12)
            throw DomainError("singular 2x2 matrix inversion");
        Mat2 r;
        r.m[0][0] = m[1][1] / d;
        r.m[0][1] = -m[0][1] / d;
        r.m[1][0] = -m[1][0] / d;
        r.m[1][1] = m[0][0] / d;
        return r;
    }
    double norm_inf() const {
        double n = 0.0;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) n = std::max(n, std::fabs(m[i][j]));
        return n;
    }
};

} // namespace akl
