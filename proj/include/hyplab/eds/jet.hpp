#pragma once

#include <array>
#include <cmath>

namespace hyplab::eds {

// Second-order forward-mode dual number over at most kMaxVars chart
// coordinates: value, gradient, and (symmetric) Hessian.  Two orders are
// enough because the engine never applies d more than twice.
struct Jet2 {
    static constexpr int kMaxVars = 6;

    double v = 0.0;
    std::array<double, kMaxVars> g{};
    std::array<std::array<double, kMaxVars>, kMaxVars> h{};

    Jet2() = default;
    Jet2(double value) : v(value) {} // NOLINT: implicit constants are convenient

    static Jet2 variable(double value, int slot) {
        Jet2 j(value);
        j.g[slot] = 1.0;
        return j;
    }

    Jet2 operator-() const {
        Jet2 r;
        r.v = -v;
        for (int i = 0; i < kMaxVars; ++i) {
            r.g[i] = -g[i];
            for (int k = 0; k < kMaxVars; ++k) r.h[i][k] = -h[i][k];
        }
        return r;
    }

    friend Jet2 operator+(const Jet2& a, const Jet2& b) {
        Jet2 r;
        r.v = a.v + b.v;
        for (int i = 0; i < kMaxVars; ++i) {
            r.g[i] = a.g[i] + b.g[i];
            for (int k = 0; k < kMaxVars; ++k) r.h[i][k] = a.h[i][k] + b.h[i][k];
        }
        return r;
    }

    friend Jet2 operator-(const Jet2& a, const Jet2& b) { return a + (-b); }

    friend Jet2 operator*(const Jet2& a, const Jet2& b) {
        Jet2 r;
        r.v = a.v * b.v;
        for (int i = 0; i < kMaxVars; ++i) r.g[i] = a.v * b.g[i] + b.v * a.g[i];
        for (int i = 0; i < kMaxVars; ++i)
            for (int k = 0; k < kMaxVars; ++k)
                r.h[i][k] = a.v * b.h[i][k] + b.v * a.h[i][k] + a.g[i] * b.g[k] + a.g[k] * b.g[i];
        return r;
    }

    Jet2 reciprocal() const {
        Jet2 r;
        const double inv = 1.0 / v;
        const double inv2 = inv * inv;
        const double inv3 = inv2 * inv;
        r.v = inv;
        for (int i = 0; i < kMaxVars; ++i) r.g[i] = -g[i] * inv2;
        for (int i = 0; i < kMaxVars; ++i)
            for (int k = 0; k < kMaxVars; ++k)
                r.h[i][k] = -h[i][k] * inv2 + 2.0 * g[i] * g[k] * inv3;
        return r;
    }

    friend Jet2 operator/(const Jet2& a, const Jet2& b) { return a * b.reciprocal(); }

    friend Jet2 operator+(double a, const Jet2& b) { return Jet2(a) + b; }
    friend Jet2 operator-(double a, const Jet2& b) { return Jet2(a) - b; }
    friend Jet2 operator*(double a, const Jet2& b) { return Jet2(a) * b; }
    friend Jet2 operator/(double a, const Jet2& b) { return Jet2(a) / b; }
};

inline Jet2 pow2(const Jet2& a) { return a * a; }
inline Jet2 pow3(const Jet2& a) { return a * a * a; }
inline Jet2 pow4(const Jet2& a) { return pow2(a) * pow2(a); }

} // namespace hyplab::eds
