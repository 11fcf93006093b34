#pragma once

#include "hyplab/eds/jet.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hyplab::eds {

// Global coframe on the 8-dimensional unitary frame bundle F, in this order,
// optionally extended by coordinate differentials of the system chart.
//
//   0: w1   1: w2   2: w3   3: w4   4: w21   5: w41   6: w42   7: w43
//
// with the linear relations w31 = w42 and w32 = -w41 already eliminated.
inline constexpr int kW1 = 0, kW2 = 1, kW3 = 2, kW4 = 3;
inline constexpr int kW21 = 4, kW41 = 5, kW42 = 6, kW43 = 7;
inline constexpr int kBundleDim = 8;

// Scalars living on states.  C, Sigma, R are parameters (never chart
// coordinates); the others may be coordinates or parameters per system.
enum class Var : int { Alpha = 0, Beta, Lambda, Mu, Nu, P, Rho, C, Sigma, R, Count };
inline constexpr int kNumVars = static_cast<int>(Var::Count);

struct StatePoint {
    std::array<double, kNumVars> values{};

    double& operator[](Var v) { return values[static_cast<int>(v)]; }
    double operator[](Var v) const { return values[static_cast<int>(v)]; }
};

// A chart lists which scalars carry differentials in the extended coframe;
// coordinate i gets basis label kBundleDim + i and Jet2 slot i.
struct Chart {
    std::vector<Var> coords;

    int label_of(Var v) const {
        for (std::size_t i = 0; i < coords.size(); ++i)
            if (coords[i] == v) return kBundleDim + static_cast<int>(i);
        return -1;
    }
    int dimension() const { return kBundleDim + static_cast<int>(coords.size()); }
};

// Evaluation context: every scalar as a Jet2, chart coordinates seeded with
// their gradient slots.
struct EvalCtx {
    std::array<Jet2, kNumVars> vars{};
    const Chart* chart = nullptr;

    const Jet2& operator[](Var v) const { return vars[static_cast<int>(v)]; }

    static EvalCtx make(const StatePoint& s, const Chart& chart) {
        EvalCtx ctx;
        ctx.chart = &chart;
        for (int i = 0; i < kNumVars; ++i) ctx.vars[i] = Jet2(s.values[i]);
        for (std::size_t i = 0; i < chart.coords.size(); ++i) {
            const int vi = static_cast<int>(chart.coords[i]);
            ctx.vars[vi] = Jet2::variable(s.values[vi], static_cast<int>(i));
        }
        return ctx;
    }
};

using ScalarField = std::function<Jet2(const EvalCtx&)>;

inline ScalarField sf_const(double v) {
    return [v](const EvalCtx&) { return Jet2(v); };
}
inline ScalarField sf_var(Var v) {
    return [v](const EvalCtx& ctx) { return ctx[v]; };
}

std::string label_name(int label, const Chart& chart);

} // namespace hyplab::eds
