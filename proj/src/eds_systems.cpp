#include "hyplab/eds/systems.hpp"

#include <cmath>
#include <stdexcept>

namespace hyplab::eds {

namespace {

FormExpr B(int label) { return FormExpr::basis(label); }
FormExpr Bs(ScalarField f, int label) { return FormExpr::basis_scaled(std::move(f), label); }

// Differential of a chart coordinate as a basis 1-form.
FormExpr D(Var v, const Chart& chart) {
    const int label = chart.label_of(v);
    if (label < 0) throw std::logic_error("coordinate has no differential in this chart");
    return B(label);
}

constexpr double kDenomFloor = 0.05; // conditioning floor for sampled denominators

} // namespace

// ---------------------------------------------------------------- Hopf ----

PfaffianSystem hopf_system() {
    PfaffianSystem sys;
    sys.id = "hopf";
    sys.chart = Chart{};
    sys.generators = {
        B(kW4),
        B(kW43) - Bs(sf_var(Var::Alpha), kW3),
    };
    sys.admissible = [](const StatePoint& s) {
        const double a = s[Var::Alpha], c = s[Var::C];
        return c != 0.0 && std::abs(a * a + 4.0 * c) >= kDenomFloor;
    };
    sys.sample = [](Rng& rng) {
        StatePoint s;
        for (int tries = 0; tries < 1000; ++tries) {
            s[Var::C] = rng.coin() ? 1.0 : -1.0;
            s[Var::Alpha] = rng.uniform(-2.0, 2.0);
            if (std::abs(s[Var::Alpha] * s[Var::Alpha] + 4.0 * s[Var::C]) >= kDenomFloor)
                return s;
        }
        throw std::runtime_error("hopf_system: sampling failed");
    };
    return sys;
}

FormExpr hopf_omega1() {
    return -(wedge(B(kW41), B(kW1)) + wedge(B(kW42), B(kW2)));
}

FormExpr hopf_omega2() {
    const ScalarField a = sf_var(Var::Alpha);
    const ScalarField c = sf_var(Var::C);
    return wedge(B(kW41), B(kW42)).scaled(2.0) - wedge(Bs(c, kW1), B(kW2)).scaled(2.0) +
           wedge(Bs(a, kW42), B(kW1)) - wedge(Bs(a, kW41), B(kW2));
}

// ------------------------------------------------------------- case (i) ----

ScalarField case_i_alpha() {
    return [](const EvalCtx& s) {
        const Jet2 b = s[Var::Beta], n = s[Var::Nu], c = s[Var::C];
        return b * b * (n * n - 4.0 * c) / (4.0 * c * n);
    };
}

PfaffianSystem case_i_system() {
    PfaffianSystem sys;
    sys.id = "case_i";
    sys.chart = Chart{{Var::Beta, Var::Nu}};
    sys.generators = {
        B(kW4),
        B(kW41) - Bs(sf_var(Var::Beta), kW3),
        B(kW42) - Bs(sf_var(Var::Nu), kW2),
        B(kW43) - Bs(sf_var(Var::Beta), kW1) - Bs(case_i_alpha(), kW3),
    };
    sys.admissible = [](const StatePoint& s) {
        const double b = s[Var::Beta], n = s[Var::Nu], c = s[Var::C];
        return c != 0.0 && std::abs(b) >= kDenomFloor && std::abs(n) >= kDenomFloor &&
               std::abs(n * n + 4.0 * c) >= kDenomFloor;
    };
    sys.sample = [](Rng& rng) {
        StatePoint s;
        for (int tries = 0; tries < 1000; ++tries) {
            s[Var::C] = rng.coin() ? 1.0 : -1.0;
            s[Var::Beta] = rng.uniform_away_from_zero(0.3, 1.5);
            s[Var::Nu] = rng.uniform_away_from_zero(0.3, 1.5);
            if (std::abs(s[Var::Nu] * s[Var::Nu] + 4.0 * s[Var::C]) < kDenomFloor) continue;
            // keep the derived alpha for reference
            const double b = s[Var::Beta], n = s[Var::Nu], c = s[Var::C];
            s[Var::Alpha] = b * b * (n * n - 4.0 * c) / (4.0 * c * n);
            return s;
        }
        throw std::runtime_error("case_i_system: sampling failed");
    };
    return sys;
}

namespace {

// The three 1-forms of the case (i) tableau.
FormExpr case_i_pi1() {
    return Bs([](const EvalCtx& s) { return -s[Var::Nu]; }, kW21) +
           Bs([](const EvalCtx& s) { return 2.0 * s[Var::Beta] * s[Var::Nu]; }, kW1) +
           Bs([](const EvalCtx& s) { return -(s[Var::Beta] * s[Var::Beta] + s[Var::C]); }, kW3);
}

FormExpr case_i_pi2(const Chart& chart) {
    return D(Var::Beta, chart) -
           Bs(
               [](const EvalCtx& s) {
                   const Jet2 b = s[Var::Beta], n = s[Var::Nu], c = s[Var::C];
                   return (b * b * (n * n + 4.0 * c) + 8.0 * c * c) / (4.0 * c);
               },
               kW2);
}

FormExpr case_i_pi3(const Chart& chart) {
    return D(Var::Nu, chart) +
           Bs(
               [](const EvalCtx& s) {
                   const Jet2 b = s[Var::Beta], n = s[Var::Nu], c = s[Var::C];
                   return n * (b * b * n * n * (n * n - 2.0 * c) +
                               8.0 * c * c * (4.0 * n * n - 3.0 * c)) /
                          (2.0 * c * b * (n * n + 4.0 * c));
               },
               kW2);
}

} // namespace

// ------------------------------------------------------------ case (ii) ----

namespace {

Jet2 case_ii_Z(const EvalCtx& s) {
    const Jet2 b = s[Var::Beta], n = s[Var::Nu], c = s[Var::C], sg = s[Var::Sigma];
    const Jet2 n2 = n * n;
    const Jet2 n4 = n2 * n2;
    const Jet2 first = 4.0 * c * b * b * (n4 + 4.0 * (c - sg) * n2 - 4.0 * c * sg + sg * sg) /
                       ((n2 + sg) * (n2 + 4.0 * c) * (4.0 * c - sg));
    const Jet2 second = ((c + sg) * n4 + (4.0 * c * c + 20.0 * c * sg + sg * sg) * n2 +
                         3.0 * c * sg * (sg - 4.0 * c)) /
                        (n2 * (n2 + 4.0 * c));
    return first + second;
}

Jet2 case_ii_P(const EvalCtx& s) {
    const Jet2 b = s[Var::Beta], n = s[Var::Nu], c = s[Var::C], sg = s[Var::Sigma];
    const Jet2 n2 = n * n;
    return b * b * (n2 * n2 + (4.0 * c + 2.0 * sg) * n2 + sg * sg - 4.0 * c * sg) /
           (n * (n2 + sg));
}

Jet2 case_ii_Q(const EvalCtx& s) {
    const Jet2 n2 = s[Var::Nu] * s[Var::Nu];
    return 2.0 * s[Var::Beta] * (n2 + s[Var::Sigma] - 4.0 * s[Var::C]);
}

Jet2 case_ii_R(const EvalCtx& s) {
    const Jet2 n = s[Var::Nu];
    return (s[Var::Sigma] - 4.0 * s[Var::C]) * (n * n + s[Var::Sigma]) / n;
}

// pi_1 ... pi_4; alpha and dalpha come from the supplied field, so the same
// definitions serve both the free chart and the locus chart.
FormExpr case_ii_pi1(const Chart& chart, const ScalarField& alpha) {
    return D(Var::Nu, chart) -
           Bs(
               [alpha](const EvalCtx& s) {
                   const Jet2 b = s[Var::Beta], n = s[Var::Nu], c = s[Var::C],
                              sg = s[Var::Sigma];
                   const Jet2 z = case_ii_Z(s);
                   return (b * b * n * (n * n - 2.0 * sg) +
                           (n * n + sg) * ((c - z) * n + sg * (n - alpha(s)))) /
                          (sg * b);
               },
               kW2);
}

// The w1 coefficient is (c - beta^2 - Z), not (beta^2 - c - Z): the tableau
// identity pins the sign, and every row closes with this choice.
FormExpr case_ii_pi2(const ScalarField& alpha) {
    return Bs(sf_var(Var::Beta), kW21) +
           Bs(
               [alpha](const EvalCtx& s) {
                   const Jet2 b = s[Var::Beta], n = s[Var::Nu], c = s[Var::C],
                              sg = s[Var::Sigma];
                   const Jet2 z = case_ii_Z(s);
                   return ((c - b * b - z) * n + sg * (n - alpha(s))) / n;
               },
               kW1) +
           Bs(
               [](const EvalCtx& s) {
                   const Jet2 b = s[Var::Beta], n = s[Var::Nu];
                   return case_ii_Z(s) * b * n / (n * n + s[Var::Sigma]);
               },
               kW3);
}

FormExpr case_ii_pi3(const Chart& chart, const ScalarField& alpha) {
    return D(Var::Beta, chart) -
           Bs(
               [alpha](const EvalCtx& s) {
                   const Jet2 b = s[Var::Beta], n = s[Var::Nu];
                   return b * b + alpha(s) * n + s[Var::C] + s[Var::Sigma] + case_ii_Z(s);
               },
               kW2);
}

// dalpha as a FormExpr: the basis differential on the free chart, the chain
// rule d(avalue) on the locus chart.
FormExpr case_ii_pi4(const FormExpr& dalpha, const ScalarField& alpha) {
    return dalpha + Bs(
                        [alpha](const EvalCtx& s) {
                            const Jet2 b = s[Var::Beta], n = s[Var::Nu];
                            return b * (3.0 * n - alpha(s)) +
                                   case_ii_Z(s) * b * n / (n * n + s[Var::Sigma]);
                        },
                        kW2);
}

} // namespace

ScalarField case_ii_alpha_on_locus() {
    return [](const EvalCtx& s) {
        const Jet2 b = s[Var::Beta], n = s[Var::Nu], c = s[Var::C], sg = s[Var::Sigma];
        return b * b * n * (n * n + sg - 4.0 * c) / ((4.0 * c - sg) * (n * n + sg));
    };
}

PfaffianSystem case_ii_system() {
    PfaffianSystem sys;
    sys.id = "case_ii";
    sys.chart = Chart{{Var::Alpha, Var::Beta, Var::Nu}};
    const ScalarField sigma_over_nu = [](const EvalCtx& s) {
        return s[Var::Sigma] / s[Var::Nu];
    };
    sys.generators = {
        B(kW4),
        B(kW41) + Bs(sigma_over_nu, kW1) - Bs(sf_var(Var::Beta), kW3),
        B(kW42) - Bs(sf_var(Var::Nu), kW2),
        B(kW43) - Bs(sf_var(Var::Beta), kW1) - Bs(sf_var(Var::Alpha), kW3),
    };
    sys.admissible = [](const StatePoint& s) {
        const double b = s[Var::Beta], n = s[Var::Nu], c = s[Var::C], sg = s[Var::Sigma];
        return c != 0.0 && std::abs(b) >= kDenomFloor && std::abs(n) >= kDenomFloor &&
               std::abs(sg) >= kDenomFloor && std::abs(4.0 * c - sg) >= kDenomFloor &&
               std::abs(n * n + sg) >= kDenomFloor && std::abs(n * n + 4.0 * c) >= kDenomFloor;
    };
    sys.sample = [admissible = sys.admissible](Rng& rng) {
        StatePoint s;
        for (int tries = 0; tries < 1000; ++tries) {
            s[Var::C] = rng.coin() ? 1.0 : -1.0;
            s[Var::Alpha] = rng.uniform(-1.5, 1.5);
            s[Var::Beta] = rng.uniform_away_from_zero(0.3, 1.5);
            s[Var::Nu] = rng.uniform_away_from_zero(0.3, 1.5);
            s[Var::Sigma] = rng.uniform_away_from_zero(0.3, 3.0);
            if (admissible(s)) return s;
        }
        throw std::runtime_error("case_ii_system: sampling failed");
    };
    return sys;
}

CaseIICoefficients case_ii_coefficients(const StatePoint& s) {
    const Chart chart{{Var::Beta, Var::Nu}};
    const EvalCtx ctx = EvalCtx::make(s, chart);
    CaseIICoefficients co;
    co.sigma = s[Var::Sigma];
    co.Z = case_ii_Z(ctx).v;
    co.P = case_ii_P(ctx).v;
    co.Q = case_ii_Q(ctx).v;
    co.R = case_ii_R(ctx).v;
    // Substitution relations from the locus identity; closed forms for S, T
    // are never displayed, so they are solved numerically.
    const double n = s[Var::Nu], sg = s[Var::Sigma], b = s[Var::Beta];
    co.S = (n * (n * n + sg) / (sg * b) * co.P - co.Q) / co.R;
    co.T = -(n * n / sg + co.Q * co.S) / co.R;
    return co;
}

// --------------------------------------------------------- construction ----

PfaffianSystem construction_system() {
    PfaffianSystem sys;
    sys.id = "construction";
    sys.chart = Chart{{Var::Alpha, Var::Beta, Var::Lambda, Var::Nu, Var::P}};
    const Chart& ch = sys.chart;

    const ScalarField theta4_coeff = [](const EvalCtx& s) {
        const Jet2 a = s[Var::Alpha], b = s[Var::Beta], l = s[Var::Lambda];
        return (b * b + l * l - a * l - s[Var::C]) / b;
    };
    const ScalarField alpha_rhs = [](const EvalCtx& s) {
        return s[Var::Beta] * (s[Var::Alpha] + s[Var::Lambda] - 3.0 * s[Var::Nu]);
    };
    const ScalarField beta_rhs = [](const EvalCtx& s) {
        const Jet2 a = s[Var::Alpha], b = s[Var::Beta], l = s[Var::Lambda], n = s[Var::Nu];
        return b * b + l * l - 2.0 * l * n + a * n + s[Var::C];
    };
    const ScalarField lambda_rhs = [](const EvalCtx& s) {
        const Jet2 a = s[Var::Alpha], b = s[Var::Beta], l = s[Var::Lambda], n = s[Var::Nu];
        return ((2.0 * l + n) * b * b + (n - l) * (a * l - l * l + s[Var::C])) / b;
    };

    sys.generators = {
        B(kW4),
        B(kW41) - Bs(sf_var(Var::Lambda), kW1) - Bs(sf_var(Var::Beta), kW3),
        B(kW42) - Bs(sf_var(Var::Nu), kW2),
        B(kW43) - Bs(sf_var(Var::Beta), kW1) - Bs(sf_var(Var::Alpha), kW3),
        B(kW21) - Bs(sf_var(Var::Lambda), kW3) - Bs(theta4_coeff, kW1),
        D(Var::Alpha, ch) - Bs(alpha_rhs, kW2),
        D(Var::Beta, ch) - Bs(beta_rhs, kW2),
        D(Var::Lambda, ch) - Bs(lambda_rhs, kW2),
        D(Var::Nu, ch) - Bs(sf_var(Var::P), kW2),
    };
    sys.admissible = [](const StatePoint& s) {
        return s[Var::C] != 0.0 && std::abs(s[Var::Beta]) >= kDenomFloor;
    };
    sys.sample = [](Rng& rng) {
        StatePoint s;
        s[Var::C] = rng.coin() ? 1.0 : -1.0;
        s[Var::Alpha] = rng.uniform(-1.5, 1.5);
        s[Var::Beta] = rng.uniform_away_from_zero(0.3, 1.5);
        s[Var::Lambda] = rng.uniform(-1.5, 1.5);
        s[Var::Nu] = rng.uniform(-1.5, 1.5);
        s[Var::P] = rng.uniform(-1.0, 1.0);
        return s;
    };
    return sys;
}

PfaffianSystem system_by_id(const std::string& sys_id) {
    if (sys_id == "hopf") return hopf_system();
    if (sys_id == "case_i") return case_i_system();
    if (sys_id == "case_ii") return case_ii_system();
    if (sys_id == "construction") return construction_system();
    throw std::invalid_argument("unknown Pfaffian system: " + sys_id);
}

// -------------------------------------------------------------- verify ----

namespace {

double normalized_diff(const EvalForm& lhs, const EvalForm& rhs) {
    const double scale = 1.0 + std::max(lhs.max_abs(), rhs.max_abs());
    return (lhs - rhs).max_abs() / scale;
}

// Verify d(rows[i]) == -(sum_j M[i][j] ^ w^j) mod the ideal.
double tableau_residual(const PfaffianSystem& sys, const EvalCtx& ctx,
                        const std::vector<FormExpr>& rows,
                        const std::vector<std::vector<FormExpr>>& m) {
    std::vector<EvalForm> gen;
    gen.reserve(sys.generators.size());
    for (const auto& th : sys.generators) gen.push_back(th.eval(ctx));
    const IdealReducer red(gen, sys.chart.dimension());

    const int w[3] = {kW1, kW2, kW3};
    double worst = 0.0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const EvalForm lhs = red.reduce(rows[i].d(sys.chart).eval(ctx));
        FormExpr rhs_expr = FormExpr::zero(2);
        for (int j = 0; j < 3; ++j) rhs_expr = rhs_expr - wedge(m[i][j], B(w[j]));
        const EvalForm rhs = red.reduce(rhs_expr.eval(ctx));
        worst = std::max(worst, normalized_diff(lhs, rhs));
    }
    return worst;
}

TableauReport verify_hopf(const PfaffianSystem& sys, const StatePoint& state, double tol) {
    TableauReport rep;
    rep.system = sys.id;
    const EvalCtx ctx = EvalCtx::make(state, sys.chart);
    std::vector<EvalForm> gen = {sys.generators[0].eval(ctx), sys.generators[1].eval(ctx)};
    const IdealReducer red(gen, sys.chart.dimension());

    const EvalForm d1 = red.reduce(sys.generators[0].d(sys.chart).eval(ctx));
    const EvalForm o1 = red.reduce(hopf_omega1().eval(ctx));
    const EvalForm d2 = red.reduce(sys.generators[1].d(sys.chart).eval(ctx));
    const EvalForm o2 = red.reduce(hopf_omega2().eval(ctx));
    rep.max_residual = std::max(normalized_diff(d1, o1), normalized_diff(d2, o2));
    rep.ok = rep.max_residual < tol;
    return rep;
}

TableauReport verify_case_i(const PfaffianSystem& sys, const StatePoint& state, double tol) {
    TableauReport rep;
    rep.system = sys.id;
    const EvalCtx ctx = EvalCtx::make(state, sys.chart);

    const ScalarField beta_over_nu = [](const EvalCtx& s) { return s[Var::Beta] / s[Var::Nu]; };

    const FormExpr pi1 = case_i_pi1();
    const FormExpr pi2 = case_i_pi2(sys.chart);
    const FormExpr pi3 = case_i_pi3(sys.chart);

    const std::vector<FormExpr> rows = {
        sys.generators[1],
        sys.generators[2],
        sys.generators[3] + sys.generators[1].scaled(beta_over_nu),
    };
    const FormExpr m22 = (pi2.scaled([](const EvalCtx& s) {
                             const Jet2 n = s[Var::Nu];
                             return 2.0 * n * (n * n - 2.0 * s[Var::C]);
                         }) +
                          pi3.scaled([](const EvalCtx& s) {
                              const Jet2 n = s[Var::Nu];
                              return s[Var::Beta] * (n * n + 4.0 * s[Var::C]);
                          }))
                             .scaled([](const EvalCtx& s) {
                                 const Jet2 n = s[Var::Nu];
                                 return s[Var::Beta] / (4.0 * s[Var::C] * n * n);
                             });
    const std::vector<std::vector<FormExpr>> m = {
        {FormExpr::zero(1), pi1, pi2},
        {pi1, pi3, -pi1.scaled(beta_over_nu)},
        {pi2, FormExpr::zero(1), m22},
    };

    rep.max_residual = tableau_residual(sys, ctx, rows, m);
    rep.ok = rep.max_residual < tol;
    return rep;
}

TableauReport verify_case_ii(const PfaffianSystem& sys, const StatePoint& state, double tol) {
    TableauReport rep;
    rep.system = sys.id;
    const EvalCtx ctx = EvalCtx::make(state, sys.chart);

    const ScalarField alpha = sf_var(Var::Alpha);
    const FormExpr dalpha = D(Var::Alpha, sys.chart);
    const FormExpr pi1 = case_ii_pi1(sys.chart, alpha);
    const FormExpr pi2 = case_ii_pi2(alpha);
    const FormExpr pi3 = case_ii_pi3(sys.chart, alpha);
    const FormExpr pi4 = case_ii_pi4(dalpha, alpha);

    const ScalarField sg_over_nu2 = [](const EvalCtx& s) {
        return s[Var::Sigma] / (s[Var::Nu] * s[Var::Nu]);
    };
    const ScalarField ratio = [](const EvalCtx& s) {
        const Jet2 n = s[Var::Nu];
        return -(n * n + s[Var::Sigma]) / (s[Var::Beta] * n);
    };

    const std::vector<FormExpr> rows = {sys.generators[1], sys.generators[2],
                                        sys.generators[3]};
    const std::vector<std::vector<FormExpr>> m = {
        {pi1.scaled(sg_over_nu2), pi2.scaled(ratio), pi3},
        {pi2.scaled(ratio), pi1, pi2},
        {pi3, pi2, pi4},
    };
    rep.max_residual = tableau_residual(sys, ctx, rows, m);

    // Locus relation: restrict to V by eliminating alpha, then
    // P pi1 + Q pi3 + R pi4 must vanish identically.
    const Chart locus_chart{{Var::Beta, Var::Nu}};
    StatePoint on_v = state;
    {
        const EvalCtx tmp = EvalCtx::make(on_v, locus_chart);
        on_v[Var::Alpha] = case_ii_alpha_on_locus()(tmp).v;
    }
    const EvalCtx vctx = EvalCtx::make(on_v, locus_chart);
    const ScalarField av = case_ii_alpha_on_locus();
    const FormExpr dav = FormExpr::scalar(av).d(locus_chart);
    const FormExpr combo = case_ii_pi1(locus_chart, av).scaled(case_ii_P) +
                           case_ii_pi3(locus_chart, av).scaled(case_ii_Q) +
                           case_ii_pi4(dav, av).scaled(case_ii_R);
    const EvalForm combo_val = combo.eval(vctx);
    double scale = 1.0;
    scale += std::max({std::abs(case_ii_P(vctx).v), std::abs(case_ii_Q(vctx).v),
                       std::abs(case_ii_R(vctx).v)});
    rep.locus_residual = combo_val.max_abs() / scale;

    rep.ok = rep.max_residual < tol && rep.locus_residual < tol;
    return rep;
}

TableauReport verify_construction(const PfaffianSystem& sys, const StatePoint& state,
                                  double tol) {
    TableauReport rep;
    rep.system = sys.id;
    const EvalCtx ctx = EvalCtx::make(state, sys.chart);
    const int dim = sys.chart.dimension();

    std::vector<EvalForm> gen;
    for (const auto& th : sys.generators) gen.push_back(th.eval(ctx));
    const IdealReducer red(gen, dim);

    // d theta_i must vanish mod the ideal for i = 0..7; theta_8 carries the
    // whole tableau, d theta_8 == -dp ^ w2.
    double worst = 0.0;
    std::vector<EvalForm> reduced;
    for (std::size_t i = 0; i < sys.generators.size(); ++i) {
        EvalForm r = red.reduce(sys.generators[i].d(sys.chart).eval(ctx));
        const EvalForm raw = sys.generators[i].d(sys.chart).eval(ctx);
        const double scale = 1.0 + raw.max_abs();
        if (i < 8) worst = std::max(worst, r.max_abs() / scale);
        reduced.push_back(std::move(r));
    }
    FormExpr dp_w2 = wedge(D(Var::P, sys.chart), B(kW2));
    const EvalForm expected = red.reduce(dp_w2.eval(ctx)) * (-1.0);
    worst = std::max(worst, normalized_diff(reduced[8], expected));
    rep.max_residual = worst;

    // Cartan character s1: the reduced tableau spans a single direction.
    std::vector<IndexTuple> keys;
    std::map<IndexTuple, int> key_index;
    for (const auto& r : reduced)
        for (const auto& [idx, cval] : r.terms())
            if (key_index.emplace(idx, static_cast<int>(keys.size())).second)
                keys.push_back(idx);
    Eigen::MatrixXd span = Eigen::MatrixXd::Zero(static_cast<int>(reduced.size()),
                                                 static_cast<int>(keys.size()));
    for (std::size_t i = 0; i < reduced.size(); ++i)
        for (const auto& [idx, cval] : reduced[i].terms())
            span(static_cast<int>(i), key_index[idx]) = cval;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(span);
    const double svtol = 1e-7 * std::max(1.0, svd.singularValues().size() > 0
                                                  ? svd.singularValues()(0)
                                                  : 0.0);
    rep.tableau_rank = static_cast<int>((svd.singularValues().array() > svtol).count());

    rep.ok = rep.max_residual < tol && rep.tableau_rank == 1;
    return rep;
}

} // namespace

TableauReport verify_tableau(const std::string& sys_id, const StatePoint& state, double tol) {
    const PfaffianSystem sys = system_by_id(sys_id);
    if (!sys.admissible(state))
        throw std::invalid_argument("verify_tableau: inadmissible state for " + sys_id);
    if (sys_id == "hopf") return verify_hopf(sys, state, tol);
    if (sys_id == "case_i") return verify_case_i(sys, state, tol);
    if (sys_id == "case_ii") return verify_case_ii(sys, state, tol);
    return verify_construction(sys, state, tol);
}

} // namespace hyplab::eds
