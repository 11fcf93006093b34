#include "hyplab/verify.hpp"

#include "hyplab/conditions.hpp"
#include "hyplab/curvature.hpp"
#include "hyplab/ode.hpp"
#include "hyplab/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace hyplab::verify {

namespace {

ShapeOperator random_operator(Rng& rng) {
    return ShapeOperator{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0),
                         rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
}

SpaceForm random_space_form(Rng& rng) {
    const double r = rng.uniform(0.5, 2.0);
    return rng.coin() ? SpaceForm::projective(r) : SpaceForm::hyperbolic(r);
}

} // namespace

OracleCheck check_ricci_oracles(int samples, std::uint64_t seed) {
    Rng rng(seed);
    OracleCheck res;
    res.samples = samples;
    for (int i = 0; i < samples; ++i) {
        const ShapeOperator a = random_operator(rng);
        const SpaceForm sf = random_space_form(rng);
        const double dr = (ricci(a, sf, RicciMode::ClosedForm) -
                           ricci(a, sf, RicciMode::TraceOracle))
                              .cwiseAbs()
                              .maxCoeff();
        const double ds = (star_ricci(a, sf, RicciMode::ClosedForm) -
                           star_ricci(a, sf, RicciMode::TraceOracle))
                              .cwiseAbs()
                              .maxCoeff();
        res.max_ricci_diff = std::max(res.max_ricci_diff, dr);
        res.max_star_ricci_diff = std::max(res.max_star_ricci_diff, ds);
    }
    return res;
}

EquivalenceCheck check_pseudo_ryan_equivalence(int samples, std::uint64_t seed, double tol) {
    Rng rng(seed);
    EquivalenceCheck res;
    res.samples = samples;
    res.tolerance = tol;
    for (int i = 0; i < samples; ++i) {
        const SpaceForm sf = rng.coin() ? SpaceForm::projective(1.0) : SpaceForm::hyperbolic(1.0);
        ShapeOperator a = random_operator(rng);
        const int kind = i % 5;
        if (kind == 3) {
            // constructed pseudo-Ryan point with mu = 0: solve the refined
            // identity for alpha
            a.mu = 0.0;
            const double k0 = 4.0 * sf.c + a.lambda * a.nu;
            const double denom = k0 * (a.lambda - a.nu);
            if (std::abs(denom) < 0.05) continue;
            a.alpha = a.beta * a.beta * (k0 - a.nu * a.nu) / denom;
        } else if (kind == 4) {
            // Hopf branch with mu != 0: beta = alpha = 0 satisfies both raw
            // criteria in any frame
            a.beta = 0.0;
            a.alpha = 0.0;
        }
        const PseudoRyanReport rep = pseudo_ryan(a, sf, tol);
        const double scale = 1.0 + a.matrix().squaredNorm();
        const double raw = std::max(std::abs(rep.raw[0]), std::abs(rep.raw[1])) / scale;
        const bool raw_true = raw <= tol;
        if (raw_true != rep.oracle) ++res.mismatches;
        if (raw_true && rep.oracle) ++res.true_cases;
    }
    return res;
}

GridSearch refined_counterexample_search(int points_per_axis) {
    GridSearch res;
    const int n = points_per_axis;
    auto grid = [n](int k) { return -2.0 + 4.0 * static_cast<double>(k) / (n - 1); };
    for (int ci = 0; ci < 2; ++ci) {
        const double c = ci == 0 ? 1.0 : -1.0;
        for (int ia = 0; ia < n; ++ia)
            for (int ib = 0; ib < n; ++ib)
                for (int il = 0; il < n; ++il)
                    for (int im = 0; im < n; ++im) {
                        const double mu = grid(im);
                        if (std::abs(mu) <= 0.01) continue;
                        for (int in = 0; in < n; ++in) {
                            const double alpha = grid(ia), beta = grid(ib);
                            const double lambda = grid(il), nu = grid(in);
                            const double k0 = 4.0 * c + lambda * nu - mu * mu;
                            const double r1 =
                                mu * (beta * beta * nu - alpha * k0);
                            const double r2 = beta * beta * (mu * mu - nu * nu) -
                                              k0 * (alpha * (lambda - nu) - beta * beta);
                            ++res.scanned;
                            if (std::abs(r1) <= 1e-12 && std::abs(r2) <= 1e-12)
                                ++res.counterexamples;
                        }
                    }
    }
    return res;
}

BerndtCheck check_berndt(int nu_samples_per_r) {
    BerndtCheck res;
    for (const double r : {0.5, 1.0, 2.0}) {
        const SpaceForm sf = SpaceForm::hyperbolic(r);
        for (int k = 0; k < nu_samples_per_r; ++k) {
            const double nu =
                (-1.0 + 2.0 * (k + 1.0) / (nu_samples_per_r + 1.0)) / r;
            const ODEState s = berndt_constant_solution(nu, sf);
            const OdeRhs d = ode_rhs(s);
            const double rhs = std::max({std::abs(d.dalpha), std::abs(d.dbeta),
                                         std::abs(d.dlambda)});
            const BlockCurvatures bc = block_principal_curvatures(s);
            const double root = std::sqrt(1.0 - 0.75 * r * r * nu * nu) / r;
            const double expect_p = 1.5 * nu + root;
            const double expect_m = 1.5 * nu - root;
            const double diff = std::max(std::abs(bc.k_plus - expect_p),
                                         std::abs(bc.k_minus - expect_m));
            res.max_rhs_residual = std::max(res.max_rhs_residual, rhs);
            res.max_curvature_diff = std::max(res.max_curvature_diff, diff);
            ++res.count;
        }
    }
    return res;
}

double rk4_richardson_ratio() {
    const SpaceForm sf = SpaceForm::hyperbolic(1.0);
    ODEState init = berndt_constant_solution(0.5, sf);
    init.alpha += 1e-3;
    const auto nu_fn = [nu = init.nu](double) { return nu; };

    auto endpoint = [&](double dt) {
        IntegratorOptions opts;
        opts.dt = dt;
        const Trajectory traj = integrate_ode(init, nu_fn, 0.0, 1.0, opts);
        if (!traj.ok()) throw std::runtime_error("richardson: integration failed");
        const TrajectorySample& s = traj.samples.back();
        return Eigen::Vector3d(s.alpha, s.beta, s.lambda);
    };

    const Eigen::Vector3d y1 = endpoint(0.02);
    const Eigen::Vector3d y2 = endpoint(0.01);
    const Eigen::Vector3d y3 = endpoint(0.005);
    return (y1 - y2).norm() / ((y2 - y3).norm());
}

TableauSuite check_tableaux(const std::string& sys_id, int states, std::uint64_t seed,
                            double tol) {
    Rng rng(seed);
    const eds::PfaffianSystem sys = eds::system_by_id(sys_id);
    TableauSuite res;
    res.system = sys_id;
    res.states = states;
    res.max_locus_residual = 0.0;
    for (int i = 0; i < states; ++i) {
        const eds::StatePoint st = sys.sample(rng);
        const eds::TableauReport rep = eds::verify_tableau(sys_id, st, tol);
        res.max_residual = std::max(res.max_residual, rep.max_residual);
        if (sys_id == "case_ii")
            res.max_locus_residual = std::max(res.max_locus_residual, rep.locus_residual);
        if (sys_id == "construction" && rep.tableau_rank != 1) res.s1_ok = false;
    }
    res.pass = res.max_residual < tol && res.s1_ok &&
               (sys_id != "case_ii" || res.max_locus_residual < tol);
    return res;
}

DdCheck check_dd_zero(int forms, int states, std::uint64_t seed) {
    Rng rng(seed);
    const eds::PfaffianSystem sys = eds::construction_system();
    const eds::Chart& chart = sys.chart;
    const int dim = chart.dimension();

    DdCheck res;
    res.forms = forms;
    res.states = states;

    for (int f = 0; f < forms; ++f) {
        // random 1-form: a few labels with random quadratic coefficients in
        // the chart coordinates
        eds::FormExpr expr = eds::FormExpr::zero(1);
        const int nterms = rng.uniform_int(2, 4);
        for (int tcount = 0; tcount < nterms; ++tcount) {
            const int label = rng.uniform_int(0, dim - 1);
            const double c0 = rng.uniform(-1.0, 1.0);
            const double c1 = rng.uniform(-1.0, 1.0);
            const double c2 = rng.uniform(-1.0, 1.0);
            const eds::Var v1 = chart.coords[static_cast<std::size_t>(
                rng.uniform_int(0, static_cast<int>(chart.coords.size()) - 1))];
            const eds::Var v2 = chart.coords[static_cast<std::size_t>(
                rng.uniform_int(0, static_cast<int>(chart.coords.size()) - 1))];
            expr = expr + eds::FormExpr::basis_scaled(
                              [c0, c1, c2, v1, v2](const eds::EvalCtx& s) {
                                  return c0 + c1 * s[v1] + c2 * (s[v1] * s[v2]);
                              },
                              label);
        }
        const eds::FormExpr ddf = expr.d(chart).d(chart);
        for (int i = 0; i < states; ++i) {
            const eds::StatePoint st = sys.sample(rng);
            const eds::EvalCtx ctx = eds::EvalCtx::make(st, chart);
            res.max_residual = std::max(res.max_residual, ddf.eval(ctx).max_abs());
        }
    }
    return res;
}

DdCheck check_bianchi(int states, std::uint64_t seed) {
    Rng rng(seed);
    const eds::PfaffianSystem sys = eds::construction_system();
    DdCheck res;
    res.forms = eds::kBundleDim;
    res.states = states;
    for (int label = 0; label < eds::kBundleDim; ++label) {
        const eds::FormExpr dd = eds::FormExpr::basis(label).d(sys.chart).d(sys.chart);
        for (int i = 0; i < states; ++i) {
            const eds::StatePoint st = sys.sample(rng);
            const eds::EvalCtx ctx = eds::EvalCtx::make(st, sys.chart);
            res.max_residual = std::max(res.max_residual, dd.eval(ctx).max_abs());
        }
    }
    return res;
}

DichotomyCheck check_characteristic_dichotomy(std::uint64_t seed) {
    Rng rng(seed);
    DichotomyCheck res;

    auto expect = [&](const eds::PolarData& pd, double alpha, const SpaceForm& sf) {
        const double cv1 = 2.0 * (pd.a * pd.p + pd.b * pd.q) -
                           alpha * (pd.a * pd.a + pd.b * pd.b);
        const double cv2 = pd.p * pd.p + pd.q * pd.q + sf.c * (pd.a * pd.a + pd.b * pd.b);
        const bool char_expected = std::abs(cv1) <= 1e-9 && std::abs(cv2) <= 1e-9;
        const auto r = eds::characteristic_test(pd, alpha, sf);
        const bool char_observed = r.rank < 2;
        ++res.cases;
        if (char_expected != char_observed) ++res.failures;
        if (char_observed && r.h_dim <= 4) ++res.failures;
        if (!char_observed && r.h_dim != 4) ++res.failures;
    };

    // coarse grid; generic points are non-characteristic
    const double pts[4] = {-1.0, -0.35, 0.6, 1.4};
    for (const double c : {1.0, -1.0}) {
        const SpaceForm sf = c > 0 ? SpaceForm::projective(1.0) : SpaceForm::hyperbolic(1.0);
        for (const double alpha : {-1.3, 0.0, 1.7})
            for (const double a : pts)
                for (const double b : pts)
                    for (const double p : pts)
                        for (const double q : pts)
                            expect(eds::PolarData{a, b, p, q}, alpha, sf);
    }

    // the 2-plane a = b = p = q = 0 is always characteristic
    for (int i = 0; i < 20; ++i) {
        const SpaceForm sf = random_space_form(rng);
        expect(eds::PolarData{0, 0, 0, 0}, rng.uniform(-2.0, 2.0), sf);
    }

    // c < 0, |alpha| <= 2/r: the four-parameter characteristic family,
    // (p, q) = rotation of (a, b)/r by phi with cos(phi) = alpha r / 2
    for (int i = 0; i < 100; ++i) {
        const double r = rng.uniform(0.5, 2.0);
        const SpaceForm sf = SpaceForm::hyperbolic(r);
        const double alpha = rng.uniform(-2.0 / r, 2.0 / r);
        const double a = rng.uniform_away_from_zero(0.2, 1.5);
        const double b = rng.uniform(-1.5, 1.5);
        const double cosphi = alpha * r / 2.0;
        const double sinphi = (rng.coin() ? 1.0 : -1.0) *
                              std::sqrt(std::max(0.0, 1.0 - cosphi * cosphi));
        const double p = (cosphi * a - sinphi * b) / r;
        const double q = (cosphi * b + sinphi * a) / r;
        expect(eds::PolarData{a, b, p, q}, alpha, sf);
    }
    return res;
}

CartanSuite check_cartan(int flags, std::uint64_t seed) {
    Rng rng(seed);
    CartanSuite res;
    res.pass = true;
    const int groups = std::max(1, flags / 5);
    for (int g = 0; g < groups; ++g) {
        SpaceForm sf = random_space_form(rng);
        double alpha = rng.uniform(-2.0, 2.0);
        while (std::abs(alpha * alpha + 4.0 * sf.c) < 0.05) alpha = rng.uniform(-2.0, 2.0);
        const eds::CartanReport rep = eds::cartan_test_hopf(alpha, sf, 5, rng.raw());
        res.flags += rep.trials;
        res.characters = rep.characters;
        res.character_sum = rep.character_sum;
        res.grassmann_codim = rep.grassmann_codim;
        res.pass = res.pass && rep.ok;
    }
    return res;
}

// ------------------------------------------------------------- suites ------

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "oracles",    "pseudo-ryan-equiv", "berndt",           "eds-hopf", "eds-case-i",
        "eds-case-ii", "eds-construction", "cartan"};
    return names;
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed, int samples) {
    SuiteReport rep;
    rep.suite = name;
    rep.seed = seed;
    rep.samples = samples;

    if (name == "oracles") {
        rep.tolerance = 1e-9;
        const OracleCheck c = check_ricci_oracles(samples, seed);
        rep.max_residual = std::max(c.max_ricci_diff, c.max_star_ricci_diff);
        rep.pass = rep.max_residual <= rep.tolerance;
        rep.details = {{"max_ricci_diff", c.max_ricci_diff},
                       {"max_star_ricci_diff", c.max_star_ricci_diff}};
    } else if (name == "pseudo-ryan-equiv") {
        rep.tolerance = 1e-9;
        const EquivalenceCheck c = check_pseudo_ryan_equivalence(samples, seed, rep.tolerance);
        rep.max_residual = static_cast<double>(c.mismatches);
        rep.pass = c.mismatches == 0 && c.true_cases > 0;
        rep.details = {{"mismatches", c.mismatches}, {"true_cases", c.true_cases}};
        const GridSearch g = refined_counterexample_search(20);
        rep.details["grid_scanned"] = g.scanned;
        rep.details["grid_counterexamples"] = g.counterexamples;
        rep.pass = rep.pass && g.counterexamples == 0;
    } else if (name == "berndt") {
        rep.tolerance = 1e-12;
        const BerndtCheck c = check_berndt(std::max(10, samples / 3));
        rep.max_residual = std::max(c.max_rhs_residual, c.max_curvature_diff);
        rep.pass = c.max_rhs_residual < 1e-13 && c.max_curvature_diff < 1e-12;
        rep.details = {{"count", c.count},
                       {"max_rhs_residual", c.max_rhs_residual},
                       {"max_curvature_diff", c.max_curvature_diff}};
        const double ratio = rk4_richardson_ratio();
        rep.details["richardson_ratio"] = ratio;
        rep.pass = rep.pass && ratio >= 14.0 && ratio <= 18.0;
    } else if (name == "eds-hopf" || name == "eds-case-i" || name == "eds-case-ii" ||
               name == "eds-construction") {
        rep.tolerance = 1e-8;
        const std::string sys_id = name == "eds-hopf"       ? "hopf"
                                   : name == "eds-case-i"   ? "case_i"
                                   : name == "eds-case-ii"  ? "case_ii"
                                                            : "construction";
        const TableauSuite t = check_tableaux(sys_id, samples, seed, rep.tolerance);
        rep.max_residual = std::max(t.max_residual, sys_id == "case_ii" ? t.max_locus_residual
                                                                        : 0.0);
        rep.pass = t.pass;
        rep.details = {{"states", t.states}, {"max_residual", t.max_residual}};
        if (sys_id == "case_ii") rep.details["max_locus_residual"] = t.max_locus_residual;
        if (sys_id == "construction") rep.details["s1_rank_one"] = t.s1_ok;
        if (sys_id == "hopf") {
            const DdCheck dd = check_dd_zero(std::min(samples, 100), std::min(samples, 100),
                                             seed + 1);
            const DdCheck bi = check_bianchi(std::min(samples, 100), seed + 2);
            rep.details["dd_zero_max"] = dd.max_residual;
            rep.details["bianchi_max"] = bi.max_residual;
            rep.pass = rep.pass && dd.max_residual < 1e-9 && bi.max_residual < 1e-9;
        }
    } else if (name == "cartan") {
        rep.tolerance = 0.0;
        const CartanSuite c = check_cartan(std::max(10, samples), seed);
        const DichotomyCheck d = check_characteristic_dichotomy(seed + 1);
        rep.max_residual = static_cast<double>(d.failures);
        rep.pass = c.pass && d.failures == 0;
        rep.details = {{"flags", c.flags},
                       {"characters", c.characters},
                       {"character_sum", c.character_sum},
                       {"grassmann_codim", c.grassmann_codim},
                       {"dichotomy_cases", d.cases},
                       {"dichotomy_failures", d.failures}};
    } else {
        throw std::invalid_argument("unknown verification suite: " + name);
    }
    return rep;
}

std::vector<SuiteReport> run_suites(const std::string& name_or_all, std::uint64_t seed,
                                    int samples) {
    std::vector<SuiteReport> out;
    if (name_or_all == "all") {
        for (const auto& n : suite_names()) out.push_back(run_suite(n, seed, samples));
    } else {
        out.push_back(run_suite(name_or_all, seed, samples));
    }
    return out;
}

nlohmann::json to_json(const SuiteReport& rep) {
    return {{"suite", rep.suite},     {"seed", rep.seed},
            {"samples", rep.samples}, {"tolerance", rep.tolerance},
            {"max_residual", rep.max_residual}, {"pass", rep.pass},
            {"details", rep.details}};
}

} // namespace hyplab::verify
