#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyplab/conditions.hpp"
#include "hyplab/eds/cartan.hpp"
#include "hyplab/eds/systems.hpp"
#include "hyplab/rng.hpp"
#include "hyplab/verify.hpp"

#include <cmath>

using namespace hyplab;
using namespace hyplab::eds;

TEST_CASE("index normalization") {
    auto n1 = normalize_indices({2, 1});
    REQUIRE(n1.has_value());
    CHECK(n1->first == IndexTuple{1, 2});
    CHECK(n1->second == -1);

    auto n2 = normalize_indices({3, 1, 2});
    REQUIRE(n2.has_value());
    CHECK(n2->second == 1); // cyclic

    CHECK_FALSE(normalize_indices({1, 1}).has_value());
    CHECK(normalize_indices({})->second == 1);
}

TEST_CASE("wedge antisymmetry and scalars") {
    const Chart chart{{Var::Beta, Var::Nu}};
    StatePoint s;
    s[Var::Beta] = 0.7;
    s[Var::Nu] = -1.2;
    s[Var::C] = 1.0;
    const EvalCtx ctx = EvalCtx::make(s, chart);

    const FormExpr a = FormExpr::basis(kW1) + FormExpr::basis_scaled(sf_var(Var::Beta), kW3);
    const FormExpr b = FormExpr::basis_scaled(sf_var(Var::Nu), kW2) + FormExpr::basis(kW41);
    const EvalForm ab = wedge(a, b).eval(ctx);
    const EvalForm ba = wedge(b, a).eval(ctx);
    CHECK((ab - ba * (-1.0)).max_abs() == 0.0);
    CHECK(wedge(a, a).eval(ctx).max_abs() == 0.0);
}

TEST_CASE("exterior derivative basics") {
    const PfaffianSystem sys = construction_system();
    Rng rng(501);

    SUBCASE("constant 0-forms are closed") {
        const FormExpr f = FormExpr::scalar(sf_const(3.5));
        const StatePoint s = sys.sample(rng);
        CHECK(f.d(sys.chart).eval(EvalCtx::make(s, sys.chart)).max_abs() == 0.0);
    }
    SUBCASE("d of a coordinate function is its differential") {
        const FormExpr f = FormExpr::scalar(sf_var(Var::Beta));
        const StatePoint s = sys.sample(rng);
        const EvalForm df = f.d(sys.chart).eval(EvalCtx::make(s, sys.chart));
        CHECK(df.coeff({sys.chart.label_of(Var::Beta)}) == 1.0);
        CHECK(df.max_abs() == 1.0);
    }
    SUBCASE("d respects the Leibniz rule on products") {
        // d(beta nu) = nu dbeta + beta dnu
        const FormExpr f = FormExpr::scalar(
            [](const EvalCtx& s) { return s[Var::Beta] * s[Var::Nu]; });
        const StatePoint s = sys.sample(rng);
        const EvalForm df = f.d(sys.chart).eval(EvalCtx::make(s, sys.chart));
        CHECK(df.coeff({sys.chart.label_of(Var::Beta)}) == doctest::Approx(s[Var::Nu]));
        CHECK(df.coeff({sys.chart.label_of(Var::Nu)}) == doctest::Approx(s[Var::Beta]));
    }
}

TEST_CASE("structure table matches the displayed first structure equation") {
    // d w4 = -(w41^w1 + w42^w2 + w43^w3), using w44 = 0
    const Chart chart{};
    StatePoint s;
    s[Var::C] = -1.0;
    const EvalCtx ctx = EvalCtx::make(s, chart);
    const FormExpr expected = -(wedge(FormExpr::basis(kW41), FormExpr::basis(kW1)) +
                                wedge(FormExpr::basis(kW42), FormExpr::basis(kW2)) +
                                wedge(FormExpr::basis(kW43), FormExpr::basis(kW3)));
    const EvalForm diff =
        FormExpr::basis(kW4).d(chart).eval(ctx) - expected.eval(ctx);
    CHECK(diff.max_abs() == 0.0);
}

TEST_CASE("d o d = 0") {
    SUBCASE("structure table is Bianchi-consistent") {
        const auto res = verify::check_bianchi(25, 601);
        CHECK(res.max_residual < 1e-9);
    }
    SUBCASE("random polynomial-coefficient 1-forms") {
        const auto res = verify::check_dd_zero(50, 20, 603);
        CHECK(res.max_residual < 1e-9);
    }
}

TEST_CASE("reduction modulo a Pfaffian system") {
    const PfaffianSystem sys = case_i_system();
    Rng rng(507);
    const StatePoint s = sys.sample(rng);
    const EvalCtx ctx = EvalCtx::make(s, sys.chart);

    std::vector<EvalForm> gens;
    for (const auto& th : sys.generators) gens.push_back(th.eval(ctx));
    const IdealReducer red(gens, sys.chart.dimension());

    SUBCASE("generators reduce to zero") {
        for (const auto& g : gens) CHECK(red.reduce(g).max_abs() < 1e-14);
    }
    SUBCASE("theta wedge anything reduces to zero") {
        const FormExpr psi = FormExpr::basis(kW21) + FormExpr::basis_scaled(sf_var(Var::Nu), kW2);
        const EvalForm w = wedge(sys.generators[1], psi).eval(ctx);
        CHECK(red.reduce(w).max_abs() < 1e-13);
    }
    SUBCASE("reduction is idempotent") {
        const EvalForm f = sys.generators[3].d(sys.chart).eval(ctx);
        const EvalForm once = red.reduce(f);
        CHECK((red.reduce(once) - once).max_abs() < 1e-13);
    }
    SUBCASE("dependent generators are rejected") {
        std::vector<EvalForm> dep = {gens[0], gens[0]};
        CHECK_THROWS_AS(IdealReducer(dep, sys.chart.dimension()), std::runtime_error);
    }
}

TEST_CASE("Hopf system: d theta against the displayed 2-forms") {
    Rng rng(509);
    const PfaffianSystem sys = hopf_system();
    for (int i = 0; i < 100; ++i) {
        const StatePoint s = sys.sample(rng);
        const EvalCtx ctx = EvalCtx::make(s, sys.chart);
        std::vector<EvalForm> gens = {sys.generators[0].eval(ctx), sys.generators[1].eval(ctx)};
        const IdealReducer red(gens, sys.chart.dimension());

        const EvalForm d1 = red.reduce(sys.generators[0].d(sys.chart).eval(ctx));
        const EvalForm d2 = red.reduce(sys.generators[1].d(sys.chart).eval(ctx));
        CHECK((d1 - red.reduce(hopf_omega1().eval(ctx))).max_abs() < 1e-12);
        CHECK((d2 - red.reduce(hopf_omega2().eval(ctx))).max_abs() < 1e-12);
    }
}

TEST_CASE("polar matrix: engine contraction equals the closed form") {
    // rows of the lemma matrix vs interior products of the engine's d theta
    Rng rng(511);
    const PfaffianSystem sys = hopf_system();
    for (int i = 0; i < 50; ++i) {
        const StatePoint s = sys.sample(rng);
        const EvalCtx ctx = EvalCtx::make(s, sys.chart);
        std::vector<EvalForm> gens = {sys.generators[0].eval(ctx), sys.generators[1].eval(ctx)};
        const IdealReducer red(gens, sys.chart.dimension());
        const EvalForm o1 = red.reduce(sys.generators[0].d(sys.chart).eval(ctx));
        const EvalForm o2 = red.reduce(sys.generators[1].d(sys.chart).eval(ctx));

        Eigen::VectorXd v = Eigen::VectorXd::Zero(kBundleDim);
        const double a = rng.uniform(-2, 2), b = rng.uniform(-2, 2);
        const double p = rng.uniform(-2, 2), q = rng.uniform(-2, 2);
        v(kW1) = a;
        v(kW2) = b;
        v(kW41) = p;
        v(kW42) = q;
        v(kW3) = rng.uniform(-2, 2);  // polar data ignores these directions
        v(kW21) = rng.uniform(-2, 2);

        const EvalForm c1 = o1.contract(v);
        const EvalForm c2 = o2.contract(v);
        const double alpha = s[Var::Alpha], c = s[Var::C];
        CHECK(c1.coeff({kW41}) == doctest::Approx(a).epsilon(1e-12));
        CHECK(c1.coeff({kW42}) == doctest::Approx(b).epsilon(1e-12));
        CHECK(c1.coeff({kW1}) == doctest::Approx(-p).epsilon(1e-12));
        CHECK(c1.coeff({kW2}) == doctest::Approx(-q).epsilon(1e-12));
        CHECK(c2.coeff({kW41}) == doctest::Approx(-2 * q + alpha * b).epsilon(1e-12));
        CHECK(c2.coeff({kW42}) == doctest::Approx(2 * p - alpha * a).epsilon(1e-12));
        CHECK(c2.coeff({kW1}) == doctest::Approx(2 * c * b + alpha * q).epsilon(1e-12));
        CHECK(c2.coeff({kW2}) == doctest::Approx(-(2 * c * a + alpha * p)).epsilon(1e-12));
    }
}

TEST_CASE("characteristic variety") {
    const SpaceForm cp2 = SpaceForm::projective(1.0);
    const SpaceForm ch2 = SpaceForm::hyperbolic(1.0);

    SUBCASE("the fiber 2-plane a = b = p = q = 0") {
        const auto r = characteristic_test(PolarData{0, 0, 0, 0}, 0.8, cp2);
        CHECK(r.rank == 0);
        CHECK(r.h_dim == 6);
        CHECK(r.characteristic);
    }
    SUBCASE("the degenerate Frenet direction requires alpha^2 + 4c = 0") {
        // 2 kappa1 = alpha and kappa1^2 = -c: c = -1, kappa1 = 1, alpha = 2
        const auto r = characteristic_test(PolarData{1, 0, 1, 0}, 2.0, ch2);
        CHECK(r.rank < 2);
        CHECK(r.characteristic);
    }
    SUBCASE("generic directions in CP^2 are non-characteristic") {
        Rng rng(513);
        for (int i = 0; i < 100; ++i) {
            const PolarData pd{rng.uniform_away_from_zero(0.1, 2.0), rng.uniform(-2, 2),
                               rng.uniform(-2, 2), rng.uniform(-2, 2)};
            const auto r = characteristic_test(pd, rng.uniform(-2, 2), cp2);
            CHECK(r.rank == 2);
            CHECK(r.h_dim == 4);
        }
    }
    SUBCASE("dichotomy over the grid and both constructed families") {
        const auto res = verify::check_characteristic_dichotomy(515);
        CHECK(res.failures == 0);
        CHECK(res.cases > 1500);
    }
}

TEST_CASE("Cartan test for the Hopf system") {
    SUBCASE("characters and Grassmannian codimension at alpha = 0, c = 1") {
        const auto rep = cartan_test_hopf(0.0, SpaceForm::projective(1.0), 10, 77);
        CHECK(rep.characters == std::array<int, 4>{2, 4, 4, 4});
        CHECK(rep.character_sum == 14);
        CHECK(rep.grassmann_codim == 14);
        CHECK(rep.ok);
    }
    SUBCASE("random alpha and both signs") {
        Rng rng(517);
        for (int i = 0; i < 6; ++i) {
            const SpaceForm sf =
                rng.coin() ? SpaceForm::projective(1.0) : SpaceForm::hyperbolic(1.0);
            double alpha = rng.uniform(-2.0, 2.0);
            while (std::abs(alpha * alpha + 4.0 * sf.c) < 0.05)
                alpha = rng.uniform(-2.0, 2.0);
            CHECK(cartan_test_hopf(alpha, sf, 5, rng.raw()).ok);
        }
    }
    SUBCASE("alpha^2 + 4c = 0 is rejected") {
        CHECK_THROWS_AS((void)cartan_test_hopf(2.0, SpaceForm::hyperbolic(1.0), 1, 1),
                        std::invalid_argument);
    }
    SUBCASE("integral-element relation residual") {
        CHECK(integral_element_residual(1.0, 0.0, 1.0, 0.0, SpaceForm::projective(1.0)) ==
              0.0);
    }
}

TEST_CASE("tableau verification at sampled admissible states") {
    Rng rng(519);
    SUBCASE("case (i)") {
        const PfaffianSystem sys = case_i_system();
        for (int i = 0; i < 25; ++i) {
            const auto rep = verify_tableau("case_i", sys.sample(rng));
            CHECK(rep.max_residual < 1e-8);
            CHECK(rep.ok);
        }
    }
    SUBCASE("case (ii) including the locus relation") {
        const PfaffianSystem sys = case_ii_system();
        for (int i = 0; i < 25; ++i) {
            const auto rep = verify_tableau("case_ii", sys.sample(rng));
            CHECK(rep.max_residual < 1e-8);
            CHECK(rep.locus_residual < 1e-8);
            CHECK(rep.ok);
        }
    }
    SUBCASE("construction system closes with s1 = 1") {
        const PfaffianSystem sys = construction_system();
        for (int i = 0; i < 25; ++i) {
            const auto rep = verify_tableau("construction", sys.sample(rng));
            CHECK(rep.max_residual < 1e-8);
            CHECK(rep.tableau_rank == 1);
            CHECK(rep.ok);
        }
    }
    SUBCASE("inadmissible states are rejected") {
        StatePoint s;
        s[Var::C] = 1.0;
        s[Var::Beta] = 0.0; // case (i) needs beta != 0
        s[Var::Nu] = 1.0;
        CHECK_THROWS_AS((void)verify_tableau("case_i", s), std::invalid_argument);
        CHECK_THROWS_AS((void)verify_tableau("bogus", s), std::invalid_argument);
    }
}

TEST_CASE("eliminated alpha lands on the zero set of the case residuals") {
    // ties the EDS charts to the pointwise case conditions
    Rng rng(523);
    SUBCASE("case (i)") {
        const PfaffianSystem sys = case_i_system();
        for (int i = 0; i < 50; ++i) {
            const StatePoint s = sys.sample(rng);
            const ShapeOperator a{s[Var::Alpha], s[Var::Beta], 0.0, 0.0, s[Var::Nu]};
            const SpaceForm sf = SpaceForm::from_c(s[Var::C]);
            CHECK(std::abs(case_conditions(a, sf, 0.0).case_i) < 1e-12);
        }
    }
    SUBCASE("case (ii)") {
        const PfaffianSystem sys = case_ii_system();
        const Chart locus{{Var::Beta, Var::Nu}};
        for (int i = 0; i < 50; ++i) {
            StatePoint s = sys.sample(rng);
            s[Var::Alpha] = case_ii_alpha_on_locus()(EvalCtx::make(s, locus)).v;
            const double sigma = s[Var::Sigma];
            const ShapeOperator a{s[Var::Alpha], s[Var::Beta], -sigma / s[Var::Nu], 0.0,
                                  s[Var::Nu]};
            const SpaceForm sf = SpaceForm::from_c(s[Var::C]);
            const auto cr = case_conditions(a, sf, sigma);
            REQUIRE(cr.case_ii_defined);
            CHECK(std::abs(cr.case_ii) < 1e-10);
        }
    }
}

TEST_CASE("case (ii) coefficient functions") {
    Rng rng(521);
    const PfaffianSystem sys = case_ii_system();
    for (int i = 0; i < 50; ++i) {
        const StatePoint s = sys.sample(rng);
        const auto co = case_ii_coefficients(s);
        CHECK(std::isfinite(co.Z));
        // S and T solve the two substitution relations
        const double n = s[Var::Nu], sg = s[Var::Sigma], b = s[Var::Beta];
        CHECK(-n * (n * n + sg) / (sg * b) * co.P + co.Q + co.R * co.S ==
              doctest::Approx(0.0).epsilon(1e-9));
        CHECK(n * n / sg + co.Q * co.S + co.R * co.T == doctest::Approx(0.0).epsilon(1e-9));
    }
}
