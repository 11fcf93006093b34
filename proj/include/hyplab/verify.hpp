#pragma once

#include "hyplab/eds/cartan.hpp"
#include "hyplab/eds/systems.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace hyplab::verify {

// ------------------------------------------------------ building blocks ----

struct OracleCheck {
    int samples = 0;
    double max_ricci_diff = 0.0;
    double max_star_ricci_diff = 0.0;
};
// Closed-form vs trace-oracle agreement over seeded random (A, c) with
// components in [-2,2] and c = +/- 1/r^2, r in [0.5, 2].
OracleCheck check_ricci_oracles(int samples, std::uint64_t seed);

struct EquivalenceCheck {
    int samples = 0;
    int mismatches = 0;   // raw-pair verdict vs oracle verdict disagreements
    int true_cases = 0;   // samples where both verdicts were true
    double tolerance = 0.0;
};
// Raw residual pair <= tol iff oracle residual <= tol, over a mix of fully
// random samples and constructed pseudo-Ryan points (both mu = 0 and Hopf
// mu != 0 branches).
EquivalenceCheck check_pseudo_ryan_equivalence(int samples, std::uint64_t seed,
                                               double tol = 1e-9);

struct GridSearch {
    long long scanned = 0;
    long long counterexamples = 0; // |mu| > 0.01 with both raw residuals <= 1e-12
};
// The mu != 0 counterexample search over a points^5 grid on [-2,2]^5 for
// c = +/- 1; must come up empty.
GridSearch refined_counterexample_search(int points_per_axis = 20);

struct BerndtCheck {
    int count = 0;
    double max_rhs_residual = 0.0;       // |ode_rhs| at the constant solution
    double max_curvature_diff = 0.0;     // vs (3/2)nu +/- (1/r) sqrt(1 - (3/4) r^2 nu^2)
};
BerndtCheck check_berndt(int nu_samples_per_r = 50);

// Step-halving Richardson ratio for the perturbed-Berndt problem on [0, 1];
// fourth order gives ratios near 16.
double rk4_richardson_ratio();

struct TableauSuite {
    std::string system;
    int states = 0;
    double max_residual = 0.0;
    double max_locus_residual = 0.0; // case (ii) only
    bool s1_ok = true;               // construction only: tableau rank 1 everywhere
    bool pass = false;
};
TableauSuite check_tableaux(const std::string& sys_id, int states, std::uint64_t seed,
                            double tol = 1e-8);

struct DdCheck {
    int forms = 0;
    int states = 0;
    double max_residual = 0.0;
};
// d(d f) for random polynomial-coefficient 1-forms on the construction chart.
DdCheck check_dd_zero(int forms, int states, std::uint64_t seed);
// d(d w) for every bundle coframe 1-form (Bianchi consistency of the table).
DdCheck check_bianchi(int states, std::uint64_t seed);

struct DichotomyCheck {
    int cases = 0;
    int failures = 0; // rank drop without the characteristic pair vanishing, or vice versa
};
DichotomyCheck check_characteristic_dichotomy(std::uint64_t seed);

struct CartanSuite {
    int flags = 0;
    std::array<int, 4> characters{};
    int character_sum = 0;
    int grassmann_codim = 0;
    bool pass = false;
};
CartanSuite check_cartan(int flags, std::uint64_t seed);

// --------------------------------------------------------------- suites ----

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    int samples = 0;
    double tolerance = 0.0;
    double max_residual = 0.0;
    bool pass = false;
    nlohmann::json details;
};

nlohmann::json to_json(const SuiteReport& rep);

// Suite names: oracles, pseudo-ryan-equiv, berndt, eds-hopf, eds-case-i,
// eds-case-ii, eds-construction, cartan, all.
const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name, std::uint64_t seed, int samples);
std::vector<SuiteReport> run_suites(const std::string& name_or_all, std::uint64_t seed,
                                    int samples);

} // namespace hyplab::verify
