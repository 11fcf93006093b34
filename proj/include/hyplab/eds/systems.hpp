#pragma once

#include "hyplab/eds/form.hpp"
#include "hyplab/rng.hpp"

#include <limits>
#include <string>
#include <vector>

namespace hyplab::eds {

// The four Pfaffian systems of the moving-frames analysis, together with
// their charts (which state scalars carry differentials) and admissibility
// boxes for random verification states.
struct PfaffianSystem {
    std::string id;
    Chart chart;
    std::vector<FormExpr> generators; // theta_0 ... theta_k
    std::function<bool(const StatePoint&)> admissible;
    std::function<StatePoint(Rng&)> sample;
};

// Hopf hypersurfaces with Hopf principal curvature alpha (a parameter):
// theta1 = w4, theta2 = w43 - alpha w3.
PfaffianSystem hopf_system();

// Case (i) of the pseudo-Ryan/*-Einstein analysis: coordinates (beta, nu),
// alpha = beta^2 (nu^2 - 4c) / (4 c nu) eliminated.
PfaffianSystem case_i_system();

// Case (ii): coordinates (alpha, beta, nu), sigma a nonzero constant.
PfaffianSystem case_ii_system();

// The construction system theta_0 ... theta_8 on coordinates
// (alpha, beta, lambda, nu, p).
PfaffianSystem construction_system();

// Generator 2-forms of the Hopf ideal, as displayed:
//   Omega1 = -(w41^w1 + w42^w2)
//   Omega2 = 2(w41^w42 - c w1^w2) + alpha(w42^w1 - w41^w2)
FormExpr hopf_omega1();
FormExpr hopf_omega2();

// alpha eliminated by the case (i) and case (ii) locus equations.
ScalarField case_i_alpha();
ScalarField case_ii_alpha_on_locus();

struct CaseIICoefficients {
    double sigma = 0.0;
    double Z = 0.0;
    double P = 0.0;
    double Q = 0.0;
    double R = 0.0;
    double S = 0.0; // solved numerically from the substitution relations
    double T = 0.0;
};
CaseIICoefficients case_ii_coefficients(const StatePoint& s);

struct TableauReport {
    std::string system;
    // max |(engine d theta - displayed tableau) coefficients| normalized by
    // (1 + largest coefficient magnitude of the compared expressions)
    double max_residual = 0.0;
    // case (ii) only: (P pi1 + Q pi3 + R pi4)|_V coefficient residual
    double locus_residual = std::numeric_limits<double>::quiet_NaN();
    // construction system only: rank of the reduced tableau (Cartan s1)
    int tableau_rank = -1;
    bool ok = false;
};

// Verifies the displayed exterior-derivative computations of the chosen
// system at one admissible state.
TableauReport verify_tableau(const std::string& sys_id, const StatePoint& state,
                             double tol = 1e-8);

PfaffianSystem system_by_id(const std::string& sys_id);

} // namespace hyplab::eds
