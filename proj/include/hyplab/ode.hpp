#pragma once

#include "hyplab/shape_operator.hpp"
#include "hyplab/space_form.hpp"

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace hyplab {

// State of the non-Hopf construction ODE (mu = 0 throughout this family).
struct ODEState {
    double alpha = 0.0;
    double beta = 1.0; // nowhere zero along solutions
    double lambda = 0.0;
    double nu = 0.0;
    SpaceForm sf{};

    ShapeOperator shape() const { return ShapeOperator{alpha, beta, lambda, 0.0, nu}; }
};

struct OdeRhs {
    double dalpha = 0.0;
    double dbeta = 0.0;
    double dlambda = 0.0;
};

// Right-hand sides of the underdetermined system (nu is free):
//   alpha' = beta (alpha + lambda - 3 nu)
//   beta'  = beta^2 + lambda^2 - 2 lambda nu + alpha nu + c
//   lambda' = ((2 lambda + nu) beta^2 + (nu - lambda)(alpha lambda - lambda^2 + c)) / beta
OdeRhs ode_rhs(const ODEState& s);

struct TrajectorySample {
    double t = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    double lambda = 0.0;
    double nu = 0.0;
    double constraint_residual = 0.0; // pseudo-Ryan constraint value
    double rho_star_half = 0.0;       // 4c + lambda nu (mu = 0)
};

enum class IntegrationStatus { Ok, BetaFloor, NonFinite, NewtonStall, FoldPoint, BadInit };

struct Trajectory {
    std::vector<TrajectorySample> samples;
    IntegrationStatus status = IntegrationStatus::Ok;
    std::string message;
    SpaceForm sf{};

    bool ok() const { return status == IntegrationStatus::Ok; }
};

struct IntegratorOptions {
    double dt = 1e-3;
    double beta_floor = 1e-6;
    int newton_max_iter = 25;
    double newton_tol = 1e-12;
};

using NuFunction = std::function<double(double)>;

// Fixed-step classical RK4 with nu(t) prescribed.  Aborts (with status) if
// |beta| falls below the floor or the state stops being finite.
Trajectory integrate_ode(const ODEState& init, const NuFunction& nu_of_t, double t0, double t1,
                         const IntegratorOptions& opts = {});

// Constant solution of the ODE system (exists only for c < 0 and
// -1/r < nu < 1/r):  with u = r nu and v = (1 - u^2)^(3/2),
//   alpha = (3u - u^3)/r,  beta = v/r,  lambda = u^3/r.
ODEState berndt_constant_solution(double nu, const SpaceForm& sf);

struct BlockCurvatures {
    double k_plus = 0.0;
    double k_minus = 0.0;
    double nu = 0.0;
};

// Eigenvalues of the [[alpha, beta], [beta, lambda]] block together with nu;
// for Berndt states these equal (3/2) nu +/- (1/r) sqrt(1 - (3/4) r^2 nu^2).
BlockCurvatures block_principal_curvatures(const ODEState& s);

// Algebraic constraint defining the pseudo-Ryan family:
//   beta^2 nu^2 + (4c + lambda nu)(alpha(lambda - nu) - beta^2) = 0.
double pr_constraint_residual(const ODEState& s);

// DAE integration of the constrained family: nu is eliminated at every RK4
// stage by Newton's method on the constraint (initial guess = previous nu).
// Stops with a diagnostic at fold points where d(constraint)/d(nu) vanishes.
Trajectory integrate_pseudo_ryan(const ODEState& init, double t0, double t1,
                                 const IntegratorOptions& opts = {});

// CSV export: t, alpha, beta, lambda, nu, constraint_residual, rho_star_half.
void write_trajectory_csv(std::ostream& out, const Trajectory& traj);

} // namespace hyplab
