#include "hyplab/ode.hpp"

#include "hyplab/io.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace hyplab {

namespace {

OdeRhs rhs_at(double alpha, double beta, double lambda, double nu, double c) {
    OdeRhs d;
    d.dalpha = beta * (alpha + lambda - 3.0 * nu);
    d.dbeta = beta * beta + lambda * lambda - 2.0 * lambda * nu + alpha * nu + c;
    d.dlambda = ((2.0 * lambda + nu) * beta * beta +
                 (nu - lambda) * (alpha * lambda - lambda * lambda + c)) /
                beta;
    return d;
}

double constraint_at(double alpha, double beta, double lambda, double nu, double c) {
    return beta * beta * nu * nu +
           (4.0 * c + lambda * nu) * (alpha * (lambda - nu) - beta * beta);
}

double constraint_dnu(double alpha, double beta, double lambda, double nu, double c) {
    return 2.0 * beta * beta * nu + lambda * (alpha * (lambda - nu) - beta * beta) -
           (4.0 * c + lambda * nu) * alpha;
}

TrajectorySample make_sample(double t, double alpha, double beta, double lambda, double nu,
                             double c) {
    return TrajectorySample{t, alpha, beta, lambda, nu,
                            constraint_at(alpha, beta, lambda, nu, c),
                            4.0 * c + lambda * nu};
}

} // namespace

OdeRhs ode_rhs(const ODEState& s) {
    if (s.beta == 0.0)
        throw std::domain_error("ode_rhs: beta must be nonzero");
    return rhs_at(s.alpha, s.beta, s.lambda, s.nu, s.sf.c);
}

Trajectory integrate_ode(const ODEState& init, const NuFunction& nu_of_t, double t0, double t1,
                         const IntegratorOptions& opts) {
    if (!(opts.dt > 0.0))
        throw std::invalid_argument("integrate_ode: dt must be positive");
    Trajectory traj;
    traj.sf = init.sf;
    if (std::abs(init.beta) < opts.beta_floor) {
        traj.status = IntegrationStatus::BadInit;
        traj.message = "initial beta below floor";
        return traj;
    }
    const double c = init.sf.c;
    double t = t0;
    double a = init.alpha, b = init.beta, l = init.lambda;
    traj.samples.push_back(make_sample(t, a, b, l, nu_of_t(t), c));

    const double h = opts.dt;
    while (t < t1 - 0.5 * h) {
        const auto k1 = rhs_at(a, b, l, nu_of_t(t), c);
        const auto k2 = rhs_at(a + 0.5 * h * k1.dalpha, b + 0.5 * h * k1.dbeta,
                               l + 0.5 * h * k1.dlambda, nu_of_t(t + 0.5 * h), c);
        const auto k3 = rhs_at(a + 0.5 * h * k2.dalpha, b + 0.5 * h * k2.dbeta,
                               l + 0.5 * h * k2.dlambda, nu_of_t(t + 0.5 * h), c);
        const auto k4 = rhs_at(a + h * k3.dalpha, b + h * k3.dbeta, l + h * k3.dlambda,
                               nu_of_t(t + h), c);
        a += h / 6.0 * (k1.dalpha + 2.0 * k2.dalpha + 2.0 * k3.dalpha + k4.dalpha);
        b += h / 6.0 * (k1.dbeta + 2.0 * k2.dbeta + 2.0 * k3.dbeta + k4.dbeta);
        l += h / 6.0 * (k1.dlambda + 2.0 * k2.dlambda + 2.0 * k3.dlambda + k4.dlambda);
        t += h;

        if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(l)) {
            traj.status = IntegrationStatus::NonFinite;
            traj.message = "state became non-finite at t = " + format17(t);
            return traj;
        }
        if (std::abs(b) < opts.beta_floor) {
            traj.status = IntegrationStatus::BetaFloor;
            traj.message = "|beta| fell below floor at t = " + format17(t);
            return traj;
        }
        traj.samples.push_back(make_sample(t, a, b, l, nu_of_t(t), c));
    }
    return traj;
}

ODEState berndt_constant_solution(double nu, const SpaceForm& sf) {
    if (sf.c >= 0.0)
        throw std::domain_error("berndt_constant_solution: requires c < 0");
    const double u = sf.r * nu;
    if (std::abs(u) >= 1.0)
        throw std::domain_error("berndt_constant_solution: need -1/r < nu < 1/r");
    const double v = std::pow(1.0 - u * u, 1.5);
    return ODEState{(3.0 * u - u * u * u) / sf.r, v / sf.r, u * u * u / sf.r, nu, sf};
}

BlockCurvatures block_principal_curvatures(const ODEState& s) {
    const double tr = s.alpha + s.lambda;
    const double det = s.alpha * s.lambda - s.beta * s.beta;
    const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
    return BlockCurvatures{0.5 * (tr + disc), 0.5 * (tr - disc), s.nu};
}

double pr_constraint_residual(const ODEState& s) {
    return constraint_at(s.alpha, s.beta, s.lambda, s.nu, s.sf.c);
}

namespace {

struct NuSolve {
    double nu = 0.0;
    bool ok = false;
    bool fold = false;
};

NuSolve solve_nu(double alpha, double beta, double lambda, double nu_guess, double c,
                 const IntegratorOptions& opts) {
    double nu = nu_guess;
    for (int i = 0; i < opts.newton_max_iter; ++i) {
        const double g = constraint_at(alpha, beta, lambda, nu, c);
        if (std::abs(g) <= opts.newton_tol)
            return NuSolve{nu, true, false};
        const double dg = constraint_dnu(alpha, beta, lambda, nu, c);
        if (std::abs(dg) < 1e-10)
            return NuSolve{nu, false, true};
        nu -= g / dg;
        if (!std::isfinite(nu))
            return NuSolve{nu, false, false};
    }
    return NuSolve{nu, false, false};
}

} // namespace

Trajectory integrate_pseudo_ryan(const ODEState& init, double t0, double t1,
                                 const IntegratorOptions& opts) {
    if (!(opts.dt > 0.0))
        throw std::invalid_argument("integrate_pseudo_ryan: dt must be positive");
    Trajectory traj;
    traj.sf = init.sf;
    const double c = init.sf.c;
    if (std::abs(init.beta) < opts.beta_floor) {
        traj.status = IntegrationStatus::BadInit;
        traj.message = "initial beta below floor";
        return traj;
    }
    if (std::abs(pr_constraint_residual(init)) > 1e-10) {
        traj.status = IntegrationStatus::BadInit;
        traj.message = "initial state violates the pseudo-Ryan constraint";
        return traj;
    }

    double t = t0;
    double a = init.alpha, b = init.beta, l = init.lambda, nu = init.nu;
    traj.samples.push_back(make_sample(t, a, b, l, nu, c));

    const double h = opts.dt;
    // One RK4 stage: nu is recovered from the constraint at the stage state,
    // so the algebraic condition never drifts beyond the Newton tolerance.
    auto stage = [&](double sa, double sb, double sl, double& stage_nu, OdeRhs& out) -> bool {
        const NuSolve ns = solve_nu(sa, sb, sl, stage_nu, c, opts);
        if (!ns.ok) {
            traj.status = ns.fold ? IntegrationStatus::FoldPoint : IntegrationStatus::NewtonStall;
            traj.message = (ns.fold ? std::string("constraint fold point (d/dnu = 0)")
                                    : std::string("Newton solve for nu did not converge")) +
                           " at t = " + format17(t);
            return false;
        }
        stage_nu = ns.nu;
        out = rhs_at(sa, sb, sl, ns.nu, c);
        return true;
    };

    while (t < t1 - 0.5 * h) {
        double n1 = nu, n2 = nu, n3 = nu, n4 = nu;
        OdeRhs k1, k2, k3, k4;
        if (!stage(a, b, l, n1, k1)) return traj;
        if (!stage(a + 0.5 * h * k1.dalpha, b + 0.5 * h * k1.dbeta, l + 0.5 * h * k1.dlambda, n2,
                   k2))
            return traj;
        if (!stage(a + 0.5 * h * k2.dalpha, b + 0.5 * h * k2.dbeta, l + 0.5 * h * k2.dlambda, n3,
                   k3))
            return traj;
        if (!stage(a + h * k3.dalpha, b + h * k3.dbeta, l + h * k3.dlambda, n4, k4)) return traj;

        a += h / 6.0 * (k1.dalpha + 2.0 * k2.dalpha + 2.0 * k3.dalpha + k4.dalpha);
        b += h / 6.0 * (k1.dbeta + 2.0 * k2.dbeta + 2.0 * k3.dbeta + k4.dbeta);
        l += h / 6.0 * (k1.dlambda + 2.0 * k2.dlambda + 2.0 * k3.dlambda + k4.dlambda);
        t += h;

        if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(l)) {
            traj.status = IntegrationStatus::NonFinite;
            traj.message = "state became non-finite at t = " + format17(t);
            return traj;
        }
        if (std::abs(b) < opts.beta_floor) {
            traj.status = IntegrationStatus::BetaFloor;
            traj.message = "|beta| fell below floor at t = " + format17(t);
            return traj;
        }

        const NuSolve ns = solve_nu(a, b, l, nu, c, opts);
        if (!ns.ok) {
            traj.status = ns.fold ? IntegrationStatus::FoldPoint : IntegrationStatus::NewtonStall;
            traj.message = "constraint solve failed at emitted sample, t = " + format17(t);
            return traj;
        }
        nu = ns.nu;
        traj.samples.push_back(make_sample(t, a, b, l, nu, c));
    }
    return traj;
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
    out << "t,alpha,beta,lambda,nu,constraint_residual,rho_star_half\n";
    for (const auto& s : traj.samples) {
        out << format17(s.t) << ',' << format17(s.alpha) << ',' << format17(s.beta) << ','
            << format17(s.lambda) << ',' << format17(s.nu) << ','
            << format17(s.constraint_residual) << ',' << format17(s.rho_star_half) << '\n';
    }
}

} // namespace hyplab
