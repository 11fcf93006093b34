#include "hyplab/conditions.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace hyplab {

namespace {

double refined_residual_value(const ShapeOperator& a, double c) {
    const double k0 = 4.0 * c + a.lambda * a.nu;
    return a.beta * a.beta * a.nu * a.nu +
           k0 * (a.alpha * (a.lambda - a.nu) - a.beta * a.beta);
}

} // namespace

PseudoRyanReport pseudo_ryan(const ShapeOperator& a, const SpaceForm& sf, double tol) {
    const double c = sf.c;
    const double k = 4.0 * c + a.lambda * a.nu - a.mu * a.mu;
    const double b2 = a.beta * a.beta;

    PseudoRyanReport rep;
    rep.raw[0] = a.mu * (b2 * a.nu - a.alpha * k);
    rep.raw[1] = b2 * (a.mu * a.mu - a.nu * a.nu) - k * (a.alpha * (a.lambda - a.nu) - b2);

    rep.refined_residual = std::abs(refined_residual_value(a, c));
    rep.refined = std::abs(a.mu) <= tol && rep.refined_residual <= tol;

    // Oracle: W-perp block of R(X,Y) S - S R(X,Y), both factors built through
    // the Gauss-equation and trace routes rather than the closed-form matrices.
    const Mat3 r = gauss_curvature(a, sf, frame_x(), frame_y());
    const Mat3 s = ricci(a, sf, RicciMode::TraceOracle);
    const Mat3 comm = r * s - s * r;
    const double block = comm.block<2, 2>(1, 1).cwiseAbs().maxCoeff();
    const double scale = 1.0 + a.matrix().squaredNorm();
    rep.oracle_residual = block / scale;
    rep.oracle = rep.oracle_residual <= tol;
    return rep;
}

ScanResult star_einstein_scan(std::span<const ShapeOperator> samples, const SpaceForm& sf,
                              double tol) {
    if (samples.empty())
        throw std::invalid_argument("star_einstein_scan: empty sample list");
    double lo = star_scalar(samples[0], sf);
    double hi = lo;
    for (const auto& a : samples) {
        const double rho = star_scalar(a, sf);
        lo = std::min(lo, rho);
        hi = std::max(hi, rho);
    }
    return ScanResult{hi - lo <= tol, hi - lo};
}

bool pseudo_einstein_hopf(const ShapeOperator& a, const SpaceForm& sf, double tol) {
    (void)sf;
    if (std::abs(a.beta) > tol)
        throw std::invalid_argument("pseudo_einstein_hopf: operator is not Hopf");
    if (std::abs(a.alpha) <= tol)
        return true;
    // Diagonalize the W-perp block; mu is absorbed by a rotation of (X, Y).
    const double tr = a.lambda + a.nu;
    const double disc = std::sqrt(std::max(0.0, (a.lambda - a.nu) * (a.lambda - a.nu) +
                                                    4.0 * a.mu * a.mu));
    const double l1 = 0.5 * (tr + disc);
    const double l2 = 0.5 * (tr - disc);
    return std::abs(l1 - l2) <= tol;
}

bool is_ruled(const ShapeOperator& a, double tol) {
    return std::abs(a.lambda) <= tol && std::abs(a.mu) <= tol && std::abs(a.nu) <= tol &&
           std::abs(a.beta) > tol;
}

CaseResiduals case_conditions(const ShapeOperator& a, const SpaceForm& sf, double sigma) {
    const double c = sf.c;
    const double b2 = a.beta * a.beta;
    CaseResiduals res;
    res.case_i = b2 * (a.nu * a.nu - 4.0 * c) - 4.0 * c * a.alpha * a.nu;
    res.sigma_admissible = sigma != 0.0 && std::abs(sigma - 4.0 * c) > 1e-12;
    res.case_ii_defined = std::abs(a.nu) > 1e-12;
    if (res.case_ii_defined) {
        res.case_ii = b2 * a.nu * a.nu -
                      (4.0 * c - sigma) * (a.alpha * (a.nu + sigma / a.nu) + b2);
    } else {
        res.case_ii = std::numeric_limits<double>::quiet_NaN();
    }
    return res;
}

ConditionReport classify_point(const ShapeOperator& a, const SpaceForm& sf, double tol) {
    ConditionReport rep;
    const PseudoRyanReport pr = pseudo_ryan(a, sf, tol);
    rep.pseudo_ryan_raw = pr.raw;
    rep.pseudo_ryan_refined = pr.refined;
    rep.pseudo_ryan_refined_residual = pr.refined_residual;
    rep.pseudo_ryan_oracle = pr.oracle;
    rep.pseudo_ryan_oracle_residual = pr.oracle_residual;

    rep.ruled = is_ruled(a, tol);
    rep.hopf = a.hopf(tol);
    rep.pseudo_einstein = rep.hopf && pseudo_einstein_hopf(a, sf, tol);
    rep.star_scalar_half = 4.0 * sf.c + a.lambda * a.nu - a.mu * a.mu;

    rep.sigma = -a.lambda * a.nu;
    const CaseResiduals cr = case_conditions(a, sf, rep.sigma);
    rep.case_i_residual = cr.case_i;
    rep.case_ii_residual = cr.case_ii;
    rep.case_ii_defined = cr.case_ii_defined;

    // rank A <= 1 cannot occur on a hypersurface in CP^2 or CH^2.
    Eigen::JacobiSVD<Mat3> svd(a.matrix());
    const int rank = (svd.singularValues().array() > tol).count();
    rep.rank_warning = rank <= 1;
    return rep;
}

} // namespace hyplab
