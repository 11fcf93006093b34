#pragma once

#include "hyplab/curvature.hpp"

#include <array>
#include <span>
#include <vector>

namespace hyplab {

// Residual-based pointwise classification of a shape operator.  Every "iff"
// condition is reported as a two-sided residual next to its boolean verdict,
// so tolerance semantics stay explicit.
struct ConditionReport {
    std::array<double, 2> pseudo_ryan_raw{};  // left-minus-right of the two criteria
    bool pseudo_ryan_refined = false;
    double pseudo_ryan_refined_residual = 0.0; // |beta^2 nu^2 + (4c+lambda nu)(alpha(lambda-nu)-beta^2)|
    bool pseudo_ryan_oracle = false;
    double pseudo_ryan_oracle_residual = 0.0;  // normalized W-perp block of [R(X,Y), S]
    bool ruled = false;
    bool hopf = false;
    bool pseudo_einstein = false; // meaningful only when hopf is true
    double star_scalar_half = 0.0; // rho*/2 = 4c + lambda nu - mu^2
    double sigma = 0.0;            // -lambda nu, the case (ii) constant
    double case_i_residual = 0.0;
    double case_ii_residual = 0.0;
    bool case_ii_defined = false;  // false when nu = 0
    bool rank_warning = false;     // rank A <= 1 cannot occur on a hypersurface
};

struct PseudoRyanReport {
    std::array<double, 2> raw{};
    bool refined = false;
    double refined_residual = 0.0;
    bool oracle = false;
    double oracle_residual = 0.0;
};

// Raw criteria (firstCRcond/secondCRcond), the mu = 0 refinement, and the
// curvature-commutator oracle <(R(X,Y).S)Xi, Xj> on W-perp.  The oracle
// residual is normalized by (1 + |A|^2) before the tolerance comparison.
PseudoRyanReport pseudo_ryan(const ShapeOperator& a, const SpaceForm& sf, double tol = 1e-9);

struct ScanResult {
    bool constant = false;
    double spread = 0.0; // max - min of rho* over the samples
};

// Checks constancy of rho* along the supplied samples.  Pointwise W-perp
// proportionality of S* holds identically at n = 2, so only the spread of
// the *-scalar curvature is examined.  Verdict is "along samples" only.
ScanResult star_einstein_scan(std::span<const ShapeOperator> samples, const SpaceForm& sf,
                              double tol = 1e-9);

// Hopf pointwise pseudo-Einstein criterion: alpha = 0 or the two W-perp
// principal curvatures agree.  Rejects non-Hopf input.
bool pseudo_einstein_hopf(const ShapeOperator& a, const SpaceForm& sf, double tol = 1e-9);

// A W-perp is contained in span W: lambda = mu = nu = 0 with beta > tol.
bool is_ruled(const ShapeOperator& a, double tol = 1e-9);

struct CaseResiduals {
    double case_i = 0.0;  // beta^2 (nu^2 - 4c) - 4 c alpha nu
    double case_ii = 0.0; // beta^2 nu^2 - (4c - sigma)(alpha(nu + sigma/nu) + beta^2)
    bool case_ii_defined = false;   // nu != 0
    bool sigma_admissible = false;  // sigma != 0 and sigma != 4c
};

CaseResiduals case_conditions(const ShapeOperator& a, const SpaceForm& sf, double sigma);

ConditionReport classify_point(const ShapeOperator& a, const SpaceForm& sf, double tol = 1e-9);

} // namespace hyplab
