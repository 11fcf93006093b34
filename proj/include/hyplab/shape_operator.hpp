#pragma once

#include "hyplab/frame.hpp"

namespace hyplab {

// Shape operator of a real hypersurface in the (W, X, Y) frame.  The frame
// is chosen so that the (W, Y) entry vanishes and beta >= 0 in canonical
// form; a general symmetric operator enters through canonical_frame below.
//
//     A = | alpha  beta    0  |
//         | beta   lambda  mu |
//         | 0      mu      nu |
struct ShapeOperator {
    double alpha = 0.0;
    double beta = 0.0;
    double lambda = 0.0;
    double mu = 0.0;
    double nu = 0.0;

    Mat3 matrix() const {
        Mat3 a;
        a << alpha, beta, 0,
             beta, lambda, mu,
             0, mu, nu;
        return a;
    }

    // m = trace A, the mean-curvature-like symbol of the Ricci formula.
    double trace() const { return alpha + lambda + nu; }

    Vec3 apply(const Vec3& v) const { return matrix() * v; }

    bool hopf(double tol = 0.0) const { return std::abs(beta) <= tol; }
};

struct CanonicalFrameResult {
    ShapeOperator op;
    double psi = 0.0;      // rotation angle applied to the (X, Y) plane
    bool hopf_flag = false; // AW has no W-perp part; frame non-unique, psi = 0
    Mat3 rotation;          // basis change P; P^T * input * P == op.matrix()
};

// Rotate the (X, Y) plane so the (W, Y) entry vanishes and beta >= 0.
// The input must be symmetric with the W axis first.
CanonicalFrameResult canonical_frame(const Mat3& a_full, double hopf_tol = 0.0);

} // namespace hyplab
