#pragma once

#include "hyplab/space_form.hpp"

#include <Eigen/Dense>

#include <functional>
#include <iosfwd>
#include <vector>

namespace hyplab {

using CMat3 = Eigen::Matrix3cd;
using CVec3 = Eigen::Vector3cd;

// Framed curves in CP^2 / CH^2 realized in the isometry group of the ambient
// Hermitian form: U(3) for c > 0, U(2,1) for c < 0.  A frame matrix g has
// columns (f1, f2, f0) where f1 is the lift of the tangent T, f2 the lift of
// the transverse direction N, and f0 the unit position lift (the ambient
// position is r * f0).  Real frame vectors are recovered as T ~ f1,
// JT ~ i f1, N ~ f2, JN ~ i f2.  Pseudo-unitarity g* J g = J holds with
// J = identity (c > 0) or diag(1, 1, -1) (c < 0); the position column sits
// last so that the same J works for both signs.
struct FramedCurveSpec {
    std::function<double(double)> k0;  // holomorphic curvature
    std::function<double(double)> k1;  // transverse curvature
    std::function<double(double)> tau; // torsion
    SpaceForm sf{};
};

struct GroupFrame {
    CMat3 g = CMat3::Identity();
    SpaceForm sf{};
};

const CMat3& signature_matrix(const SpaceForm& sf);

// |g* J g - J|, the pseudo-unitarity residual.
double group_residual(const GroupFrame& f);

// Lie-algebra element M (with M* J + J M = 0 exactly) generating unit-speed
// translation along T with the prescribed Frenet derivatives
//   T' = k0 JT + k1 N,   N' = -k1 T + tau JN.
CMat3 frenet_generator(double k0, double k1, double tau, const SpaceForm& sf);

// RK4 on g' = g M(t) with a pseudo-unitary re-projection every step.
std::vector<GroupFrame> integrate_frame(const GroupFrame& g0, const FramedCurveSpec& spec,
                                        double t0, double t1, double dt);

struct FrenetSamples {
    std::vector<double> t;
    std::vector<double> k0;
    std::vector<double> k1;
    std::vector<double> tau;
    // Largest residual among the Frenet components that must vanish
    // (diagnoses a too-coarse grid).
    double max_off_residual = 0.0;
};

// Oracle direction: numerically differentiate the frame columns, project
// onto the ambient covariant derivative, and read off the invariants.
// Requires >= 3 samples on a uniform grid; interior points only.
FrenetSamples extract_frenet(const std::vector<GroupFrame>& frames, double t0, double dt);

// CSV export: t followed by Re/Im of the nine matrix entries.
void write_frames_csv(std::ostream& out, const std::vector<GroupFrame>& frames, double t0,
                      double dt);

} // namespace hyplab
