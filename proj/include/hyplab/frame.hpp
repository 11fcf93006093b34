#pragma once

#include <Eigen/Dense>

namespace hyplab {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Vec4 = Eigen::Vector4d;
using Mat4 = Eigen::Matrix4d;

// Tangent frame order is (W, X, Y) with Y = phi X.  phi annihilates W and
// acts as the complex structure on span{X, Y}: phi X = Y, phi Y = -X.
inline const Mat3& phi_matrix() {
    static const Mat3 phi = [] {
        Mat3 m;
        m << 0, 0, 0,
             0, 0, -1,
             0, 1, 0;
        return m;
    }();
    return phi;
}

// phi^2 = diag(0, -1, -1): zero on W, -identity on the holomorphic plane.
inline const Mat3& phi_squared() {
    static const Mat3 p2 = phi_matrix() * phi_matrix();
    return p2;
}

inline Vec3 frame_w() { return Vec3::Unit(0); }
inline Vec3 frame_x() { return Vec3::Unit(1); }
inline Vec3 frame_y() { return Vec3::Unit(2); }

// Ambient unitary frame (e1, e2, e3, e4) with e2 = J e1 and e4 = J e3.
inline const Mat4& ambient_complex_structure() {
    static const Mat4 j = [] {
        Mat4 m = Mat4::Zero();
        m(1, 0) = 1;  // J e1 = e2
        m(0, 1) = -1; // J e2 = -e1
        m(3, 2) = 1;  // J e3 = e4
        m(2, 3) = -1; // J e4 = -e3
        return m;
    }();
    return j;
}

// Skew operator (u ^ v) z = <v, z> u - <u, z> v.
template <typename Vec>
auto wedge_operator(const Vec& u, const Vec& v) {
    return (u * v.transpose() - v * u.transpose()).eval();
}

} // namespace hyplab
