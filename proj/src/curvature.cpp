#include "hyplab/curvature.hpp"

#include <stdexcept>

namespace hyplab {

Vec4 ambient_curvature(const Vec4& x, const Vec4& y, const Vec4& z, const SpaceForm& sf) {
    const Mat4& j = ambient_complex_structure();
    const Vec4 jx = j * x;
    const Vec4 jy = j * y;
    const Mat4 op = wedge_operator(x, y) + wedge_operator(jx, jy) + 2.0 * x.dot(jy) * j;
    return sf.c * (op * z);
}

Mat3 gauss_curvature(const ShapeOperator& a, const SpaceForm& sf, const Vec3& x, const Vec3& y) {
    const Mat3& phi = phi_matrix();
    const Vec3 ax = a.apply(x);
    const Vec3 ay = a.apply(y);
    const Vec3 px = phi * x;
    const Vec3 py = phi * y;
    return wedge_operator(ax, ay) +
           sf.c * (wedge_operator(x, y) + wedge_operator(px, py) + 2.0 * x.dot(py) * phi);
}

Mat3 ricci(const ShapeOperator& a, const SpaceForm& sf, RicciMode mode) {
    if (mode == RicciMode::ClosedForm) {
        const Mat3 am = a.matrix();
        Mat3 s = 5.0 * sf.c * Mat3::Identity() + a.trace() * am - am * am;
        s(0, 0) -= 3.0 * sf.c;
        return s;
    }
    // <S e_b, e_a> = sum_i <R(e_i, e_b) e_a, e_i>
    Mat3 s = Mat3::Zero();
    for (int b = 0; b < 3; ++b) {
        for (int i = 0; i < 3; ++i) {
            const Mat3 r = gauss_curvature(a, sf, Vec3::Unit(i), Vec3::Unit(b));
            for (int aa = 0; aa < 3; ++aa)
                s(aa, b) += (r * Vec3::Unit(aa)).dot(Vec3::Unit(i));
        }
    }
    return s;
}

Mat3 phi_a_squared(const ShapeOperator& a) {
    const Mat3 pa = phi_matrix() * a.matrix();
    return pa * pa;
}

Mat3 star_ricci(const ShapeOperator& a, const SpaceForm& sf, RicciMode mode) {
    if (mode == RicciMode::ClosedForm)
        return -(4.0 * sf.c * phi_squared() + phi_a_squared(a));
    // <S* e_b, e_a> = 1/2 trace(phi o R(e_b, phi e_a))
    const Mat3& phi = phi_matrix();
    Mat3 s = Mat3::Zero();
    for (int b = 0; b < 3; ++b) {
        for (int aa = 0; aa < 3; ++aa) {
            const Vec3 pea = phi * Vec3::Unit(aa);
            const Mat3 r = gauss_curvature(a, sf, Vec3::Unit(b), pea);
            s(aa, b) = 0.5 * (phi * r).trace();
        }
    }
    return s;
}

double star_scalar(const ShapeOperator& a, const SpaceForm& sf) {
    return star_ricci(a, sf).trace();
}

double hopf_residual(const ShapeOperator& a, const SpaceForm& sf) {
    const Mat3& phi = phi_matrix();
    const Mat3 am = a.matrix();
    const Mat3 lhs = am * phi * am;
    const Mat3 rhs = 0.5 * a.alpha * (am * phi + phi * am) + sf.c * phi;
    return (lhs - rhs).norm();
}

double partner_curvature(double lambda, double alpha, const SpaceForm& sf) {
    const double denom = lambda - 0.5 * alpha;
    if (std::abs(denom) < 1e-12)
        throw std::domain_error(
            "partner_curvature: lambda = alpha/2 has no phi-paired curvature");
    return (0.5 * lambda * alpha + sf.c) / denom;
}

Vec3 nabla_w(const ShapeOperator& a, const Vec3& x) {
    return phi_matrix() * a.apply(x);
}

CanonicalFrameResult canonical_frame(const Mat3& a_full, double hopf_tol) {
    const double b1 = a_full(1, 0);
    const double b2 = a_full(2, 0);
    const double beta = std::hypot(b1, b2);

    CanonicalFrameResult res;
    res.hopf_flag = beta <= hopf_tol;
    res.psi = res.hopf_flag ? 0.0 : std::atan2(b2, b1);

    const double cp = std::cos(res.psi);
    const double sp = std::sin(res.psi);
    Mat3 p;
    p << 1, 0, 0,
         0, cp, -sp,
         0, sp, cp;
    res.rotation = p;

    const Mat3 ap = p.transpose() * a_full * p;
    res.op = ShapeOperator{ap(0, 0), beta, ap(1, 1), ap(1, 2), ap(2, 2)};
    return res;
}

} // namespace hyplab
