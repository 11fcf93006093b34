#pragma once

#include "hyplab/frame.hpp"
#include "hyplab/shape_operator.hpp"
#include "hyplab/space_form.hpp"

namespace hyplab {

enum class RicciMode { ClosedForm, TraceOracle };

// Ambient curvature operator applied to Z:
//   R~(X,Y)Z = c (X^Y + JX^JY + 2<X,JY> J) Z
// in a unitary frame (e1, e2 = Je1, e3, e4 = Je3).
Vec4 ambient_curvature(const Vec4& x, const Vec4& y, const Vec4& z, const SpaceForm& sf);

// Gauss equation: R(x,y) = Ax ^ Ay + c (x^y + phi x ^ phi y + 2<x, phi y> phi),
// returned as a skew 3x3 operator in the (W, X, Y) frame.  n = 2 only.
Mat3 gauss_curvature(const ShapeOperator& a, const SpaceForm& sf, const Vec3& x, const Vec3& y);

// Ricci tensor.  Closed form is (2n+1)c I - 3c W W^T + m A - A^2 with n = 2;
// the trace oracle sums gauss_curvature over the orthonormal basis.
Mat3 ricci(const ShapeOperator& a, const SpaceForm& sf, RicciMode mode = RicciMode::ClosedForm);

// (phi A)^2 in the (W, X, Y) frame; vanishes exactly for ruled operators.
Mat3 phi_a_squared(const ShapeOperator& a);

// *-Ricci tensor S* = -(2nc phi^2 + (phi A)^2) with n = 2.  The trace oracle
// evaluates <S* x, y> = 1/2 trace(phi o R(x, phi y)).  First row is always
// zero; S* is not symmetric when beta != 0.
Mat3 star_ricci(const ShapeOperator& a, const SpaceForm& sf, RicciMode mode = RicciMode::ClosedForm);

// *-scalar curvature rho* = trace S* = 2 (4c + lambda nu - mu^2).
double star_scalar(const ShapeOperator& a, const SpaceForm& sf);

// Frobenius norm of A phi A - (alpha/2)(A phi + phi A) - c phi, which is zero
// for Hopf operators with compatible principal curvatures.  Only meaningful
// when beta = 0.
double hopf_residual(const ShapeOperator& a, const SpaceForm& sf);

// Solve lambda nu = (lambda + nu)/2 alpha + c for the phi-paired curvature:
// nu = (lambda alpha / 2 + c) / (lambda - alpha/2).  Fails when lambda is
// too close to alpha/2 (possible only if alpha^2 + 4c = 0).
double partner_curvature(double lambda, double alpha, const SpaceForm& sf);

// nabla_x W = phi A x.
Vec3 nabla_w(const ShapeOperator& a, const Vec3& x);

} // namespace hyplab
