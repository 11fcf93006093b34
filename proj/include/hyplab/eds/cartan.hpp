#pragma once

#include "hyplab/eds/systems.hpp"
#include "hyplab/space_form.hpp"

#include <array>
#include <cstdint>

namespace hyplab::eds {

// Components of a candidate integral direction v against the coframe:
// v -| (w41, w42, w1, w2) = (p, q, a, b).
struct PolarData {
    double a = 0.0;
    double b = 0.0;
    double p = 0.0;
    double q = 0.0;
};

struct CharacteristicResult {
    int rank = 0;  // rank of the 2x4 polar matrix
    int h_dim = 0; // dim H(v) = 8 - (2 + rank)
    bool characteristic = false;
};

// Rank of the polar matrix
//   R = | a            b         -p        -q          |
//       | -2q+alpha b  2p-alpha a  2cb+alpha q  -(2ca+alpha p) |
// which drops below 2 exactly when
//   2(ap+bq) - alpha(a^2+b^2) = 0  and  p^2+q^2+c(a^2+b^2) = 0.
CharacteristicResult characteristic_test(const PolarData& pd, double alpha,
                                         const SpaceForm& sf);

struct CartanReport {
    std::array<int, 4> characters{}; // polar-space codimensions c0..c3
    int character_sum = 0;
    int grassmann_codim = 0; // codimension of the integral-element variety
    int trials = 0;
    bool ok = false; // characters (2,4,4,4), both counts equal to 14
};

// Cartan's test for the Hopf system: polar codimensions along random
// non-characteristic flags inside random integral 4-planes, against an
// independent estimate of the codimension of the integral-element variety
// in the Grassmannian Gr(4,8) (Jacobian rank of the defining equations).
// Requires alpha^2 + 4c != 0.
CartanReport cartan_test_hopf(double alpha, const SpaceForm& sf, int trials,
                              std::uint64_t seed);

// Residual of the integral-element relation 2(lambda nu - mu^2 - c) -
// alpha(lambda + nu) at given values.
double integral_element_residual(double lambda, double mu, double nu, double alpha,
                                 const SpaceForm& sf);

} // namespace hyplab::eds
