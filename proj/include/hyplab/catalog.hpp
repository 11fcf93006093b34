#pragma once

#include "hyplab/space_form.hpp"

#include <string>
#include <vector>

namespace hyplab {

// Scalar models of the homogeneous Hopf hypersurfaces (Takagi's list for
// CP^n, Montiel's list for CH^n).  Entries are parameterized by the Hopf
// principal curvature alpha and the quadratic identities the principal
// curvatures satisfy, not by tube radius.
enum class HopfType { A0, A1, A2, B };

// Which root of the type-A quadratic lambda^2 = alpha lambda + c to use.
// Both branches are geometrically realized (e.g. geodesic spheres vs tubes
// over CH^{n-1} in the hyperbolic case).
enum class Branch { Plus, Minus };

struct PrincipalSpace {
    double value = 0.0;
    int multiplicity = 0;
    int phi_partner = 0; // index into the curvature list; self for phi-invariant spaces
};

struct HomogeneousEntry {
    HopfType kind{};
    SpaceForm sf{};
    double alpha = 0.0;
    std::vector<PrincipalSpace> wperp_curvatures;
    bool star_einstein = false;
    double rho_star = 0.0;
};

// Builds the entry for the requested type, validating the defining identity:
//   A0: horosphere, c < 0, alpha^2 + 4c = 0, single curvature alpha/2;
//   A1: single phi-invariant curvature with lambda^2 = alpha lambda + c;
//   A2: both roots of the same quadratic, multiplicities 2k and 2(n-1-k),
//       requires n >= 3; *-Einstein iff alpha = 0 (real roots then need c > 0);
//   B:  phi-paired curvatures with lambda1 lambda2 = -c, rho* = 2(n-1)(2n-1)c.
// Throws std::domain_error for inconsistent (kind, alpha, c) combinations.
HomogeneousEntry make_entry(HopfType kind, double alpha, const SpaceForm& sf,
                            Branch branch = Branch::Plus, int a2_k = 1);

// Types C, D, E are never *-Einstein: their curvatures lambda1, lambda3
// satisfy lambda^2 = alpha lambda + c with alpha != 0, so lambda1^2 !=
// lambda3^2.  No curvature tables are kept for them.
struct CdeStatus {
    bool star_einstein = false;
    std::string reason;
};
CdeStatus cde_status();

std::string to_string(HopfType kind);
HopfType hopf_type_from_string(const std::string& s);

} // namespace hyplab
