#include "hyplab/catalog.hpp"

#include <cmath>
#include <stdexcept>

namespace hyplab {

namespace {

// rho* accumulated over W-perp: each direction paired with product p
// contributes 2nc + p to the trace of S*.
double rho_from_pairs(const std::vector<PrincipalSpace>& spaces, const SpaceForm& sf) {
    double rho = 0.0;
    for (std::size_t i = 0; i < spaces.size(); ++i) {
        const double pair_product = spaces[i].value * spaces[spaces[i].phi_partner].value;
        rho += spaces[i].multiplicity * (2.0 * sf.n * sf.c + pair_product);
    }
    return rho;
}

} // namespace

HomogeneousEntry make_entry(HopfType kind, double alpha, const SpaceForm& sf, Branch branch,
                            int a2_k) {
    const double c = sf.c;
    const int n = sf.n;
    HomogeneousEntry e;
    e.kind = kind;
    e.sf = sf;
    e.alpha = alpha;

    const double disc = alpha * alpha + 4.0 * c;

    switch (kind) {
    case HopfType::A0: {
        if (c >= 0.0)
            throw std::domain_error("catalog: horospheres exist only in CH^n (c < 0)");
        if (std::abs(disc) > 1e-9)
            throw std::domain_error("catalog: A0 requires alpha^2 + 4c = 0");
        // Only alpha/2 occurs as a principal curvature on W-perp.
        e.wperp_curvatures = {{0.5 * alpha, 2 * (n - 1), 0}};
        e.star_einstein = true;
        break;
    }
    case HopfType::A1: {
        if (disc <= 0.0)
            throw std::domain_error("catalog: A1 requires alpha^2 + 4c > 0");
        const double root = 0.5 * (alpha + (branch == Branch::Plus ? 1.0 : -1.0) * std::sqrt(disc));
        e.wperp_curvatures = {{root, 2 * (n - 1), 0}};
        e.star_einstein = true;
        break;
    }
    case HopfType::A2: {
        if (n < 3)
            throw std::domain_error("catalog: type A2 requires n >= 3");
        if (disc <= 0.0)
            throw std::domain_error("catalog: A2 quadratic has no real roots");
        if (a2_k < 1 || a2_k > n - 2)
            throw std::domain_error("catalog: A2 requires 1 <= k <= n-2");
        const double l1 = 0.5 * (alpha + std::sqrt(disc));
        const double l2 = 0.5 * (alpha - std::sqrt(disc));
        e.wperp_curvatures = {{l1, 2 * a2_k, 0}, {l2, 2 * (n - 1 - a2_k), 1}};
        // *-Einstein needs lambda1^2 = lambda2^2, impossible unless alpha = 0.
        e.star_einstein = std::abs(alpha) <= 1e-12;
        break;
    }
    case HopfType::B: {
        if (alpha == 0.0)
            throw std::domain_error("catalog: type B requires alpha != 0");
        // lambda1 lambda2 = -c plus the Hopf identity give
        // lambda^2 + (4c/alpha) lambda - c = 0.
        const double p = 4.0 * c / alpha;
        const double d = p * p + 4.0 * c;
        if (d <= 0.0)
            throw std::domain_error("catalog: type B quadratic has no real roots");
        const double l1 = 0.5 * (-p + std::sqrt(d));
        const double l2 = 0.5 * (-p - std::sqrt(d));
        e.wperp_curvatures = {{l1, n - 1, 1}, {l2, n - 1, 0}};
        e.star_einstein = true;
        break;
    }
    }
    e.rho_star = rho_from_pairs(e.wperp_curvatures, sf);
    return e;
}

CdeStatus cde_status() {
    return CdeStatus{false,
                     "lambda1^2 = lambda3^2 required by the *-Einstein condition "
                     "cannot hold since alpha != 0 for types C, D, E"};
}

std::string to_string(HopfType kind) {
    switch (kind) {
    case HopfType::A0: return "A0";
    case HopfType::A1: return "A1";
    case HopfType::A2: return "A2";
    case HopfType::B: return "B";
    }
    return "?";
}

HopfType hopf_type_from_string(const std::string& s) {
    if (s == "A0") return HopfType::A0;
    if (s == "A1") return HopfType::A1;
    if (s == "A2") return HopfType::A2;
    if (s == "B") return HopfType::B;
    throw std::invalid_argument("unknown homogeneous type: " + s);
}

} // namespace hyplab
