#pragma once

#include <cmath>
#include <stdexcept>

namespace hyplab {

// Ambient complex space form: CP^n for c > 0, CH^n for c < 0, with
// holomorphic sectional curvature 4c and scale r satisfying c*r^2 = +/-1.
struct SpaceForm {
    int n = 2;      // complex dimension; frame-matrix operations assume n = 2
    double c = 1.0; // holomorphic sectional curvature / 4, nonzero
    double r = 1.0; // positive scale

    static SpaceForm from_c(double c, int n = 2) {
        if (c == 0.0 || !std::isfinite(c))
            throw std::invalid_argument("SpaceForm: c must be finite and nonzero");
        if (n < 2)
            throw std::invalid_argument("SpaceForm: n must be >= 2");
        return SpaceForm{n, c, 1.0 / std::sqrt(std::abs(c))};
    }

    static SpaceForm projective(double r, int n = 2) {
        check_r(r);
        return SpaceForm{n, 1.0 / (r * r), r};
    }

    static SpaceForm hyperbolic(double r, int n = 2) {
        check_r(r);
        return SpaceForm{n, -1.0 / (r * r), r};
    }

    bool valid() const {
        return n >= 2 && r > 0.0 && std::abs(c * r * r - (c > 0 ? 1.0 : -1.0)) < 1e-12;
    }

  private:
    static void check_r(double r) {
        if (!(r > 0.0) || !std::isfinite(r))
            throw std::invalid_argument("SpaceForm: r must be positive");
    }
};

} // namespace hyplab
