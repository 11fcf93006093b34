#pragma once

#include <cstdint>
#include <random>

namespace hyplab {

// Seeded RNG with hand-rolled uniform mapping so that output streams are
// reproducible across standard-library implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Uniform on [-hi, -lo] u [lo, hi]; keeps denominators away from zero.
    double uniform_away_from_zero(double lo, double hi) {
        const double v = uniform(lo, hi);
        return (eng_() & 1u) ? v : -v;
    }

    int uniform_int(int lo, int hi) { // inclusive bounds
        return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    bool coin() { return (eng_() & 1u) != 0; }

    std::uint64_t raw() { return eng_(); }

  private:
    std::mt19937_64 eng_;
};

} // namespace hyplab
