#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>

namespace ssclaim::testing {

// Seeded draws for property tests. Fixed seeds keep failures reproducible.
class Draws {
public:
    explicit Draws(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng_);
    }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

private:
    std::mt19937_64 rng_;
};

inline double rel_err(double actual, double expected) {
    return std::fabs(actual - expected) / std::max(std::fabs(expected), 1e-300);
}

}  // namespace ssclaim::testing
