#pragma once

#include <vector>

#include "ssclaim/solvers.hpp"
#include "ssclaim/types.hpp"

namespace ssclaim {

/// Bracket for the r* solve: [q + kRStarLowerOffset, kRStarUpper].
inline constexpr double kRStarLowerOffset = 1e-6;
inline constexpr double kRStarUpper = 0.25;

/// Root-finder settings for r*. Tighter than the default so that n* =
/// 1/ln(1+r*) is accurate to ~1e-12 years.
SolverConfig critical_solver_config();

/// The r* > 0 with gain(K, n*(r*), p, r*) = 0.
CriticalPoint r_star_no_cola(double K, double p);

/// The r* > q with gain_cola(K, n*(q, r*), p, q, r*) = 0, solved in r alone
/// by substituting the explicit n*(q, r). Negligible q delegates to
/// r_star_no_cola.
CriticalPoint r_star_cola(double K, double p, double q);

/// Minimum gains with |g| at or below this are classified as a double root.
inline constexpr double kDoubleRootTolerance = 1e-8;

/// All n > 0 where the gain crosses (or touches) zero, ascending.
/// r > q: none above r*, {n*} at r*, two roots below r*.
/// r <= q (with COLA): the gain decreases monotonically, at most one root.
std::vector<double> gain_zero_crossings(double K, const RateParams& params);

/// Ages (years after 70) at which the gain curves for two claiming offsets
/// intersect, located by scanning their difference.
std::vector<double> gain_curve_crossings(double K_a, double K_b, const RateParams& params,
                                         const SolverConfig& cfg = {});

}  // namespace ssclaim
