#pragma once

#include "ssclaim/types.hpp"

namespace ssclaim {

/// Smallest claiming offset searched; the window is (0, 8].
inline constexpr double kMinClaimOffset = 1e-6;

/// Claiming offset in (0, 8] that maximizes gain_cola at a fixed n.
/// Requires r > q >= 0. If no interior maximum beats the window ends the
/// boundary offset comes back with clamped = true (K_opt = 0 stands for
/// claiming at 70).
OptResult k_opt_at_n(double n, double p, double q, double r);

/// Claiming offset that maximizes the minimum gain over n. The minimum sits
/// at n*(q, r) for every K, so this is k_opt_at_n evaluated at n*.
OptResult k_opt_maximin(double p, double q, double r);

}  // namespace ssclaim
