#include "ssclaim/optimize.hpp"

#include <algorithm>
#include <cmath>

#include "checks.hpp"
#include "ssclaim/gain.hpp"
#include "ssclaim/solvers.hpp"

namespace ssclaim {

namespace {

constexpr double kScanStep = 0.05;

void check_opt_args(double p, double q, double r) {
    detail::require_positive(p, "p");
    detail::require_non_negative(q, "q");
    detail::require(std::isfinite(r) && r > q, "r must exceed q");
}

double clamp_offset(double K) { return std::clamp(K, 1.0, kMaxClaimOffset); }

}  // namespace

OptResult k_opt_at_n(double n, double p, double q, double r) {
    detail::require_positive(n, "n");
    check_opt_args(p, q, r);

    auto value = [&](double K) { return gain_cola(K, n, p, q, r); };
    auto slope = [&](double K) { return k_stationarity(K, n, p, q, r); };

    // Candidates: the two window ends plus every interior local maximum,
    // i.e. each place the K-derivative turns from positive to negative.
    // K -> 0 means claiming at 70, where the gain is exactly zero.
    double best_K = 0.0;
    double best_gain = 0.0;
    bool best_is_boundary = true;
    auto consider = [&](double K, double g, bool boundary) {
        if (g > best_gain || (g == best_gain && !boundary)) {
            best_K = K;
            best_gain = g;
            best_is_boundary = boundary;
        }
    };
    consider(kMaxClaimOffset, value(kMaxClaimOffset), true);

    const auto cells = static_cast<int>(std::ceil((kMaxClaimOffset - kMinClaimOffset) / kScanStep));
    double lo = kMinClaimOffset;
    double s_lo = slope(lo);
    SolverConfig cfg;
    cfg.abs_tol = 1e-13;
    for (int i = 1; i <= cells; ++i) {
        const double hi = std::min(kMinClaimOffset + i * kScanStep, kMaxClaimOffset);
        const double s_hi = slope(hi);
        if (s_lo > 0.0 && s_hi <= 0.0) {
            const double K = s_hi == 0.0 ? hi : find_root(slope, lo, hi, cfg).root;
            consider(K, value(K), K == kMaxClaimOffset);
        }
        lo = hi;
        s_lo = s_hi;
    }

    OptResult result;
    result.K_opt = best_K;
    result.gain_at_opt = best_gain;
    result.clamped = best_is_boundary;
    result.n_eval = n;
    result.K_floor = clamp_offset(std::floor(best_K));
    result.K_ceil = clamp_offset(std::ceil(best_K));
    result.gain_floor = value(result.K_floor);
    result.gain_ceil = value(result.K_ceil);
    return result;
}

OptResult k_opt_maximin(double p, double q, double r) {
    check_opt_args(p, q, r);
    return k_opt_at_n(n_star(q, r), p, q, r);
}

}  // namespace ssclaim
