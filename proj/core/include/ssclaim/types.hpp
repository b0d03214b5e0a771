#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace ssclaim {

/// Rates below this are routed to the no-COLA formulas; the COLA closed
/// forms are singular at q = 0.
inline constexpr double kColaEpsilon = 1e-9;

/// Latest claiming offset: age 62 is eight years before 70.
inline constexpr double kMaxClaimOffset = 8.0;

/// Annual rates, all as decimal fractions (0.08, not 8).
struct RateParams {
    double p = 0.08;   ///< delayed-retirement credit, also used as the early-claim penalty
    double q = 0.0;    ///< average cost-of-living adjustment
    double r = 0.0;    ///< average market return
};

/// Throws DomainError unless p in (0,1), q in [0,1), r in [0,1).
void validate(const RateParams& rates);

struct ClaimScenario {
    double K = 1.0;    ///< years before age 70
    double S0 = 1.0;   ///< annual benefit when claiming at 70
};

/// Throws DomainError unless 0 < K <= 8 and S0 > 0.
void validate(const ClaimScenario& scenario);

enum class Variant : std::uint8_t { NoCola, WithCola };

std::string_view to_string(Variant v) noexcept;

/// True when q is small enough that the no-COLA formulas apply.
constexpr bool cola_negligible(double q) noexcept { return q < kColaEpsilon; }

constexpr Variant variant_for(double q) noexcept {
    return cola_negligible(q) ? Variant::NoCola : Variant::WithCola;
}

struct GainSample {
    double n;
    double g;
};

struct GainCurve {
    Variant variant = Variant::NoCola;
    RateParams params;
    double K = 1.0;
    std::vector<GainSample> samples;
};

/// The market rate r* at which the minimum of the gain over n is exactly zero,
/// and the n* where that minimum sits.
struct CriticalPoint {
    Variant variant = Variant::NoCola;
    double K = 1.0;
    RateParams params;   ///< params.r holds r_star
    double n_star = 0.0;
    double r_star = 0.0;
    double residual = 0.0;
    int iterations = 0;
};

struct OptResult {
    double K_opt = 0.0;
    double K_floor = 1.0;
    double K_ceil = 1.0;
    double gain_floor = 0.0;
    double gain_ceil = 0.0;
    double n_eval = 0.0;
    double gain_at_opt = 0.0;
    bool clamped = false;
};

}  // namespace ssclaim
