#include "ssclaim/types.hpp"

#include "checks.hpp"

namespace ssclaim {

void validate(const RateParams& rates) {
    detail::require_finite(rates.p, "p");
    detail::require_finite(rates.q, "q");
    detail::require_finite(rates.r, "r");
    detail::require(rates.p > 0.0 && rates.p < 1.0, "p must be in (0,1)");
    detail::require(rates.q >= 0.0 && rates.q < 1.0, "q must be in [0,1)");
    detail::require(rates.r >= 0.0 && rates.r < 1.0, "r must be in [0,1)");
}

void validate(const ClaimScenario& scenario) {
    detail::require_finite(scenario.K, "K");
    detail::require(scenario.K > 0.0 && scenario.K <= kMaxClaimOffset, "K must be in (0,8]");
    detail::require_positive(scenario.S0, "S0");
}

std::string_view to_string(Variant v) noexcept {
    return v == Variant::NoCola ? "no_cola" : "with_cola";
}

}  // namespace ssclaim
