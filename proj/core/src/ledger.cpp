#include "ssclaim/ledger.hpp"

#include <cmath>

#include "checks.hpp"
#include "ssclaim/types.hpp"

namespace ssclaim {

double simulate_ledger(double K, double n, double p, double q, double r, double S0,
                       LedgerOptions options) {
    detail::require(std::isfinite(K) && K == std::floor(K) && K >= 1.0 && K <= kMaxClaimOffset,
                    "ledger K must be an integer in [1,8]");
    detail::require(std::isfinite(n) && n == std::floor(n) && n >= 0.0,
                    "ledger n must be a non-negative integer");
    detail::require_rate_above_minus_one(p, "p");
    detail::require_non_negative(q, "q");
    detail::require_non_negative(r, "r");
    detail::require_positive(S0, "S0");

    const int early_years = static_cast<int>(K);
    const int late_years = static_cast<int>(n);
    const double cola = options.cola_on ? 1.0 + q : 1.0;

    double payment = S0;
    for (int i = 0; i < early_years; ++i) payment /= (1.0 + p) * cola;
    const double first_payment = payment;

    double portfolio = 0.0;
    double kept = 0.0;
    for (int year = 0; year < early_years; ++year) {
        if (options.invest_before_70) {
            portfolio = portfolio * (1.0 + r) * cola + first_payment;
        } else {
            kept += payment;
        }
        payment *= cola;
    }
    for (int year = 0; year < late_years; ++year) {
        portfolio *= 1.0 + r;
        kept += payment;
        payment *= cola;
    }
    return portfolio + kept;
}

}  // namespace ssclaim
