#include "ssclaim/benefits.hpp"

#include <cmath>

#include "checks.hpp"
#include "ssclaim/types.hpp"

namespace ssclaim {

using detail::require;
using detail::require_non_negative;
using detail::require_positive;
using detail::require_rate_above_minus_one;

double compound(double rate, double t) {
    return std::exp(t * std::log1p(rate));
}

double annuity_factor(double rate, double t) {
    if (rate == 0.0) return t;
    return std::expm1(t * std::log1p(rate)) / rate;
}

double reduced_benefit(double K, double p, double S0) {
    require_non_negative(K, "K");
    require_rate_above_minus_one(p, "p");
    require_positive(S0, "S0");
    return S0 / compound(p, K);
}

double cumulative_early(double K, double n, double p, double S0) {
    require_non_negative(n, "n");
    return (K + n) * reduced_benefit(K, p, S0);
}

double cumulative_late(double n, double S0) {
    require_non_negative(n, "n");
    require_positive(S0, "S0");
    return n * S0;
}

double breakeven_no_cola(double K, double p) {
    require_positive(K, "K");
    require_positive(p, "p");
    return K / std::expm1(K * std::log1p(p));
}

double cola_adjusted_start(double K, double p, double q, double S0) {
    require_non_negative(q, "q");
    return reduced_benefit(K, p, S0) / compound(q, K);
}

double cumulative_early_cola(double K, double n, double p, double q, double S0) {
    require_non_negative(q, "q");
    if (cola_negligible(q)) return cumulative_early(K, n, p, S0);
    require_non_negative(n, "n");
    return cola_adjusted_start(K, p, q, S0) * annuity_factor(q, K + n);
}

double cumulative_late_cola(double n, double q, double S0) {
    require_non_negative(q, "q");
    if (cola_negligible(q)) return cumulative_late(n, S0);
    require_non_negative(n, "n");
    require_positive(S0, "S0");
    return S0 * annuity_factor(q, n);
}

double breakeven_cola(double K, double p, double q) {
    require_non_negative(q, "q");
    if (cola_negligible(q)) return breakeven_no_cola(K, p);
    require_positive(K, "K");
    require_positive(p, "p");
    const double lp = std::log1p(p);
    const double lq = std::log1p(q);
    // ((1+p)^K (1+q)^K - 1) / ((1+q)^K ((1+p)^K - 1))
    const double ratio = std::expm1(K * (lp + lq)) / (std::exp(K * lq) * std::expm1(K * lp));
    return std::log(ratio) / lq;
}

double market_sum_at_70(double K, double p, double r, double S0) {
    require_non_negative(r, "r");
    return reduced_benefit(K, p, S0) * annuity_factor(r, K);
}

double cumulative_early_market(double K, double n, double p, double r, double S0) {
    require_non_negative(n, "n");
    require_non_negative(r, "r");
    const double start = reduced_benefit(K, p, S0);
    return start * (annuity_factor(r, K) * compound(r, n) + n);
}

double market_sum_at_70_cola(double K, double p, double q, double r, double S0) {
    require_non_negative(q, "q");
    if (cola_negligible(q)) return market_sum_at_70(K, p, r, S0);
    require_non_negative(r, "r");
    const double combined = q + r + q * r;  // (1+q)(1+r) - 1
    require(combined != 0.0, "(1+q)(1+r) must differ from 1");
    return cola_adjusted_start(K, p, q, S0) * annuity_factor(combined, K);
}

double cumulative_early_market_cola(double K, double n, double p, double q, double r, double S0) {
    require_non_negative(q, "q");
    if (cola_negligible(q)) return cumulative_early_market(K, n, p, r, S0);
    require_non_negative(n, "n");
    return market_sum_at_70_cola(K, p, q, r, S0) * compound(r, n) +
           reduced_benefit(K, p, S0) * annuity_factor(q, n);
}

}  // namespace ssclaim
