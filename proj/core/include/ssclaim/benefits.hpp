#pragma once

// Benefit streams and cumulative totals for the early (claim K years before
// 70) and late (claim at 70) scenarios. K counts years before 70 and n years
// after 70. Money-valued results scale linearly with S0; break-even points
// do not depend on it.

namespace ssclaim {

/// (1+rate)^t, evaluated through log1p for accuracy at small rates.
double compound(double rate, double t);

/// ((1+rate)^t - 1) / rate, with the t limit at rate = 0.
double annuity_factor(double rate, double t);

/// Annual benefit when claiming K years early: S0 / (1+p)^K.
double reduced_benefit(double K, double p, double S0 = 1.0);

/// Benefits received by the early claimer through age 70+n, no COLA.
double cumulative_early(double K, double n, double p, double S0 = 1.0);

/// Benefits received by the late claimer through age 70+n, no COLA.
double cumulative_late(double n, double S0 = 1.0);

/// Years after 70 at which the two cumulative totals meet: K / ((1+p)^K - 1).
double breakeven_no_cola(double K, double p);

/// First-year benefit of the early claimer once K future COLAs are discounted.
double cola_adjusted_start(double K, double p, double q, double S0 = 1.0);

double cumulative_early_cola(double K, double n, double p, double q, double S0 = 1.0);
double cumulative_late_cola(double n, double q, double S0 = 1.0);

/// COLA break-even ln{((1+p)^K(1+q)^K - 1) / ((1+q)^K((1+p)^K - 1))} / ln(1+q).
/// Falls back to breakeven_no_cola for q below kColaEpsilon.
double breakeven_cola(double K, double p, double q);

/// Value at age 70 of the benefits invested at the end of each early year.
double market_sum_at_70(double K, double p, double r, double S0 = 1.0);

/// Invested balance grown to 70+n plus the n uninvested payments after 70.
double cumulative_early_market(double K, double n, double p, double r, double S0 = 1.0);

/// Invested balance at 70 when benefits carry a COLA:
/// S_K^C * sum_{i<K} ((1+q)(1+r))^i.
double market_sum_at_70_cola(double K, double p, double q, double r, double S0 = 1.0);

double cumulative_early_market_cola(double K, double n, double p, double q, double r,
                                    double S0 = 1.0);

}  // namespace ssclaim
