#pragma once

#include "ssclaim/types.hpp"

namespace ssclaim {

/// Relative gain of the early-with-market scenario over the late one at 70+n:
/// (T_E^M - T_L) / T_L. Positive means the early claimer is ahead.
double gain(double K, double n, double p, double r);

/// Gain with COLAs, (T_E^MC - T_L^C) / T_L^C. Reduces to gain() for q below
/// kColaEpsilon.
double gain_cola(double K, double n, double p, double q, double r);

/// Dispatches on params.q.
double gain_at(double K, double n, const RateParams& params);

/// Analytic dg/dn for the no-COLA gain.
double gain_dn(double K, double n, double p, double r);

/// Analytic partial derivative of gain_cola in n.
double gain_cola_dn(double K, double n, double p, double q, double r);

/// Analytic partial derivative of gain_cola in K (K treated as continuous).
double gain_cola_dK(double K, double n, double p, double q, double r);

/// (1+p)^K * gain_cola_dK: the stationarity residual in the form
/// B{(1+r)^K ln((1+r)/(1+p)) + ln((1+p)(1+q))/(1+q)^K} - ln(1+p).
/// Same sign and roots as gain_cola_dK, better scaled for root finding.
double k_stationarity(double K, double n, double p, double q, double r);

/// Location of the gain minimum without COLA: 1 / ln(1+r).
double n_star_no_cola(double r);

/// Location of the gain minimum with COLA, r > q > 0:
/// ln{ln(1+r) / ln((1+r)/(1+q))} / ln(1+q).
double n_star_cola(double q, double r);

/// n_star_cola, or n_star_no_cola for negligible q.
double n_star(double q, double r);

/// Samples the gain on [n_from, n_to] with the given step (n_to included
/// when it lands on the grid).
GainCurve sample_gain_curve(double K, const RateParams& params, double n_from, double n_to,
                            double step);

}  // namespace ssclaim
