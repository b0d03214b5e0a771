#include "ssclaim/gain.hpp"

#include <cmath>
#include <cstddef>

#include "checks.hpp"
#include "ssclaim/benefits.hpp"

namespace ssclaim {

using detail::require;
using detail::require_non_negative;
using detail::require_positive;

namespace {

void check_gain_args(double K, double n, double p) {
    require_positive(K, "K");
    require_positive(n, "n");
    detail::require_rate_above_minus_one(p, "p");
}

// q (1+r)^n / ((1+q)^n - 1), rearranged so neither power overflows on its
// own; the q -> 0 limit is (1+r)^n / n.
double late_growth_ratio(double n, double q, double r) {
    const double lr = std::log1p(r);
    if (cola_negligible(q)) return std::exp(n * lr) / n;
    const double lq = std::log1p(q);
    return q * std::exp(n * (lr - lq)) / -std::expm1(-n * lq);
}

}  // namespace

double gain(double K, double n, double p, double r) {
    check_gain_args(K, n, p);
    require_non_negative(r, "r");
    const double market = annuity_factor(r, K) * late_growth_ratio(n, 0.0, r);
    return (market + 1.0) / compound(p, K) - 1.0;
}

double gain_cola(double K, double n, double p, double q, double r) {
    require_non_negative(q, "q");
    if (cola_negligible(q)) return gain(K, n, p, r);
    check_gain_args(K, n, p);
    require_non_negative(r, "r");
    const double combined = q + r + q * r;
    const double pre70 = annuity_factor(combined, K) / compound(q, K);
    return (pre70 * late_growth_ratio(n, q, r) + 1.0) / compound(p, K) - 1.0;
}

double gain_at(double K, double n, const RateParams& params) {
    return gain_cola(K, n, params.p, params.q, params.r);
}

double gain_dn(double K, double n, double p, double r) {
    check_gain_args(K, n, p);
    require_non_negative(r, "r");
    const double lr = std::log1p(r);
    return annuity_factor(r, K) / compound(p, K) * std::exp(n * lr) * (n * lr - 1.0) / (n * n);
}

double gain_cola_dn(double K, double n, double p, double q, double r) {
    require_non_negative(q, "q");
    if (cola_negligible(q)) return gain_dn(K, n, p, r);
    check_gain_args(K, n, p);
    require_non_negative(r, "r");
    const double lq = std::log1p(q);
    const double lr = std::log1p(r);
    const double combined = q + r + q * r;
    // A = q / (1+p)^K * ((1+q)^K (1+r)^K - 1) / ((1+q)^K ((1+q)(1+r) - 1))
    const double A = q * annuity_factor(combined, K) / (compound(q, K) * compound(p, K));
    // A (1+r)^n [(1+q)^n ln((1+r)/(1+q)) - ln(1+r)] / ((1+q)^n - 1)^2,
    // with numerator and denominator divided by (1+q)^(2n).
    const double settled = -std::expm1(-n * lq);  // 1 - (1+q)^-n
    return A * std::exp(n * (lr - lq)) * (lr * settled - lq) / (settled * settled);
}

namespace {

// B(n,q,r) = q (1+r)^n / ([(1+q)(1+r) - 1][(1+q)^n - 1])
double b_coefficient(double n, double q, double r) {
    const double combined = q + r + q * r;
    require(combined > 0.0, "(1+q)(1+r) must exceed 1");
    return late_growth_ratio(n, q, r) / combined;
}

void check_dK_args(double K, double n, double p, double q, double r) {
    check_gain_args(K, n, p);
    require_non_negative(q, "q");
    require_non_negative(r, "r");
}

}  // namespace

double gain_cola_dK(double K, double n, double p, double q, double r) {
    check_dK_args(K, n, p, q, r);
    const double B = b_coefficient(n, q, r);
    const double lp = std::log1p(p);
    const double lq = std::log1p(q);
    const double lr = std::log1p(r);
    return B * (std::exp(K * (lr - lp)) * (lr - lp) + std::exp(-K * (lp + lq)) * (lp + lq)) -
           std::exp(-K * lp) * lp;
}

double k_stationarity(double K, double n, double p, double q, double r) {
    check_dK_args(K, n, p, q, r);
    const double B = b_coefficient(n, q, r);
    const double lp = std::log1p(p);
    const double lq = std::log1p(q);
    const double lr = std::log1p(r);
    return B * (std::exp(K * lr) * (lr - lp) + (lp + lq) * std::exp(-K * lq)) - lp;
}

double n_star_no_cola(double r) {
    require_positive(r, "r");
    return 1.0 / std::log1p(r);
}

double n_star_cola(double q, double r) {
    require_non_negative(q, "q");
    if (cola_negligible(q)) return n_star_no_cola(r);
    require(std::isfinite(r) && r > q, "r must exceed q");
    const double lq = std::log1p(q);
    const double lr = std::log1p(r);
    // ln(lr / (lr - lq)) = log1p(lq / (lr - lq))
    return std::log1p(lq / (lr - lq)) / lq;
}

double n_star(double q, double r) {
    return n_star_cola(q, r);
}

GainCurve sample_gain_curve(double K, const RateParams& params, double n_from, double n_to,
                            double step) {
    validate(params);
    require_positive(K, "K");
    require_positive(n_from, "n_from");
    require_positive(step, "step");
    require(std::isfinite(n_to) && n_to >= n_from, "n_to must be >= n_from");

    GainCurve curve;
    curve.variant = variant_for(params.q);
    curve.params = params;
    curve.K = K;
    const auto count = static_cast<std::size_t>(std::floor((n_to - n_from) / step + 1e-9)) + 1;
    curve.samples.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double n = n_from + static_cast<double>(i) * step;
        curve.samples.push_back({n, gain_at(K, n, params)});
    }
    return curve;
}

}  // namespace ssclaim
