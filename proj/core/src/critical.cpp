#include "ssclaim/critical.hpp"

#include <cmath>
#include <sstream>

#include "checks.hpp"
#include "ssclaim/gain.hpp"

namespace ssclaim {

SolverConfig critical_solver_config() {
    SolverConfig cfg;
    cfg.abs_tol = 1e-15;
    return cfg;
}

namespace {

CriticalPoint solve_r_star(Variant variant, double K, double p, double q,
                           const ScalarFunction& min_gain, double lo) {
    RootReport report = find_root(min_gain, lo, kRStarUpper, critical_solver_config());
    if (!report.converged()) {
        std::ostringstream msg;
        msg << "r* solve did not converge after " << report.iterations << " iterations (K=" << K
            << ", p=" << p << ", q=" << q << ")";
        throw SolverError(msg.str());
    }
    CriticalPoint cp;
    cp.variant = variant;
    cp.K = K;
    cp.params = {p, q, report.root};
    cp.r_star = report.root;
    cp.n_star = n_star(q, report.root);
    cp.residual = report.residual;
    cp.iterations = report.iterations;
    return cp;
}

}  // namespace

CriticalPoint r_star_no_cola(double K, double p) {
    detail::require_positive(K, "K");
    detail::require_positive(p, "p");
    auto min_gain = [K, p](double r) { return gain(K, n_star_no_cola(r), p, r); };
    return solve_r_star(Variant::NoCola, K, p, 0.0, min_gain, kRStarLowerOffset);
}

CriticalPoint r_star_cola(double K, double p, double q) {
    detail::require_non_negative(q, "q");
    if (cola_negligible(q)) {
        CriticalPoint cp = r_star_no_cola(K, p);
        cp.params.q = q;
        return cp;
    }
    detail::require_positive(K, "K");
    detail::require_positive(p, "p");
    auto min_gain = [K, p, q](double r) { return gain_cola(K, n_star_cola(q, r), p, q, r); };
    return solve_r_star(Variant::WithCola, K, p, q, min_gain, q + kRStarLowerOffset);
}

namespace {

constexpr double kSmallestAge = 1e-9;
constexpr double kLargestAge = 1e4;

// First n in lo, 2lo, 4lo, ... (capped) where pred holds; NaN when none.
template <typename Pred>
double expand_until(double start, double cap, Pred pred) {
    for (double n = start; n <= cap; n *= 2.0) {
        if (pred(n)) return n;
    }
    return pred(cap) ? cap : std::nan("");
}

// Largest n in start, start/2, ... (floored) where pred holds; NaN when none.
template <typename Pred>
double shrink_until(double start, double floor, Pred pred) {
    for (double n = start; n >= floor; n *= 0.5) {
        if (pred(n)) return n;
    }
    return std::nan("");
}

}  // namespace

std::vector<double> gain_zero_crossings(double K, const RateParams& params) {
    validate(params);
    detail::require_positive(K, "K");
    auto g = [&](double n) { return gain_at(K, n, params); };
    auto positive = [&](double n) { return g(n) > 0.0; };
    auto negative = [&](double n) { return g(n) < 0.0; };
    const SolverConfig cfg;

    const bool has_minimum = params.r > params.q && params.r > 0.0;
    if (!has_minimum) {
        // Monotonically decreasing from +inf: at most one root.
        const double lo = shrink_until(1.0, kSmallestAge, positive);
        const double hi = expand_until(1.0, kLargestAge, negative);
        if (std::isnan(lo) || std::isnan(hi)) return {};
        if (hi <= lo) return {};
        return {find_root(g, lo, hi, cfg).root};
    }

    const double ns = n_star(params.q, params.r);
    const double g_min = g(ns);
    if (g_min > kDoubleRootTolerance) return {};
    if (std::fabs(g_min) <= kDoubleRootTolerance) return {ns};

    std::vector<double> roots;
    const double lo = shrink_until(ns * 0.5, kSmallestAge, positive);
    if (!std::isnan(lo)) roots.push_back(find_root(g, lo, ns, cfg).root);
    const double hi = expand_until(ns * 2.0, kLargestAge, positive);
    if (!std::isnan(hi)) roots.push_back(find_root(g, ns, hi, cfg).root);
    return roots;
}

std::vector<double> gain_curve_crossings(double K_a, double K_b, const RateParams& params,
                                         const SolverConfig& cfg) {
    validate(params);
    detail::require_positive(K_a, "K_a");
    detail::require_positive(K_b, "K_b");
    auto diff = [&](double n) { return gain_at(K_a, n, params) - gain_at(K_b, n, params); };
    std::vector<double> out;
    for (const RootReport& report : find_all_roots(diff, cfg)) out.push_back(report.root);
    return out;
}

}  // namespace ssclaim
