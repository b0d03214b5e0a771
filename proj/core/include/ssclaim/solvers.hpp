#pragma once

#include <functional>
#include <vector>

namespace ssclaim {

using ScalarFunction = std::function<double(double)>;

struct SolverConfig {
    double abs_tol = 1e-10;
    int max_iter = 200;
    double scan_lo = 0.1;
    double scan_hi = 200.0;
    double scan_step = 0.5;
};

/// Throws DomainError on a config that violates its invariants.
void validate(const SolverConfig& cfg);

enum class RootStatus { Converged, MaxIterations };

struct RootReport {
    double root = 0.0;
    double residual = 0.0;   ///< f(root), signed
    int iterations = 0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    RootStatus status = RootStatus::Converged;
    bool tangential = false; ///< located as a touching minimum of |f|, not a sign change

    bool converged() const noexcept { return status == RootStatus::Converged; }
};

/// Bracketed root of f on [lo, hi]: Brent-style hybrid of bisection, secant
/// and inverse quadratic interpolation. Every iterate keeps a sign change
/// across the bracket. Stops when the bracket is narrower than abs_tol or
/// |f| < 1e-13. Throws NoBracketError when f(lo) and f(hi) share a sign; an
/// exhausted budget is reported through RootReport::status.
RootReport find_root(const ScalarFunction& f, double lo, double hi, const SolverConfig& cfg = {});

/// Below this, a grid minimum of |f| without a sign change counts as a root.
inline constexpr double kTangentialThreshold = 1e-7;

/// Scans [scan_lo, scan_hi] in scan_step increments and refines every sign
/// change with find_root. Grid points where |f| has a local minimum below
/// kTangentialThreshold with no adjacent sign change are refined by a
/// golden-section search on |f| and reported with tangential = true.
/// Roots come back in ascending order.
std::vector<RootReport> find_all_roots(const ScalarFunction& f, const SolverConfig& cfg = {});

}  // namespace ssclaim
