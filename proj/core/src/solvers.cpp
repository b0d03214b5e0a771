#include "ssclaim/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "checks.hpp"

namespace ssclaim {

void validate(const SolverConfig& cfg) {
    detail::require(cfg.abs_tol > 0.0, "abs_tol must be > 0");
    detail::require(cfg.max_iter >= 1, "max_iter must be >= 1");
    detail::require(cfg.scan_lo < cfg.scan_hi, "scan_lo must be < scan_hi");
    detail::require(cfg.scan_step > 0.0, "scan_step must be > 0");
}

namespace {

constexpr double kResidualStop = 1e-13;

bool same_sign(double a, double b) { return (a > 0.0) == (b > 0.0); }

RootReport finish(double b, double fb, double c, int iterations, RootStatus status) {
    RootReport report;
    report.root = b;
    report.residual = fb;
    report.iterations = iterations;
    report.bracket_lo = std::min(b, c);
    report.bracket_hi = std::max(b, c);
    report.status = status;
    return report;
}

}  // namespace

RootReport find_root(const ScalarFunction& f, double lo, double hi, const SolverConfig& cfg) {
    detail::require(cfg.abs_tol > 0.0 && cfg.max_iter >= 1, "invalid solver config");
    detail::require(std::isfinite(lo) && std::isfinite(hi) && lo < hi, "bracket must satisfy lo < hi");

    double a = lo;
    double b = hi;
    double fa = f(a);
    double fb = f(b);
    if (fa == 0.0) return finish(a, fa, a, 0, RootStatus::Converged);
    if (fb == 0.0) return finish(b, fb, b, 0, RootStatus::Converged);
    if (!(fa * fb < 0.0)) {
        std::ostringstream msg;
        msg << "no sign change on [" << lo << ", " << hi << "]: f(lo)=" << fa << ", f(hi)=" << fb;
        throw NoBracketError(msg.str(), lo, hi, fa, fb);
    }

    // b is the best estimate, [b, c] always brackets the root, a is the
    // previous b.
    double c = a;
    double fc = fa;
    double d = b - a;
    double e = d;
    constexpr double eps = std::numeric_limits<double>::epsilon();

    for (int iter = 1; iter <= cfg.max_iter; ++iter) {
        if (same_sign(fb, fc)) {
            c = a;
            fc = fa;
            d = e = b - a;
        }
        if (std::fabs(fc) < std::fabs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        const double tol = 2.0 * eps * std::fabs(b) + 0.5 * cfg.abs_tol;
        const double half = 0.5 * (c - b);
        if (std::fabs(half) <= tol || std::fabs(fb) < kResidualStop) {
            return finish(b, fb, c, iter - 1, RootStatus::Converged);
        }

        if (std::fabs(e) >= tol && std::fabs(fa) > std::fabs(fb)) {
            // Secant (a == c) or inverse quadratic interpolation.
            double p;
            double q;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * half * s;
                q = 1.0 - s;
            } else {
                const double qa = fa / fc;
                const double rb = fb / fc;
                p = s * (2.0 * half * qa * (qa - rb) - (b - a) * (rb - 1.0));
                q = (qa - 1.0) * (rb - 1.0) * (s - 1.0);
            }
            if (p > 0.0) {
                q = -q;
            } else {
                p = -p;
            }
            if (2.0 * p < std::min(3.0 * half * q - std::fabs(tol * q), std::fabs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = half;  // bisection
                e = d;
            }
        } else {
            d = half;
            e = d;
        }

        a = b;
        fa = fb;
        b += std::fabs(d) > tol ? d : std::copysign(tol, half);
        fb = f(b);
    }

    if (same_sign(fb, fc)) c = a;
    return finish(b, fb, c, cfg.max_iter, RootStatus::MaxIterations);
}

namespace {

// Minimizes |f| on [lo, hi] by golden-section search.
double argmin_abs(const ScalarFunction& f, double lo, double hi, double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = std::fabs(f(x1));
    double f2 = std::fabs(f(x2));
    for (int i = 0; i < 200 && hi - lo > tol; ++i) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = std::fabs(f(x1));
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = std::fabs(f(x2));
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

std::vector<RootReport> find_all_roots(const ScalarFunction& f, const SolverConfig& cfg) {
    validate(cfg);

    std::vector<double> xs;
    const auto steps = static_cast<long>(std::floor((cfg.scan_hi - cfg.scan_lo) / cfg.scan_step + 1e-9));
    xs.reserve(static_cast<std::size_t>(steps) + 2);
    for (long i = 0; i <= steps; ++i) xs.push_back(cfg.scan_lo + static_cast<double>(i) * cfg.scan_step);
    if (xs.back() < cfg.scan_hi) xs.push_back(cfg.scan_hi);

    std::vector<double> fs(xs.size());
    std::transform(xs.begin(), xs.end(), fs.begin(), [&](double x) { return f(x); });

    auto crosses = [&](std::size_t i) { return fs[i] * fs[i + 1] < 0.0; };

    std::vector<RootReport> roots;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (fs[i] == 0.0) {
            roots.push_back(finish(xs[i], 0.0, xs[i], 0, RootStatus::Converged));
            continue;
        }
        if (i + 1 < xs.size() && crosses(i)) {
            roots.push_back(find_root(f, xs[i], xs[i + 1], cfg));
            continue;
        }
        const bool interior = i > 0 && i + 1 < xs.size();
        if (!interior) continue;
        const double here = std::fabs(fs[i]);
        const bool local_min = here <= std::fabs(fs[i - 1]) && here <= std::fabs(fs[i + 1]);
        if (local_min && here < kTangentialThreshold && !crosses(i - 1) && fs[i - 1] != 0.0 &&
            fs[i + 1] != 0.0) {
            const double x = argmin_abs(f, xs[i - 1], xs[i + 1], cfg.abs_tol);
            RootReport report = finish(x, f(x), x, 0, RootStatus::Converged);
            report.bracket_lo = xs[i - 1];
            report.bracket_hi = xs[i + 1];
            report.tangential = true;
            roots.push_back(report);
        }
    }
    std::sort(roots.begin(), roots.end(),
              [](const RootReport& l, const RootReport& r) { return l.root < r.root; });
    return roots;
}

}  // namespace ssclaim
