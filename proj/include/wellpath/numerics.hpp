#pragma once

#include <cmath>
#include <concepts>
#include <string>

#include "wellpath/errors.hpp"

namespace wellpath::numerics {

struct Tolerance {
    double abs_tol = 1e-6;
    int max_iterations = 200;

    void validate() const {
        if (!(abs_tol > 0.0)) throw DomainError("Tolerance: abs_tol must be > 0");
        if (max_iterations < 1) throw DomainError("Tolerance: max_iterations must be >= 1");
    }
};

// Bisection on [lo, hi]. Requires a sign change; the residuals this library
// solves are monotone on their brackets, so bisection cannot escape or
// diverge. Deterministic for identical inputs.
template <std::invocable<double> F>
double find_root_bracketed(F&& f, double lo, double hi, const Tolerance& tol = {}) {
    tol.validate();
    if (!(lo < hi)) throw DomainError("find_root_bracketed: require lo < hi");

    double flo = f(lo);
    double fhi = f(hi);
    if (!std::isfinite(flo) || !std::isfinite(fhi))
        throw NumericError("find_root_bracketed: non-finite endpoint evaluation");
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw NumericError("find_root_bracketed: no sign change on [" + std::to_string(lo) +
                           ", " + std::to_string(hi) + "]");

    for (int i = 0; i < tol.max_iterations; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = f(mid);
        if (!std::isfinite(fmid))
            throw NumericError("find_root_bracketed: non-finite evaluation at " +
                               std::to_string(mid));
        if (fmid == 0.0 || hi - lo < tol.abs_tol) return mid;
        if ((fmid > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    throw NumericError("find_root_bracketed: max_iterations exceeded");
}

// Fixed-step RK4 for df/dtheta = rhs(theta), theta0 -> theta1. The rhs does
// not depend on f, so this reduces to Simpson quadrature; global error is
// still O(steps^-4). Used as the verification oracle for closed-form drag.
template <std::invocable<double> F>
double integrate_ode_1d(F&& rhs, double theta0, double theta1, double f0, int steps) {
    if (steps < 1) throw DomainError("integrate_ode_1d: steps must be >= 1");
    if (theta1 < theta0) throw DomainError("integrate_ode_1d: require theta1 >= theta0");

    const double h = (theta1 - theta0) / steps;
    double f = f0;
    for (int i = 0; i < steps; ++i) {
        const double t = theta0 + i * h;
        const double k1 = rhs(t);
        const double k2 = rhs(t + 0.5 * h);
        const double k4 = rhs(t + h);
        const double df = h * (k1 + 4.0 * k2 + k4) / 6.0;
        if (!std::isfinite(df))
            throw NumericError("integrate_ode_1d: non-finite rhs near theta=" +
                               std::to_string(t));
        f += df;
    }
    return f;
}

}  // namespace wellpath::numerics
