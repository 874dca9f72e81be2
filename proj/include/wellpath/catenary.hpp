#pragma once

#include <cmath>
#include <string>

#include "wellpath/errors.hpp"
#include "wellpath/numerics.hpp"
#include "wellpath/units.hpp"

namespace wellpath::catenary {

// Solved catenary geometry for one well section. `a` is the intercept of the
// catenary with the y axis; s_end/v_end are the section's total horizontal
// and vertical displacements. Instances are always stored solved, i.e.
// a*(cosh(s_end/a) - 1) == v_end within the solver tolerance.
struct CatenaryParams {
    double a = 0.0;
    double s_end = 0.0;
    double v_end = 0.0;

    double residual() const { return a * (std::cosh(s_end / a) - 1.0) - v_end; }
};

// One evaluated point on the catenary. s runs from 0 (top of the section) to
// s_end (horizontal exit); curvature keeps its negative sign, radius and
// build_rate are defined on |curvature|.
struct CatenaryPoint {
    double s = 0.0;           // ft, horizontal displacement from section start
    double v = 0.0;           // ft, vertical displacement
    double slope = 0.0;       // dV/dS
    double curvature = 0.0;   // 1/ft, signed
    double radius = 0.0;      // ft
    double build_rate = 0.0;  // deg/100 ft
    double inclination = 0.0; // deg
};

// Residual of the boundary-consistent parameter equation,
// g(a) = a*(cosh(s_end/a) - 1) - v_end, strictly decreasing in a.
inline double parameter_residual(double a, double s_end, double v_end) {
    return a * (std::cosh(s_end / a) - 1.0) - v_end;
}

// Small-sag bracket hint a0 = s_end^2 / (2 v_end). cosh(x) >= 1 + x^2/2 gives
// g(a0) >= 0, so [a0, hi] brackets the root once g(hi) < 0.
inline double parameter_bracket_hint(double s_end, double v_end) {
    return s_end * s_end / (2.0 * v_end);
}

inline CatenaryParams solve_catenary_parameter(double v_end, double s_end,
                                               const numerics::Tolerance& tol = {}) {
    if (!(v_end > 0.0)) throw DomainError("solve_catenary_parameter: v_end must be > 0");
    if (!(s_end > 0.0)) throw DomainError("solve_catenary_parameter: s_end must be > 0");

    const auto g = [&](double a) { return parameter_residual(a, s_end, v_end); };

    double lo = parameter_bracket_hint(s_end, v_end);
    if (g(lo) == 0.0) return {lo, s_end, v_end};
    double hi = 2.0 * lo;
    int expansions = 0;
    while (g(hi) > 0.0) {
        hi *= 2.0;
        if (++expansions > 200)
            throw InfeasibleDesignError("solve_catenary_parameter: no bracket found for v_end=" +
                                        std::to_string(v_end) + ", s_end=" + std::to_string(s_end));
    }

    const double a = numerics::find_root_bracketed(g, lo, hi, tol);
    return {a, s_end, v_end};
}

namespace detail {
inline void check_range(const CatenaryParams& p, double s, const char* who) {
    if (s < 0.0 || s > p.s_end)
        throw DomainError(std::string(who) + ": s=" + std::to_string(s) +
                          " outside [0, " + std::to_string(p.s_end) + "]");
}
}  // namespace detail

// V(s) = v_end - (a*cosh((s - s_end)/a) - a); V(0) = 0 and V(s_end) = v_end
// hold for solved params.
inline double vertical_displacement(const CatenaryParams& p, double s) {
    detail::check_range(p, s, "vertical_displacement");
    return p.v_end - (p.a * std::cosh((s - p.s_end) / p.a) - p.a);
}

inline CatenaryPoint evaluate_point(const CatenaryParams& p, double s) {
    detail::check_range(p, s, "evaluate_point");
    const double x = (p.s_end - s) / p.a;  // cosh/sinh are even/odd in (s - s_end)/a
    const double ch = std::cosh(x);
    const double sh = std::sinh(x);

    CatenaryPoint pt;
    pt.s = s;
    pt.v = vertical_displacement(p, s);
    pt.slope = sh;
    pt.curvature = -1.0 / (p.a * ch * ch);
    pt.radius = p.a * ch * ch;
    pt.build_rate = kBuildRateConstant / pt.radius;
    pt.inclination = 90.0 - rad_to_deg(std::atan(sh));
    return pt;
}

// Analytic arc length between horizontal displacements s1 <= s2:
// a*[sinh((s_end - s1)/a) - sinh((s_end - s2)/a)].
inline double arc_length(const CatenaryParams& p, double s1, double s2) {
    detail::check_range(p, s1, "arc_length");
    detail::check_range(p, s2, "arc_length");
    if (s1 > s2) throw DomainError("arc_length: require s1 <= s2");
    return p.a * (std::sinh((p.s_end - s1) / p.a) - std::sinh((p.s_end - s2) / p.a));
}

// Inverse of arc_length measured from the section top: returns s such that
// arc_length(p, 0, s) == len. Closed form via asinh.
inline double horizontal_at_arc_length(const CatenaryParams& p, double len) {
    const double total = p.a * std::sinh(p.s_end / p.a);
    if (len < -1e-9 || len > total * (1.0 + 1e-12) + 1e-9)
        throw DomainError("horizontal_at_arc_length: length outside section");
    const double arg = std::sinh(p.s_end / p.a) - len / p.a;
    double s = p.s_end - p.a * std::asinh(arg);
    if (s < 0.0) s = 0.0;
    if (s > p.s_end) s = p.s_end;
    return s;
}

}  // namespace wellpath::catenary
