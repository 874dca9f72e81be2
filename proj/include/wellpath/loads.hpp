#pragma once

#include <cmath>
#include <optional>

#include "wellpath/errors.hpp"
#include "wellpath/survey.hpp"
#include "wellpath/units.hpp"

namespace wellpath::loads {

enum class Direction { hoisting, lowering };

// Friction inputs for one design's soft-string hook-load chain. radius is
// the curve-section radius; inclination the catenary top angle (unused for
// a pure arc).
struct HookLoadCase {
    survey::DesignKind design_kind = survey::DesignKind::arc;
    double mu_h = 2.0;                  // horizontal-section friction coefficient
    double mu_c = 0.35;                 // curve-section friction coefficient
    double w_h = 16.25;                 // lbf/ft
    double w_c = 91.69;                 // lbf/ft
    double w_v = 19.5;                  // lbf/ft
    double horizontal_length = 7500.0;  // ft
    double vertical_length = 4207.7;    // ft
    double radius = 8292.3;             // ft
    double inclination = 90.0;          // deg, catenary top

    void validate() const {
        if (!(w_h > 0.0 && w_c > 0.0 && w_v > 0.0))
            throw DomainError("HookLoadCase: pipe weights must be > 0");
        if (mu_h < 0.0 || mu_c < 0.0)
            throw DomainError("HookLoadCase: friction coefficients must be >= 0");
        if (!(radius > 0.0)) throw DomainError("HookLoadCase: radius must be > 0");
        if (design_kind == survey::DesignKind::catenary &&
            !(inclination > 0.0 && inclination <= 90.0))
            throw DomainError("HookLoadCase: catenary inclination must be in (0, 90]");
    }
};

// Force ledger for one design. tension == f_o + w_v_total by construction.
struct HookLoadBreakdown {
    double f_heel = 0.0;             // lbf, axial compressive force at the heel
    std::optional<double> f_ct;      // lbf, catenary transfer force
    double f_o = 0.0;                // lbf, axial force at KOP
    double w_v_total = 0.0;          // lbf, vertical string weight
    double tension = 0.0;            // lbf, surface hook load
};

// Free-body intermediates for one curve element (oracle-only).
struct CurveElementForces {
    double theta = 0.0;           // rad
    double segment_weight = 0.0;  // lbf, w_c*R*dtheta
    double normal_force = 0.0;    // lbf, W*sin(theta)
    double friction_force = 0.0;  // lbf, mu*N
};

inline CurveElementForces curve_element(double w_c, double r, double mu, double theta,
                                        double dtheta) {
    CurveElementForces e;
    e.theta = theta;
    e.segment_weight = w_c * r * dtheta;
    e.normal_force = e.segment_weight * std::sin(theta);
    e.friction_force = mu * e.normal_force;
    return e;
}

// Horizontal-section drag mu * w * L.
inline double heel_drag(double mu, double w, double length) {
    if (mu < 0.0 || w < 0.0 || length < 0.0)
        throw DomainError("heel_drag: inputs must be non-negative");
    return mu * w * length;
}

// Axial force change across a circular curve element under Coulomb friction.
// Friction opposes string motion: it adds to the weight component when
// hoisting and subtracts when lowering.
inline double curve_drag_closed_form(double w_c, double r, double mu, double theta1,
                                     double theta2, Direction dir = Direction::hoisting) {
    if (!(0.0 <= theta1 && theta1 <= theta2 && theta2 <= std::numbers::pi / 2.0 + 1e-12))
        throw DomainError("curve_drag_closed_form: require 0 <= theta1 <= theta2 <= pi/2");
    const double weight = std::sin(theta2) - std::sin(theta1);
    const double friction = std::cos(theta2) - std::cos(theta1);
    const double sign = (dir == Direction::hoisting) ? -1.0 : 1.0;
    return w_c * r * (weight + sign * mu * friction);
}

inline double percent_difference(double t_arc, double t_cat) {
    if (!(t_cat > 0.0)) throw DomainError("percent_difference: reference must be > 0");
    return 100.0 * (t_arc - t_cat) / t_cat;
}

inline HookLoadBreakdown arc_hookload(const HookLoadCase& c) {
    c.validate();
    if (c.design_kind != survey::DesignKind::arc)
        throw DomainError("arc_hookload: case is not an arc design");

    HookLoadBreakdown b;
    b.f_heel = heel_drag(c.mu_h, c.w_h, c.horizontal_length);
    b.f_o = b.f_heel + c.w_c * c.radius * (c.mu_c + 1.0);
    b.w_v_total = c.w_v * c.vertical_length;
    b.tension = b.f_o + b.w_v_total;
    return b;
}

inline HookLoadBreakdown catenary_hookload(const HookLoadCase& c) {
    c.validate();
    if (c.design_kind != survey::DesignKind::catenary)
        throw DomainError("catenary_hookload: case is not a catenary design");

    const double inc = deg_to_rad(c.inclination);
    // at exactly 90 deg the chain must reduce to the arc form bit-for-bit
    const double sin_i = (c.inclination == 90.0) ? 1.0 : std::sin(inc);
    const double cos_i = (c.inclination == 90.0) ? 0.0 : std::cos(inc);
    if (sin_i <= 1e-12)
        throw DomainError("catenary_hookload: catenary top cannot be vertical");

    HookLoadBreakdown b;
    b.f_heel = heel_drag(c.mu_h, c.w_h, c.horizontal_length);
    b.f_ct = b.f_heel / sin_i;
    b.f_o = *b.f_ct + c.w_c * c.radius * (sin_i + c.mu_c * (1.0 - cos_i));
    b.w_v_total = c.w_v * c.vertical_length;
    b.tension = b.f_o + b.w_v_total;
    return b;
}

inline HookLoadBreakdown hookload(const HookLoadCase& c) {
    return c.design_kind == survey::DesignKind::arc ? arc_hookload(c) : catenary_hookload(c);
}

}  // namespace wellpath::loads
