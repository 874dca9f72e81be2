#pragma once

#include <cmath>

#include "wellpath/plan_builder.hpp"
#include "wellpath/survey.hpp"
#include "wellpath/units.hpp"

namespace wellpath::arc_design {

struct ArcDesignInput {
    double target_depth = 12500.0;       // ft, TVD of target base
    double azimuth = 45.0;               // deg
    double build_rate = 0.691;           // deg/100 ft
    double horizontal_length = 7500.0;   // ft
    double final_inclination = 90.0;     // deg
    double initial_inclination = 0.0;    // deg

    void validate() const {
        if (!(target_depth > 0.0)) throw DomainError("ArcDesignInput: target_depth must be > 0");
        if (!(build_rate > 0.0)) throw DomainError("ArcDesignInput: build_rate must be > 0");
        if (horizontal_length < 0.0)
            throw DomainError("ArcDesignInput: horizontal_length must be >= 0");
        if (!(initial_inclination >= 0.0 && initial_inclination < final_inclination &&
              final_inclination <= 90.0))
            throw DomainError("ArcDesignInput: require 0 <= I_i < I_f <= 90");
    }
};

// KOP vertical depth: VD_target - (K/b)*(sin I_f - sin I_i).
inline double kop_depth(double target_base_vd, double b, double i_i, double i_f) {
    if (!(b > 0.0)) throw DomainError("kop_depth: build rate must be > 0");
    const double r = kBuildRateConstant / b;
    const double vd = target_base_vd - r * (std::sin(deg_to_rad(i_f)) - std::sin(deg_to_rad(i_i)));
    if (vd < 0.0)
        throw InfeasibleDesignError("kop_depth: build radius exceeds available depth (KOP " +
                                    std::to_string(vd) + " ft)");
    return vd;
}

// Curve-section propagation: closed-form displacement and MD advance at
// constant build rate.
inline survey::Station propagate_curve(const survey::Station& from, double b, double i2) {
    if (!(b > 0.0)) throw DomainError("propagate_curve: build rate must be > 0");
    if (i2 < from.inclination)
        throw DomainError("propagate_curve: inclination drop unsupported");
    const double r = kBuildRateConstant / b;
    const double a1 = deg_to_rad(from.inclination);
    const double a2 = deg_to_rad(i2);

    survey::Station to = from;
    to.inclination = i2;
    to.tvd = from.tvd + r * (std::sin(a2) - std::sin(a1));
    to.vsec = from.vsec + r * (std::cos(a1) - std::cos(a2));
    to.md = from.md + 100.0 * (i2 - from.inclination) / b;
    to.build_rate = b;
    to.section = survey::SectionKind::arc;
    auto [n, e] = survey::project_to_plan(to.vsec, to.azimuth);
    to.north = n;
    to.east = e;
    return to;
}

inline survey::Station propagate_tangent(const survey::Station& from, double delta_md,
                                         double i_tan) {
    if (delta_md < 0.0) throw DomainError("propagate_tangent: delta_md must be >= 0");
    const double a = deg_to_rad(i_tan);

    survey::Station to = from;
    to.inclination = i_tan;
    to.tvd = from.tvd + delta_md * std::cos(a);
    to.vsec = from.vsec + delta_md * std::sin(a);
    to.md = from.md + delta_md;
    to.build_rate = 0.0;
    to.section = survey::SectionKind::tangent;
    auto [n, e] = survey::project_to_plan(to.vsec, to.azimuth);
    to.north = n;
    to.east = e;
    return to;
}

// Vertical section to KOP, single build I_i -> I_f, then the horizontal
// tangent. Endpoint TVD closes on target_depth by the KOP identity.
inline survey::WellPlan design_arc_well(const ArcDesignInput& in, double md_step = 100.0) {
    in.validate();
    if (in.initial_inclination != 0.0)
        throw DomainError("design_arc_well: vertical entry requires initial_inclination 0");
    const double kop = kop_depth(in.target_depth, in.build_rate, in.initial_inclination,
                                 in.final_inclination);

    survey::PlanBuilder b(survey::DesignKind::arc, in.azimuth);
    b.vertical_to(kop)
        .build_arc(in.build_rate, in.final_inclination)
        .tangent(in.horizontal_length, survey::SectionKind::horizontal);
    return b.finish(md_step);
}

}  // namespace wellpath::arc_design
