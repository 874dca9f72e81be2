#pragma once

#include <cmath>

#include "wellpath/survey.hpp"

namespace wellpath::survey {

// General multi-section plan builder. Arc/tangent/catenary sections compose
// in any order (the three-rate template: upper build, tangent, lower build),
// with MD/TVD/vsec/inclination carried across boundaries.
class PlanBuilder {
public:
    PlanBuilder(DesignKind kind, double azimuth_deg) {
        plan_.design_kind = kind;
        plan_.azimuth = azimuth_deg;
    }

    double md() const { return md_; }
    double tvd() const { return tvd_; }
    double vsec() const { return vsec_; }
    double inclination() const { return inc_; }

    PlanBuilder& vertical_to(double tvd_end) {
        if (tvd_end < tvd_ - 1e-9) throw DomainError("PlanBuilder: vertical section cannot ascend");
        if (std::abs(inc_) > 1e-12)
            throw DomainError("PlanBuilder: vertical section requires inclination 0");
        Section s;
        s.kind = SectionKind::vertical;
        s.md_start = md_;
        s.md_end = md_ + (tvd_end - tvd_);
        s.tvd_start = tvd_;
        s.vsec_start = vsec_;
        push(s, tvd_end, vsec_, 0.0);
        return *this;
    }

    // Circular build from the current inclination to inc_end at rate b
    // (deg/100 ft). MD advances by the paper's 100*di/b convention.
    PlanBuilder& build_arc(double b, double inc_end) {
        if (!(b > 0.0)) throw DomainError("PlanBuilder: build rate must be > 0");
        if (inc_end < inc_ - 1e-12)
            throw DomainError("PlanBuilder: inclination drop unsupported");
        const double r = kBuildRateConstant / b;
        const double i1 = deg_to_rad(inc_);
        const double i2 = deg_to_rad(inc_end);
        Section s;
        s.kind = SectionKind::arc;
        s.md_start = md_;
        s.md_end = md_ + 100.0 * (inc_end - inc_) / b;
        s.inc_start = inc_;
        s.inc_end = inc_end;
        s.tvd_start = tvd_;
        s.vsec_start = vsec_;
        s.radius = r;
        s.build_rate = b;
        push(s, tvd_ + r * (std::sin(i2) - std::sin(i1)),
             vsec_ + r * (std::cos(i1) - std::cos(i2)), inc_end);
        return *this;
    }

    PlanBuilder& tangent(double delta_md, SectionKind kind = SectionKind::tangent) {
        if (delta_md < 0.0) throw DomainError("PlanBuilder: tangent delta_md must be >= 0");
        const double i = deg_to_rad(inc_);
        Section s;
        s.kind = kind;
        s.md_start = md_;
        s.md_end = md_ + delta_md;
        s.inc_start = inc_;
        s.inc_end = inc_;
        s.tvd_start = tvd_;
        s.vsec_start = vsec_;
        push(s, tvd_ + delta_md * std::cos(i), vsec_ + delta_md * std::sin(i), inc_);
        return *this;
    }

    // Catenary section from its top (current inclination must match the
    // catenary's top inclination) down to horizontal.
    PlanBuilder& catenary_section(const catenary::CatenaryParams& params) {
        const auto top = catenary::evaluate_point(params, 0.0);
        if (std::abs(top.inclination - inc_) > 1e-6)
            throw DomainError("PlanBuilder: inclination discontinuity at catenary entry");
        Section s;
        s.kind = SectionKind::catenary;
        s.md_start = md_;
        s.md_end = md_ + catenary::arc_length(params, 0.0, params.s_end);
        s.inc_start = top.inclination;
        s.inc_end = 90.0;
        s.tvd_start = tvd_;
        s.vsec_start = vsec_;
        s.cat = params;
        push(s, tvd_ + params.v_end, vsec_ + params.s_end, 90.0);
        return *this;
    }

    WellPlan finish(double md_step) {
        plan_.validate();
        plan_.stations = stationize(plan_, md_step);
        return plan_;
    }

private:
    void push(const Section& s, double tvd_end, double vsec_end, double inc_end) {
        plan_.sections.push_back(s);
        md_ = s.md_end;
        tvd_ = tvd_end;
        vsec_ = vsec_end;
        inc_ = inc_end;
    }

    WellPlan plan_;
    double md_ = 0.0, tvd_ = 0.0, vsec_ = 0.0, inc_ = 0.0;
};

}  // namespace wellpath::survey
