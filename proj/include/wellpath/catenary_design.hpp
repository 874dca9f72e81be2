#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "wellpath/catenary.hpp"
#include "wellpath/plan_builder.hpp"
#include "wellpath/survey.hpp"

namespace wellpath::catenary_design {

struct CatenaryDesignInput {
    double total_md = 24000.0;          // ft, informational only
    double target_depth = 12500.0;      // ft
    double v_end = 2000.0;              // ft
    double s_end = 4000.0;              // ft
    double azimuth = 45.0;              // deg
    double horizontal_length = 7430.0;  // ft

    void validate() const {
        if (!(target_depth > v_end && v_end > 0.0))
            throw DomainError("CatenaryDesignInput: require target_depth > v_end > 0");
        if (!(s_end > 0.0)) throw DomainError("CatenaryDesignInput: s_end must be > 0");
        if (horizontal_length < 0.0)
            throw DomainError("CatenaryDesignInput: horizontal_length must be >= 0");
    }
};

struct CatenaryTop {
    double inclination = 0.0;  // deg
    double radius = 0.0;       // ft
    double build_rate = 0.0;   // deg/100 ft
};

inline CatenaryTop top_of_catenary(const catenary::CatenaryParams& params) {
    const auto pt = catenary::evaluate_point(params, 0.0);
    return {pt.inclination, pt.radius, pt.build_rate};
}

// Vertical -> circular arc (radius = catenary top radius, so curvature is
// continuous at the joint) -> catenary -> horizontal tangent.
// KOP = target_depth - v_end - R_top*sin(theta_top).
inline survey::WellPlan design_catenary_well(const CatenaryDesignInput& in,
                                             const numerics::Tolerance& tol = {},
                                             double md_step = 100.0) {
    in.validate();
    const auto params = catenary::solve_catenary_parameter(in.v_end, in.s_end, tol);
    const auto top = top_of_catenary(params);

    const double kop =
        in.target_depth - in.v_end - top.radius * std::sin(deg_to_rad(top.inclination));
    if (kop < 0.0)
        throw InfeasibleDesignError("design_catenary_well: KOP above surface (" +
                                    std::to_string(kop) + " ft)");

    survey::PlanBuilder b(survey::DesignKind::catenary, in.azimuth);
    b.vertical_to(kop)
        .build_arc(top.build_rate, top.inclination)
        .catenary_section(params)
        .tangent(in.horizontal_length, survey::SectionKind::horizontal);
    return b.finish(md_step);
}

// Long-format overlay of two stationized plans, one row per design per MD.
struct ComparisonRow {
    double md = 0.0;
    survey::DesignKind design = survey::DesignKind::arc;
    double tvd = 0.0, vsec = 0.0, north = 0.0, east = 0.0;
};

inline std::vector<ComparisonRow> compare_plans(const survey::WellPlan& arc,
                                                const survey::WellPlan& cat) {
    if (std::abs(arc.azimuth - cat.azimuth) > 1e-9)
        throw DomainError("compare_plans: azimuth mismatch");

    std::vector<ComparisonRow> rows;
    rows.reserve(arc.stations.size() + cat.stations.size());
    auto add = [&rows](const survey::WellPlan& p) {
        for (const auto& st : p.stations)
            rows.push_back({st.md, p.design_kind, st.tvd, st.vsec, st.north, st.east});
    };
    add(arc);
    add(cat);
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (a.md != b.md) return a.md < b.md;
        return static_cast<int>(a.design) < static_cast<int>(b.design);
    });
    return rows;
}

inline constexpr std::string_view kComparisonCsvHeader =
    "md_ft,design,tvd_ft,vsec_ft,north_ft,east_ft";

inline std::string to_csv(const std::vector<ComparisonRow>& rows) {
    std::string out{kComparisonCsvHeader};
    out += '\n';
    char buf[192];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof(buf), "%.2f,%s,%.2f,%.2f,%.2f,%.2f\n", r.md,
                      std::string(survey::to_string(r.design)).c_str(), r.tvd, r.vsec, r.north,
                      r.east);
        out += buf;
    }
    return out;
}

}  // namespace wellpath::catenary_design
