#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include "wellpath/catenary.hpp"
#include "wellpath/errors.hpp"
#include "wellpath/units.hpp"

namespace wellpath::survey {

enum class SectionKind { vertical, arc, catenary, tangent, horizontal };

inline std::string_view to_string(SectionKind k) {
    switch (k) {
        case SectionKind::vertical: return "vertical";
        case SectionKind::arc: return "arc";
        case SectionKind::catenary: return "catenary";
        case SectionKind::tangent: return "tangent";
        case SectionKind::horizontal: return "horizontal";
    }
    return "?";
}

enum class DesignKind { arc, catenary };

inline std::string_view to_string(DesignKind k) {
    return k == DesignKind::arc ? "arc" : "catenary";
}

// One survey point. north/east are the vsec projection onto the constant
// design azimuth, so north^2 + east^2 == vsec^2.
struct Station {
    double md = 0.0;           // ft
    double inclination = 0.0;  // deg
    double azimuth = 0.0;      // deg
    double tvd = 0.0;          // ft
    double vsec = 0.0;         // ft, horizontal displacement in the design plane
    double north = 0.0;        // ft
    double east = 0.0;         // ft
    double build_rate = 0.0;   // deg/100 ft
    SectionKind section = SectionKind::vertical;
};

inline std::pair<double, double> project_to_plan(double vsec, double azimuth_deg) {
    const double az = deg_to_rad(azimuth_deg);
    return {vsec * std::cos(az), vsec * std::sin(az)};
}

// One contiguous piece of a plan. Geometry is closed-form per kind:
//   vertical            — inclination 0, tvd tracks md
//   arc                 — circular build at constant radius; md advances by
//                         the per-100-ft convention 100*di/b, b = K/R
//   catenary            — solved CatenaryParams, md is true arc length
//   tangent/horizontal  — straight at constant inclination
struct Section {
    SectionKind kind = SectionKind::vertical;
    double md_start = 0.0, md_end = 0.0;
    double inc_start = 0.0, inc_end = 0.0;  // deg
    double tvd_start = 0.0, vsec_start = 0.0;
    double radius = 0.0;                    // ft, arc sections
    double build_rate = 0.0;                // deg/100 ft, arc sections
    catenary::CatenaryParams cat;           // catenary sections

    Station evaluate(double md, double azimuth_deg) const {
        if (md < md_start - 1e-9 || md > md_end + 1e-9)
            throw DomainError("Section::evaluate: md outside section");
        md = std::clamp(md, md_start, md_end);

        Station st;
        st.md = md;
        st.azimuth = azimuth_deg;
        st.section = kind;
        const double dmd = md - md_start;

        switch (kind) {
            case SectionKind::vertical:
                st.inclination = 0.0;
                st.tvd = tvd_start + dmd;
                st.vsec = vsec_start;
                st.build_rate = 0.0;
                break;
            case SectionKind::arc: {
                const double inc = inc_start + dmd * build_rate / 100.0;
                const double i1 = deg_to_rad(inc_start);
                const double i2 = deg_to_rad(inc);
                st.inclination = inc;
                st.tvd = tvd_start + radius * (std::sin(i2) - std::sin(i1));
                st.vsec = vsec_start + radius * (std::cos(i1) - std::cos(i2));
                st.build_rate = build_rate;
                break;
            }
            case SectionKind::catenary: {
                const double s = catenary::horizontal_at_arc_length(cat, dmd);
                const auto pt = catenary::evaluate_point(cat, s);
                st.inclination = pt.inclination;
                st.tvd = tvd_start + pt.v;
                st.vsec = vsec_start + s;
                st.build_rate = pt.build_rate;
                break;
            }
            case SectionKind::tangent:
            case SectionKind::horizontal: {
                const double i = deg_to_rad(inc_start);
                st.inclination = inc_start;
                st.tvd = tvd_start + dmd * std::cos(i);
                st.vsec = vsec_start + dmd * std::sin(i);
                st.build_rate = 0.0;
                break;
            }
        }
        auto [n, e] = project_to_plan(st.vsec, azimuth_deg);
        st.north = n;
        st.east = e;
        return st;
    }
};

struct WellPlan {
    DesignKind design_kind = DesignKind::arc;
    double azimuth = 0.0;  // deg, constant per design
    std::vector<Section> sections;
    std::vector<Station> stations;

    double total_md() const { return sections.empty() ? 0.0 : sections.back().md_end; }

    void validate() const {
        if (sections.empty()) throw DomainError("WellPlan: no sections");
        for (size_t i = 0; i < sections.size(); ++i) {
            const auto& s = sections[i];
            if (s.md_end < s.md_start) throw DomainError("WellPlan: section md_end < md_start");
            if (i > 0 && std::abs(s.md_start - sections[i - 1].md_end) > 1e-9)
                throw DomainError("WellPlan: section MD gap/overlap at index " + std::to_string(i));
        }
    }
};

// Stations at every multiple of md_step plus every section boundary, ordered
// by MD. Values are exact closed-form samples from the owning section, never
// accumulations, so densifying the grid cannot move shared stations.
inline std::vector<Station> stationize(const WellPlan& plan, double md_step) {
    if (!(md_step > 0.0)) throw DomainError("stationize: md_step must be > 0");
    plan.validate();

    std::vector<double> mds;
    for (const auto& s : plan.sections) mds.push_back(s.md_start);
    mds.push_back(plan.sections.back().md_end);
    const double end = plan.total_md();
    for (double md = 0.0; md < end; md += md_step) mds.push_back(md);
    std::sort(mds.begin(), mds.end());
    mds.erase(std::unique(mds.begin(), mds.end(),
                          [](double a, double b) { return std::abs(a - b) < 1e-9; }),
              mds.end());

    std::vector<Station> out;
    out.reserve(mds.size());
    size_t si = 0;
    for (double md : mds) {
        // Boundary stations belong to the section that starts there.
        while (si + 1 < plan.sections.size() && md >= plan.sections[si + 1].md_start - 1e-9) ++si;
        out.push_back(plan.sections[si].evaluate(md, plan.azimuth));
    }
    return out;
}

inline constexpr std::string_view kSurveyCsvHeader =
    "md_ft,inc_deg,azi_deg,tvd_ft,vsec_ft,north_ft,east_ft,build_rate_deg_per_100ft,section";

inline std::string to_csv(const std::vector<Station>& stations) {
    std::string out{kSurveyCsvHeader};
    out += '\n';
    char buf[256];
    for (const auto& st : stations) {
        std::snprintf(buf, sizeof(buf), "%.2f,%.3f,%.3f,%.2f,%.2f,%.2f,%.2f,%.3f,%s\n",
                      st.md, st.inclination, st.azimuth, st.tvd, st.vsec, st.north, st.east,
                      st.build_rate, std::string(to_string(st.section)).c_str());
        out += buf;
    }
    return out;
}

}  // namespace wellpath::survey
