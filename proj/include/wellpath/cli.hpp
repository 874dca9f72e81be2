#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "wellpath/arc_design.hpp"
#include "wellpath/catenary_design.hpp"
#include "wellpath/chart.hpp"
#include "wellpath/config.hpp"
#include "wellpath/report.hpp"
#include "wellpath/sensitivity.hpp"

namespace wellpath::cli {

enum ExitCode : int {
    kOk = 0,
    kConfigError = 2,
    kInfeasibleError = 3,
    kNumericError = 4,
    kIoError = 5,
};

namespace detail {

// Write-then-rename so a failed run never leaves a partial file behind.
inline void write_file(const std::filesystem::path& path, const std::string& content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw IoError("cannot open for writing: " + tmp.string());
        f << content;
        if (!f) throw IoError("write failed: " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw IoError("rename failed: " + path.string() + " (" + ec.message() + ")");
}

inline chart::Series trajectory_series(const survey::WellPlan& plan, bool vd_hd) {
    chart::Series s;
    s.name = std::string(survey::to_string(plan.design_kind)) + " design";
    s.points.reserve(plan.stations.size());
    for (const auto& st : plan.stations) {
        if (vd_hd)
            s.points.emplace_back(st.vsec, st.tvd);
        else
            s.points.emplace_back(st.east, st.north);
    }
    return s;
}

inline std::string mu_tag(double mu) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%g", mu);
    return buf;
}

}  // namespace detail

// Hook-load cases with geometry derived from the two designed trajectories
// and friction inputs from [loads].
inline std::pair<loads::HookLoadCase, loads::HookLoadCase> hookload_cases(
    const config::DesignConfig& cfg) {
    loads::HookLoadCase arc;
    arc.design_kind = survey::DesignKind::arc;
    arc.mu_h = cfg.loads.mu_h;
    arc.mu_c = cfg.loads.mu_c;
    arc.w_h = cfg.loads.w_h;
    arc.w_c = cfg.loads.w_c;
    arc.w_v = cfg.loads.w_v;
    arc.horizontal_length = cfg.arc.horizontal_length;
    arc.radius = kBuildRateConstant / cfg.arc.build_rate;
    arc.vertical_length = arc_design::kop_depth(cfg.arc.target_depth, cfg.arc.build_rate,
                                                cfg.arc.initial_inclination,
                                                cfg.arc.final_inclination);

    const auto params =
        catenary::solve_catenary_parameter(cfg.catenary.v_end, cfg.catenary.s_end);
    const auto top = catenary_design::top_of_catenary(params);
    loads::HookLoadCase cat = arc;
    cat.design_kind = survey::DesignKind::catenary;
    cat.horizontal_length = cfg.catenary.horizontal_length;
    cat.radius = top.radius;
    cat.inclination = top.inclination;
    cat.vertical_length = cfg.catenary.target_depth - cfg.catenary.v_end -
                          top.radius * std::sin(deg_to_rad(top.inclination));
    if (cat.vertical_length < 0.0)
        throw InfeasibleDesignError("hookload_cases: catenary KOP above surface");
    return {arc, cat};
}

inline void emit_design(const survey::WellPlan& plan, const std::string& stem,
                        const std::filesystem::path& out_dir) {
    detail::write_file(out_dir / (stem + "_survey.csv"), survey::to_csv(plan.stations));

    chart::ChartSpec vd;
    vd.kind = chart::ChartKind::vd_vs_hd;
    vd.title = stem + " design trajectory";
    vd.x_label = "Horizontal displacement (ft)";
    vd.y_label = "Vertical displacement (ft)";
    vd.series = {detail::trajectory_series(plan, true)};
    detail::write_file(out_dir / (stem + "_vd_hd.svg"), chart::render_svg(vd));

    chart::ChartSpec ne;
    ne.kind = chart::ChartKind::north_vs_east;
    ne.title = stem + " design plan view";
    ne.x_label = "East displacement (ft)";
    ne.y_label = "North displacement (ft)";
    ne.series = {detail::trajectory_series(plan, false)};
    detail::write_file(out_dir / (stem + "_north_east.svg"), chart::render_svg(ne));
}

inline void run_compare(const config::DesignConfig& cfg, const std::filesystem::path& out_dir) {
    const auto arc = arc_design::design_arc_well(cfg.arc, cfg.output.md_step);
    const auto cat = catenary_design::design_catenary_well(cfg.catenary, {}, cfg.output.md_step);
    const auto rows = catenary_design::compare_plans(arc, cat);
    detail::write_file(out_dir / "compare.csv", catenary_design::to_csv(rows));

    chart::ChartSpec vd;
    vd.kind = chart::ChartKind::vd_vs_hd;
    vd.title = "Trajectory profile comparison";
    vd.x_label = "Horizontal displacement (ft)";
    vd.y_label = "Vertical displacement (ft)";
    vd.series = {detail::trajectory_series(arc, true), detail::trajectory_series(cat, true)};
    detail::write_file(out_dir / "compare_vd_hd.svg", chart::render_svg(vd));

    chart::ChartSpec ne;
    ne.kind = chart::ChartKind::north_vs_east;
    ne.title = "Plan view comparison";
    ne.x_label = "East displacement (ft)";
    ne.y_label = "North displacement (ft)";
    ne.series = {detail::trajectory_series(arc, false), detail::trajectory_series(cat, false)};
    detail::write_file(out_dir / "compare_north_east.svg", chart::render_svg(ne));
}

inline void run_sensitivity(const config::DesignConfig& cfg,
                            const std::filesystem::path& out_dir) {
    auto [arc_case, cat_case] = hookload_cases(cfg);
    sensitivity::SweepSpec spec;
    spec.mu_values = cfg.sweep.mu_values;
    spec.wc_values = cfg.sweep.wc_values;
    spec.base_case_arc = arc_case;
    spec.base_case_cat = cat_case;

    const auto grid = sensitivity::run_sweep(spec);
    detail::write_file(out_dir / "sensitivity.csv", sensitivity::to_csv(grid));

    for (size_t i = 0; i < grid.mu_axis.size(); ++i) {
        const std::string tag = detail::mu_tag(grid.mu_axis[i]);

        chart::ChartSpec prof;
        prof.kind = chart::ChartKind::hookload_profile;
        prof.title = "Hook load profile, mu = " + tag;
        prof.x_label = "Curve-section pipe weight (lbf/ft)";
        prof.y_label = "Hook load (lbf)";
        chart::Series sa{"arc design", {}};
        chart::Series sc{"catenary design", {}};
        chart::Series sp{"difference", {}};
        for (size_t j = 0; j < grid.wc_axis.size(); ++j) {
            const size_t k = grid.index(i, j);
            sa.points.emplace_back(grid.wc_axis[j], grid.t_arc[k]);
            sc.points.emplace_back(grid.wc_axis[j], grid.t_cat[k]);
            sp.points.emplace_back(grid.wc_axis[j], grid.pct_diff[k]);
        }
        prof.series = {sa, sc};
        detail::write_file(out_dir / ("hookload_profile_mu_" + tag + ".svg"),
                           chart::render_svg(prof));

        chart::ChartSpec pct;
        pct.kind = chart::ChartKind::pct_difference;
        pct.title = "Hook load difference, mu = " + tag;
        pct.x_label = "Curve-section pipe weight (lbf/ft)";
        pct.y_label = "Difference (%)";
        pct.series = {sp};
        detail::write_file(out_dir / ("pct_difference_mu_" + tag + ".svg"),
                           chart::render_svg(pct));
    }
}

// Throwing core of the CLI: runs one command against a validated config.
inline void dispatch(const std::string& cmd, const config::DesignConfig& cfg,
                     const std::filesystem::path& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create output directory: " + out_dir.string());

    if (cmd == "design-arc") {
        emit_design(arc_design::design_arc_well(cfg.arc, cfg.output.md_step), "arc", out_dir);
    } else if (cmd == "design-catenary") {
        emit_design(catenary_design::design_catenary_well(cfg.catenary, {}, cfg.output.md_step),
                    "catenary", out_dir);
    } else if (cmd == "compare") {
        run_compare(cfg, out_dir);
    } else if (cmd == "hookload") {
        auto [arc_case, cat_case] = hookload_cases(cfg);
        detail::write_file(out_dir / "hookload_report.json",
                           report::hookload_report(arc_case, cat_case));
    } else if (cmd == "sensitivity") {
        run_sensitivity(cfg, out_dir);
    } else {
        throw ConfigError("unknown command: " + cmd);
    }
}

inline int run_command(const std::string& cmd, const config::DesignConfig& cfg,
                       const std::filesystem::path& out_dir) {
    try {
        dispatch(cmd, cfg, out_dir);
        return kOk;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfigError;
    } catch (const InfeasibleDesignError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInfeasibleError;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIoError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNumericError;
    }
}

}  // namespace wellpath::cli
