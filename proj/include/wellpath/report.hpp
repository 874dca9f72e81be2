#pragma once

#include <string>

#include <json.hpp>

#include "wellpath/loads.hpp"

namespace wellpath::report {

using ordered_json = nlohmann::ordered_json;

inline ordered_json case_to_json(const loads::HookLoadCase& c) {
    ordered_json j;
    j["design_kind"] = std::string(survey::to_string(c.design_kind));
    j["mu_h"] = c.mu_h;
    j["mu_c"] = c.mu_c;
    j["w_h_lbf_per_ft"] = c.w_h;
    j["w_c_lbf_per_ft"] = c.w_c;
    j["w_v_lbf_per_ft"] = c.w_v;
    j["horizontal_length_ft"] = c.horizontal_length;
    j["vertical_length_ft"] = c.vertical_length;
    j["radius_ft"] = c.radius;
    if (c.design_kind == survey::DesignKind::catenary) j["inclination_deg"] = c.inclination;
    return j;
}

inline ordered_json breakdown_to_json(const loads::HookLoadBreakdown& b) {
    ordered_json j;
    j["f_heel_lbf"] = b.f_heel;
    if (b.f_ct) j["f_ct_lbf"] = *b.f_ct;
    j["f_o_lbf"] = b.f_o;
    j["w_v_lbf"] = b.w_v_total;
    j["tension_lbf"] = b.tension;
    return j;
}

// Hook-load report for both designs; echoes inputs so runs are
// self-describing.
inline std::string hookload_report(const loads::HookLoadCase& arc_case,
                                   const loads::HookLoadCase& cat_case) {
    const auto arc = loads::arc_hookload(arc_case);
    const auto cat = loads::catenary_hookload(cat_case);

    ordered_json j;
    j["inputs"]["arc"] = case_to_json(arc_case);
    j["inputs"]["catenary"] = case_to_json(cat_case);
    j["arc"] = breakdown_to_json(arc);
    j["catenary"] = breakdown_to_json(cat);
    j["pct_difference"] = loads::percent_difference(arc.tension, cat.tension);
    return j.dump(2) + "\n";
}

}  // namespace wellpath::report
