#pragma once

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "wellpath/arc_design.hpp"
#include "wellpath/catenary_design.hpp"
#include "wellpath/loads.hpp"
#include "wellpath/sensitivity.hpp"

namespace wellpath::config {

// Parsed, validated run configuration. Defaults are the case-study inputs.
struct DesignConfig {
    arc_design::ArcDesignInput arc;
    catenary_design::CatenaryDesignInput catenary;
    struct Loads {
        double mu_h = 2.0;
        double mu_c = 0.35;
        double w_h = 16.25;  // lbf/ft
        double w_c = 91.69;  // lbf/ft
        double w_v = 19.5;   // lbf/ft
    } loads;
    struct Sweep {
        std::vector<double> mu_values = sensitivity::SweepSpec::default_mu_values();
        std::vector<double> wc_values = sensitivity::SweepSpec::default_wc_values();
    } sweep;
    struct Output {
        double md_step = 100.0;  // ft
    } output;
};

namespace detail {

inline double parse_number(const std::string& v, int line) {
    double out = 0.0;
    const char* first = v.data();
    const char* last = v.data() + v.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr != last)
        throw ConfigError("line " + std::to_string(line) + ": non-numeric value '" + v + "'");
    return out;
}

inline std::vector<double> parse_list(const std::string& v, int line) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos)
            throw ConfigError("line " + std::to_string(line) + ": empty list element");
        out.push_back(parse_number(item.substr(b, e - b + 1), line));
    }
    if (out.empty())
        throw ConfigError("line " + std::to_string(line) + ": empty list");
    return out;
}

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace detail

inline void validate(const DesignConfig& cfg);

// Line-oriented `key = value` under `[section]` headers. Unknown sections and
// keys are rejected; all values are numeric (sweep lists comma-separated).
inline DesignConfig parse_config(std::istream& in) {
    DesignConfig cfg;
    std::string line;
    std::string section;
    int lineno = 0;

    using Setter = void (*)(DesignConfig&, const std::string&, int);
    static const std::map<std::string, std::map<std::string, Setter>> schema = {
        {"arc",
         {
             {"target_depth_ft", [](DesignConfig& c, const std::string& v, int l) { c.arc.target_depth = detail::parse_number(v, l); }},
             {"azimuth_deg", [](DesignConfig& c, const std::string& v, int l) { c.arc.azimuth = detail::parse_number(v, l); }},
             {"build_rate_deg_per_100ft", [](DesignConfig& c, const std::string& v, int l) { c.arc.build_rate = detail::parse_number(v, l); }},
             {"horizontal_length_ft", [](DesignConfig& c, const std::string& v, int l) { c.arc.horizontal_length = detail::parse_number(v, l); }},
             {"final_inclination_deg", [](DesignConfig& c, const std::string& v, int l) { c.arc.final_inclination = detail::parse_number(v, l); }},
             {"initial_inclination_deg", [](DesignConfig& c, const std::string& v, int l) { c.arc.initial_inclination = detail::parse_number(v, l); }},
         }},
        {"catenary",
         {
             {"total_md_ft", [](DesignConfig& c, const std::string& v, int l) { c.catenary.total_md = detail::parse_number(v, l); }},
             {"target_depth_ft", [](DesignConfig& c, const std::string& v, int l) { c.catenary.target_depth = detail::parse_number(v, l); }},
             {"v_end_ft", [](DesignConfig& c, const std::string& v, int l) { c.catenary.v_end = detail::parse_number(v, l); }},
             {"s_end_ft", [](DesignConfig& c, const std::string& v, int l) { c.catenary.s_end = detail::parse_number(v, l); }},
             {"azimuth_deg", [](DesignConfig& c, const std::string& v, int l) { c.catenary.azimuth = detail::parse_number(v, l); }},
             {"horizontal_length_ft", [](DesignConfig& c, const std::string& v, int l) { c.catenary.horizontal_length = detail::parse_number(v, l); }},
         }},
        {"loads",
         {
             {"mu_h", [](DesignConfig& c, const std::string& v, int l) { c.loads.mu_h = detail::parse_number(v, l); }},
             {"mu_c", [](DesignConfig& c, const std::string& v, int l) { c.loads.mu_c = detail::parse_number(v, l); }},
             {"w_h_lbf_per_ft", [](DesignConfig& c, const std::string& v, int l) { c.loads.w_h = detail::parse_number(v, l); }},
             {"w_c_lbf_per_ft", [](DesignConfig& c, const std::string& v, int l) { c.loads.w_c = detail::parse_number(v, l); }},
             {"w_v_lbf_per_ft", [](DesignConfig& c, const std::string& v, int l) { c.loads.w_v = detail::parse_number(v, l); }},
         }},
        {"sweep",
         {
             {"mu_values", [](DesignConfig& c, const std::string& v, int l) { c.sweep.mu_values = detail::parse_list(v, l); }},
             {"wc_values", [](DesignConfig& c, const std::string& v, int l) { c.sweep.wc_values = detail::parse_list(v, l); }},
         }},
        {"output",
         {
             {"md_step_ft", [](DesignConfig& c, const std::string& v, int l) { c.output.md_step = detail::parse_number(v, l); }},
         }},
    };

    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = detail::trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        if (t.front() == '[') {
            if (t.back() != ']')
                throw ConfigError("line " + std::to_string(lineno) + ": malformed section header");
            section = t.substr(1, t.size() - 2);
            if (!schema.count(section))
                throw ConfigError("line " + std::to_string(lineno) + ": unknown section [" +
                                  section + "]");
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        if (section.empty())
            throw ConfigError("line " + std::to_string(lineno) + ": key outside any section");
        const std::string key = detail::trim(t.substr(0, eq));
        const std::string val = detail::trim(t.substr(eq + 1));
        const auto& keys = schema.at(section);
        const auto it = keys.find(key);
        if (it == keys.end())
            throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + key +
                              "' in [" + section + "]");
        it->second(cfg, val, lineno);
    }

    try {
        validate(cfg);
    } catch (const ConfigError&) {
        throw;
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
    return cfg;
}

inline void validate(const DesignConfig& cfg) {
    cfg.arc.validate();
    cfg.catenary.validate();
    if (!(cfg.loads.w_h > 0.0 && cfg.loads.w_c > 0.0 && cfg.loads.w_v > 0.0))
        throw ConfigError("[loads]: pipe weights must be > 0");
    if (cfg.loads.mu_h < 0.0 || cfg.loads.mu_c < 0.0)
        throw ConfigError("[loads]: friction coefficients must be >= 0");
    if (!(cfg.output.md_step > 0.0)) throw ConfigError("[output]: md_step_ft must be > 0");
    for (auto* axis : {&cfg.sweep.mu_values, &cfg.sweep.wc_values})
        for (size_t i = 1; i < axis->size(); ++i)
            if ((*axis)[i] <= (*axis)[i - 1])
                throw ConfigError("[sweep]: axis values must be strictly increasing");
}

inline DesignConfig load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open config file: " + path);
    try {
        return parse_config(f);
    } catch (const DomainError& e) {
        throw ConfigError(std::string(e.what()));
    }
}

}  // namespace wellpath::config
