#pragma once

#include <cstdio>
#include <string>
#include <thread>
#include <vector>

#include "wellpath/loads.hpp"

namespace wellpath::sensitivity {

// mu x w_c sweep over both designs' hook loads. The varied mu is the
// horizontal-section coefficient; the varied weight is the curve-section
// pipe weight. Geometry stays fixed.
struct SweepSpec {
    std::vector<double> mu_values;
    std::vector<double> wc_values;
    loads::HookLoadCase base_case_arc;
    loads::HookLoadCase base_case_cat;

    static std::vector<double> default_mu_values() {
        std::vector<double> v;
        for (int i = 0; i <= 10; ++i) v.push_back(1.5 + 0.1 * i);
        return v;
    }
    static std::vector<double> default_wc_values() {
        std::vector<double> v;
        for (int i = 0; i <= 10; ++i) v.push_back(85.0 + 1.0 * i);
        return v;
    }

    void validate() const {
        auto check_axis = [](const std::vector<double>& a, const char* name) {
            if (a.empty()) throw DomainError(std::string("SweepSpec: empty ") + name);
            for (size_t i = 1; i < a.size(); ++i)
                if (a[i] <= a[i - 1])
                    throw DomainError(std::string("SweepSpec: ") + name +
                                      " must be strictly increasing");
        };
        check_axis(mu_values, "mu_values");
        check_axis(wc_values, "wc_values");
        base_case_arc.validate();
        base_case_cat.validate();
    }
};

// Row-major, mu-major grids: index [i*|wc| + j] for (mu_i, wc_j).
struct SensitivityGrid {
    std::vector<double> mu_axis;
    std::vector<double> wc_axis;
    std::vector<double> t_arc;
    std::vector<double> t_cat;
    std::vector<double> pct_diff;

    size_t index(size_t i, size_t j) const { return i * wc_axis.size() + j; }
};

inline SensitivityGrid run_sweep(const SweepSpec& spec, unsigned threads = 1) {
    spec.validate();

    SensitivityGrid g;
    g.mu_axis = spec.mu_values;
    g.wc_axis = spec.wc_values;
    const size_t n = g.mu_axis.size() * g.wc_axis.size();
    g.t_arc.resize(n);
    g.t_cat.resize(n);
    g.pct_diff.resize(n);

    auto cell = [&](size_t i, size_t j) {
        loads::HookLoadCase arc = spec.base_case_arc;
        loads::HookLoadCase cat = spec.base_case_cat;
        arc.mu_h = cat.mu_h = g.mu_axis[i];
        arc.w_c = cat.w_c = g.wc_axis[j];
        const size_t k = g.index(i, j);
        g.t_arc[k] = loads::arc_hookload(arc).tension;
        g.t_cat[k] = loads::catenary_hookload(cat).tension;
        g.pct_diff[k] = loads::percent_difference(g.t_arc[k], g.t_cat[k]);
    };

    if (threads <= 1) {
        for (size_t i = 0; i < g.mu_axis.size(); ++i)
            for (size_t j = 0; j < g.wc_axis.size(); ++j) cell(i, j);
    } else {
        // Cells are independent pure computations writing disjoint slots, so
        // the schedule cannot change the result.
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                for (size_t i = t; i < g.mu_axis.size(); i += threads)
                    for (size_t j = 0; j < g.wc_axis.size(); ++j) cell(i, j);
            });
        }
        for (auto& th : pool) th.join();
    }
    return g;
}

struct MonotonicityViolation {
    std::string design;  // "arc" | "catenary"
    std::string axis;    // "mu" | "wc"
    size_t i = 0, j = 0;
};

struct MonotonicityReport {
    std::vector<MonotonicityViolation> violations;
    bool clean() const { return violations.empty(); }
};

// Tension should be non-decreasing along both axes for both designs.
inline MonotonicityReport grid_monotonicity_report(const SensitivityGrid& g) {
    MonotonicityReport rep;
    auto scan = [&](const std::vector<double>& t, const char* design) {
        for (size_t i = 0; i < g.mu_axis.size(); ++i)
            for (size_t j = 0; j + 1 < g.wc_axis.size(); ++j)
                if (t[g.index(i, j + 1)] < t[g.index(i, j)])
                    rep.violations.push_back({design, "wc", i, j});
        for (size_t j = 0; j < g.wc_axis.size(); ++j)
            for (size_t i = 0; i + 1 < g.mu_axis.size(); ++i)
                if (t[g.index(i + 1, j)] < t[g.index(i, j)])
                    rep.violations.push_back({design, "mu", i, j});
    };
    scan(g.t_arc, "arc");
    scan(g.t_cat, "catenary");
    return rep;
}

inline constexpr std::string_view kSensitivityCsvHeader =
    "mu,wc_lbf_per_ft,t_arc_lbf,t_cat_lbf,pct_difference";

// Long format, one row per cell, mu-major ascending.
inline std::string to_csv(const SensitivityGrid& g) {
    std::string out{kSensitivityCsvHeader};
    out += '\n';
    char buf[160];
    for (size_t i = 0; i < g.mu_axis.size(); ++i) {
        for (size_t j = 0; j < g.wc_axis.size(); ++j) {
            const size_t k = g.index(i, j);
            std::snprintf(buf, sizeof(buf), "%.2f,%.2f,%.2f,%.2f,%.2f\n", g.mu_axis[i],
                          g.wc_axis[j], g.t_arc[k], g.t_cat[k], g.pct_diff[k]);
            out += buf;
        }
    }
    return out;
}

}  // namespace wellpath::sensitivity
