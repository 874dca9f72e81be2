#include <doctest.h>

#include <cmath>

#include "wellpath/cli.hpp"
#include "wellpath/sensitivity.hpp"

using namespace wellpath;
using namespace wellpath::sensitivity;

namespace {

// Base cases with geometry derived from the default designs.
SweepSpec default_spec() {
    auto [arc, cat] = cli::hookload_cases(config::DesignConfig{});
    SweepSpec s;
    s.mu_values = SweepSpec::default_mu_values();
    s.wc_values = SweepSpec::default_wc_values();
    s.base_case_arc = arc;
    s.base_case_cat = cat;
    return s;
}

double cat_at(const SensitivityGrid& g, double mu, double wc) {
    for (size_t i = 0; i < g.mu_axis.size(); ++i)
        for (size_t j = 0; j < g.wc_axis.size(); ++j)
            if (std::abs(g.mu_axis[i] - mu) < 1e-9 && std::abs(g.wc_axis[j] - wc) < 1e-9)
                return g.t_cat[g.index(i, j)];
    throw std::runtime_error("cell not found");
}

}  // namespace

TEST_CASE("run_sweep: dimensions and reported anchors") {
    const auto g = run_sweep(default_spec());
    CHECK(g.mu_axis.size() == 11);
    CHECK(g.wc_axis.size() == 11);
    CHECK(g.t_arc.size() == 121);

    CHECK(cat_at(g, 1.5, 85.0) == doctest::Approx(956199.0).epsilon(5e-3));
    CHECK(cat_at(g, 1.6, 85.0) == doctest::Approx(973907.0).epsilon(5e-3));
    CHECK(cat_at(g, 1.5, 95.0) == doctest::Approx(1027789.0).epsilon(5e-3));
}

TEST_CASE("run_sweep: case-study anchor cell reproduces the 23.8% difference") {
    auto spec = default_spec();
    spec.mu_values = {2.0};
    spec.wc_values = {91.69};
    const auto g = run_sweep(spec);
    CHECK(g.pct_diff[0] == doctest::Approx(23.8).epsilon(0.013));
}

TEST_CASE("run_sweep: pct_diff cells recompute exactly") {
    const auto g = run_sweep(default_spec());
    for (size_t k = 0; k < g.pct_diff.size(); ++k)
        CHECK(g.pct_diff[k] == loads::percent_difference(g.t_arc[k], g.t_cat[k]));
}

TEST_CASE("run_sweep: tension affine in mu and wc (three-point collinearity)") {
    const auto g = run_sweep(default_spec());
    auto collinear = [](double y0, double y1, double y2) {
        return std::abs((y2 - y1) - (y1 - y0)) <= 1e-7 * std::abs(y1);
    };
    for (const auto* t : {&g.t_arc, &g.t_cat}) {
        for (size_t i = 0; i < g.mu_axis.size(); ++i)
            for (size_t j = 0; j + 2 < g.wc_axis.size(); ++j)
                CHECK(collinear((*t)[g.index(i, j)], (*t)[g.index(i, j + 1)],
                                (*t)[g.index(i, j + 2)]));
        for (size_t j = 0; j < g.wc_axis.size(); ++j)
            for (size_t i = 0; i + 2 < g.mu_axis.size(); ++i)
                CHECK(collinear((*t)[g.index(i, j)], (*t)[g.index(i + 1, j)],
                                (*t)[g.index(i + 2, j)]));
    }
}

TEST_CASE("run_sweep: parallel equals serial bit-for-bit") {
    const auto spec = default_spec();
    const auto serial = run_sweep(spec, 1);
    const auto parallel = run_sweep(spec, 4);
    CHECK(serial.t_arc == parallel.t_arc);
    CHECK(serial.t_cat == parallel.t_cat);
    CHECK(serial.pct_diff == parallel.pct_diff);
}

TEST_CASE("grid_monotonicity_report") {
    const auto g = run_sweep(default_spec());
    CHECK(grid_monotonicity_report(g).clean());

    auto single = default_spec();
    single.mu_values = {2.0};
    single.wc_values = {91.69};
    CHECK(grid_monotonicity_report(run_sweep(single)).clean());

    // negative control: hand-built decreasing matrix
    SensitivityGrid bad;
    bad.mu_axis = {1.0, 2.0};
    bad.wc_axis = {1.0, 2.0};
    bad.t_arc = {4.0, 3.0, 2.0, 1.0};
    bad.t_cat = {1.0, 1.0, 1.0, 1.0};
    bad.pct_diff = {0.0, 0.0, 0.0, 0.0};
    const auto rep = grid_monotonicity_report(bad);
    CHECK(!rep.clean());
    CHECK(rep.violations.size() == 4);  // two wc inversions + two mu inversions, arc only
}

TEST_CASE("sweep CSV: header and row order") {
    auto spec = default_spec();
    spec.mu_values = {1.5, 1.6};
    spec.wc_values = {85.0, 86.0};
    const auto csv = to_csv(run_sweep(spec));
    CHECK(csv.rfind("mu,wc_lbf_per_ft,t_arc_lbf,t_cat_lbf,pct_difference\n", 0) == 0);
    CHECK(csv.find("\n1.50,85.00,") < csv.find("\n1.50,86.00,"));
    CHECK(csv.find("\n1.50,86.00,") < csv.find("\n1.60,85.00,"));
}

TEST_CASE("SweepSpec validation") {
    auto spec = default_spec();
    spec.mu_values = {};
    CHECK_THROWS_AS(run_sweep(spec), DomainError);
    spec = default_spec();
    spec.wc_values = {90.0, 89.0};
    CHECK_THROWS_AS(run_sweep(spec), DomainError);
}
