#include <doctest.h>

#include <sstream>

#include "wellpath/config.hpp"

using namespace wellpath;
using namespace wellpath::config;

namespace {
DesignConfig parse(const std::string& text) {
    std::istringstream in(text);
    return parse_config(in);
}
}  // namespace

TEST_CASE("empty sections yield the case-study defaults") {
    const auto cfg = parse("[arc]\n");
    CHECK(cfg.arc.target_depth == doctest::Approx(12500.0));
    CHECK(cfg.arc.azimuth == doctest::Approx(45.0));
    CHECK(cfg.arc.build_rate == doctest::Approx(0.691));
    CHECK(cfg.arc.horizontal_length == doctest::Approx(7500.0));
    CHECK(cfg.arc.final_inclination == doctest::Approx(90.0));
    CHECK(cfg.catenary.v_end == doctest::Approx(2000.0));
    CHECK(cfg.catenary.s_end == doctest::Approx(4000.0));
    CHECK(cfg.catenary.horizontal_length == doctest::Approx(7430.0));
    CHECK(cfg.loads.mu_h == doctest::Approx(2.0));
    CHECK(cfg.loads.mu_c == doctest::Approx(0.35));
    CHECK(cfg.loads.w_c == doctest::Approx(91.69));
    CHECK(cfg.sweep.mu_values.size() == 11);
    CHECK(cfg.sweep.wc_values.size() == 11);
    CHECK(cfg.output.md_step == doctest::Approx(100.0));
}

TEST_CASE("explicit value identical to default changes nothing") {
    const auto a = parse("[arc]\n");
    const auto b = parse("[arc]\nazimuth_deg = 45\n");
    CHECK(a.arc.azimuth == b.arc.azimuth);
}

TEST_CASE("values override defaults; comments and blanks ignored") {
    const auto cfg = parse(
        "# case variant\n"
        "[arc]\n"
        "build_rate_deg_per_100ft = 1.2\n"
        "\n"
        "[loads]\n"
        "mu_h = 1.8\n"
        "[sweep]\n"
        "mu_values = 1.0, 1.5, 2.0\n");
    CHECK(cfg.arc.build_rate == doctest::Approx(1.2));
    CHECK(cfg.loads.mu_h == doctest::Approx(1.8));
    REQUIRE(cfg.sweep.mu_values.size() == 3);
    CHECK(cfg.sweep.mu_values[1] == doctest::Approx(1.5));
}

TEST_CASE("validation failures") {
    CHECK_THROWS_AS(parse("[arc]\nbuild_rate_deg_per_100ft = 0\n"), ConfigError);
    CHECK_THROWS_AS(parse("[output]\nmd_step_ft = -5\n"), ConfigError);
    CHECK_THROWS_AS(parse("[sweep]\nwc_values = 90, 85\n"), ConfigError);
}

TEST_CASE("parse errors carry line numbers") {
    try {
        parse("[arc]\ntarget_depth_ft = twelve\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    CHECK_THROWS_WITH_AS(parse("[arc]\nnope = 1\n"),
                         doctest::Contains("unknown key 'nope'"), ConfigError);
    CHECK_THROWS_WITH_AS(parse("[nope]\n"), doctest::Contains("unknown section"), ConfigError);
    CHECK_THROWS_AS(parse("key_without_section = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse("[arc]\njust a line\n"), ConfigError);
}

TEST_CASE("load_config: missing file") {
    CHECK_THROWS_AS(load_config("/nonexistent/path.cfg"), ConfigError);
}
