#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "wellpath/numerics.hpp"

using namespace wellpath;
using namespace wellpath::numerics;

TEST_CASE("find_root_bracketed: linear root") {
    const double r = find_root_bracketed([](double x) { return x - 3.0; }, 0.0, 10.0,
                                         {1e-9, 200});
    CHECK(r == doctest::Approx(3.0).epsilon(1e-9));
}

TEST_CASE("find_root_bracketed: sqrt(2)") {
    const double r = find_root_bracketed([](double x) { return x * x - 2.0; }, 0.0, 2.0,
                                         {1e-9, 200});
    CHECK(r == doctest::Approx(std::sqrt(2.0)).epsilon(1e-8));
}

TEST_CASE("find_root_bracketed: catenary residual vs grid-scan oracle") {
    auto g = [](double a) { return a * (std::cosh(4000.0 / a) - 1.0) - 2000.0; };
    const double ours = find_root_bracketed(g, 100.0, 1e6, {1e-6, 200});
    const double ref = oracles::grid_scan_root(g, 100.0, 1e6);
    CHECK(ours == doctest::Approx(ref).epsilon(1e-7));
    CHECK(ours == doctest::Approx(4297.3).epsilon(1e-4));
}

TEST_CASE("find_root_bracketed: error paths") {
    CHECK_THROWS_AS(find_root_bracketed([](double x) { return x * x + 1.0; }, -1.0, 1.0),
                    NumericError);
    CHECK_THROWS_AS(find_root_bracketed([](double x) { return x - std::sqrt(2.0); }, 0.0, 10.0,
                                        {1e-12, 2}),
                    NumericError);
    CHECK_THROWS_AS(find_root_bracketed([](double x) { return x; }, 1.0, -1.0), DomainError);
    CHECK_THROWS_AS(find_root_bracketed([](double x) { return x; }, -1.0, 1.0, {-1.0, 10}),
                    DomainError);
}

TEST_CASE("find_root_bracketed: result stays inside bracket, residual shrinks") {
    auto f = [](double x) { return std::exp(x) - 5.0; };
    const double lo = 0.0, hi = 4.0;
    const double r = find_root_bracketed(f, lo, hi);
    CHECK(r >= lo);
    CHECK(r <= hi);
    CHECK(std::abs(f(r)) <= std::abs(f(lo)));
    CHECK(std::abs(f(r)) <= std::abs(f(hi)));
}

TEST_CASE("integrate_ode_1d: zero rhs keeps initial value") {
    const double f = integrate_ode_1d([](double) { return 0.0; }, 0.0, M_PI / 2.0, 100.0, 10);
    CHECK(f == doctest::Approx(100.0));
}

TEST_CASE("integrate_ode_1d: integral of cos") {
    const double f = integrate_ode_1d([](double t) { return std::cos(t); }, 0.0, M_PI / 2.0,
                                      0.0, 1000);
    CHECK(f == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("integrate_ode_1d: drag rhs with unit w_c*R") {
    const double mu = 0.35;
    const double f = integrate_ode_1d(
        [&](double t) { return std::cos(t) + mu * std::sin(t); }, 0.0, M_PI / 2.0, 0.0, 10000);
    CHECK(f == doctest::Approx(1.0 + mu).epsilon(1e-8));
}

TEST_CASE("integrate_ode_1d: fourth-order convergence") {
    auto rhs = [](double t) { return std::exp(std::sin(t)); };
    const double ref = integrate_ode_1d(rhs, 0.0, 1.5, 0.0, 200000);
    const double e1 = std::abs(integrate_ode_1d(rhs, 0.0, 1.5, 0.0, 10) - ref);
    const double e2 = std::abs(integrate_ode_1d(rhs, 0.0, 1.5, 0.0, 20) - ref);
    CHECK(e1 / e2 >= 8.0);
}

TEST_CASE("integrate_ode_1d: error paths") {
    CHECK_THROWS_AS(integrate_ode_1d([](double) { return 0.0; }, 0.0, 1.0, 0.0, 0),
                    DomainError);
    CHECK_THROWS_AS(integrate_ode_1d([](double) { return 0.0; }, 1.0, 0.0, 0.0, 10),
                    DomainError);
    CHECK_THROWS_AS(
        integrate_ode_1d([](double t) { return 1.0 / (t - 0.5); }, 0.5, 1.0, 0.0, 7),
        NumericError);
}
