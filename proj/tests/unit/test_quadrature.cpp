#include "vlab/errors.hpp"
#include "vlab/quadrature.hpp"

#include <doctest.h>

#include <cmath>

using namespace vlab;

TEST_CASE("Gauss-Legendre rules integrate polynomials exactly")
{
    for (int order : {16, 32, 64, 128, 256, 512}) {
        const auto& rule = gauss_legendre(order);
        double sum = 0.0;
        double moment = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            sum += rule.weights[i];
            moment += rule.weights[i] * std::pow(rule.nodes[i], 2 * order - 2);
        }
        CHECK(sum == doctest::Approx(2.0).scale(0).epsilon(1e-14));
        CHECK(moment == doctest::Approx(2.0 / (2 * order - 1)).scale(0).epsilon(1e-11));
    }
}

TEST_CASE("polar integration of smooth densities")
{
    PolarQuadratureOptions opts;
    const auto one = [](double, double, double) { return 1.0; };
    CHECK(integrate_polar(Region::full_disc(), one, opts) == doctest::Approx(1.0).scale(0).epsilon(1e-14));
    const Region quarter{0.5, 1.0, 0.0, kPi / 2};
    CHECK(integrate_polar(quarter, one, opts) == doctest::Approx(0.75 / 4).scale(0).epsilon(1e-14));
    // (1-r^2)^2 over the full disc: int_0^1 (1-r^2)^2 2r dr = 1/3
    const auto w = [](double r, double depth, double) { return std::pow(depth * (1 + r), 2); };
    CHECK(integrate_polar(Region::full_disc(), w, opts) == doctest::Approx(1.0 / 3).scale(0).epsilon(1e-13));
}

TEST_CASE("non-convergent integrands raise QuadratureFailure")
{
    PolarQuadratureOptions opts;
    opts.maxOrder = 32;
    opts.tolerance = 1e-15;
    const auto wild = [](double r, double, double theta) { return std::sin(4000 * r) * std::cos(theta); };
    CHECK_THROWS_AS(integrate_polar(Region::full_disc(), wild, opts), QuadratureFailure);
}
