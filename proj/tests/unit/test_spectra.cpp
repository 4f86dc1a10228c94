#include "vlab/errors.hpp"
#include "vlab/spectra.hpp"

#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <random>

using namespace vlab;

namespace {

std::vector<double> random_coefficients(std::mt19937_64& rng, int M)
{
    std::normal_distribution<double> n01;
    std::vector<double> b(static_cast<std::size_t>(M) + 1);
    for (int m = 1; m <= M; ++m) {
        b[static_cast<std::size_t>(m)] = n01(rng) / std::pow(m, 1.2);
    }
    return b;
}

} // namespace

TEST_CASE("spectra of small shifts")
{
    const auto z = AnalyticSymbol::monomial();
    const auto h = singular_values(volterra_matrix(z, SpaceSpec::hardy(), 4));
    CHECK(h[0] == doctest::Approx(1.0).scale(0).epsilon(1e-14));
    CHECK(h[1] == doctest::Approx(0.5).scale(0).epsilon(1e-14));
    CHECK(h[2] == doctest::Approx(1.0 / 3).scale(0).epsilon(1e-14));
    CHECK(h[3] == 0.0);
    const auto b = singular_values(volterra_matrix(z, SpaceSpec::bergman(0), 4));
    CHECK(b[0] == doctest::Approx(1 / std::sqrt(2.0)).scale(0).epsilon(1e-14));
    CHECK(b[1] == doctest::Approx(1 / std::sqrt(6.0)).scale(0).epsilon(1e-14));
    CHECK(b[2] == doctest::Approx(1 / std::sqrt(12.0)).scale(0).epsilon(1e-14));
    CHECK(std::abs(b[3]) < 1e-15);
    const auto zero = singular_values(Eigen::MatrixXd::Zero(5, 5).eval());
    CHECK(std::all_of(zero.begin(), zero.end(), [](double v) { return v == 0.0; }));
}

TEST_CASE("singular value input validation")
{
    Eigen::MatrixXd bad = Eigen::MatrixXd::Identity(3, 3);
    bad(1, 2) = std::nan("");
    CHECK_THROWS_AS(singular_values(bad), InvalidArgument);
}

TEST_CASE("SVD agrees with eigenvalues of A*A for small matrices")
{
    std::mt19937_64 rng(3);
    for (int N = 2; N <= 8; ++N) {
        for (const auto& space : {SpaceSpec::hardy(), SpaceSpec::bergman(0.4)}) {
            const auto b = random_coefficients(rng, N);
            const auto m = volterra_matrix(b, space, N);
            const auto s = singular_values(m);
            const Eigen::MatrixXcd gram = m.entries.adjoint() * m.entries;
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram, Eigen::EigenvaluesOnly);
            std::vector<double> oracle;
            for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
                oracle.push_back(std::sqrt(std::max(0.0, es.eigenvalues()(i))));
            }
            std::sort(oracle.rbegin(), oracle.rend());
            for (int i = 0; i < N; ++i) {
                CHECK(std::abs(s[static_cast<std::size_t>(i)] - oracle[static_cast<std::size_t>(i)]) <= 1e-10);
            }
        }
    }
}

TEST_CASE("converged spectra")
{
    const auto z = AnalyticSymbol::monomial();
    const auto a = singular_values(volterra_matrix(z, SpaceSpec::hardy(), 32));
    const auto b = singular_values(volterra_matrix(z, SpaceSpec::hardy(), 64));
    for (int j = 0; j < 16; ++j) {
        CHECK(a[static_cast<std::size_t>(j)] == doctest::Approx(b[static_cast<std::size_t>(j)]).scale(0).epsilon(1e-14));
    }
    const auto s = converged_spectrum(z, SpaceSpec::hardy(), 64, 1e-12);
    CHECK(s.convergedPrefixLength == 16);
    CHECK(s.reporting_window() == 16);
    CHECK_FALSE(s.warning.has_value());

    const auto zero = converged_spectrum(AnalyticSymbol::monomial(0, 1.0), SpaceSpec::hardy(), 64, 0.02);
    CHECK(zero.convergedPrefixLength == 16);
    CHECK(std::all_of(zero.values.begin(), zero.values.end(), [](double v) { return v == 0.0; }));

    CHECK_THROWS_AS(converged_spectrum(z, SpaceSpec::hardy(), 100, 0.02), InvalidArgument);
    CHECK_THROWS_AS(converged_spectrum(z, SpaceSpec::hardy(), 64, 0.0), InvalidArgument);
}

TEST_CASE("power symbol spectrum converges on a long prefix")
{
    // independent convergence study: the N = 512 vs 1024 agreement at 2% holds
    // for 83 leading values
    const auto s = converged_spectrum(AnalyticSymbol::power(0.5), SpaceSpec::hardy(), 1024, 0.02);
    CHECK(s.convergedPrefixLength >= 64);
    CHECK(s.convergedPrefixLength < 128);
}

TEST_CASE("compressions increase singular values")
{
    for (const auto& g : {AnalyticSymbol::power(0.5), AnalyticSymbol::logarithm(),
                          AnalyticSymbol::lacunary(1.0), AnalyticSymbol::polynomial({0, 1, -2, 0.5})}) {
        for (const auto& space : {SpaceSpec::hardy(), SpaceSpec::bergman(0)}) {
            for (int N : {16, 64, 256}) {
                const auto a = singular_values(volterra_matrix(g, space, N));
                const auto b = singular_values(volterra_matrix(g, space, 2 * N));
                for (int j = 0; j < N / 4; ++j) {
                    CHECK(a[static_cast<std::size_t>(j)] <= b[static_cast<std::size_t>(j)] + 1e-12);
                }
            }
        }
    }
}

TEST_CASE("additive singular value bound on random pairs")
{
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> idx(1, 24);
    int violations = 0;
    for (int pair = 0; pair < 50; ++pair) {
        const auto& space = pair % 2 == 0 ? SpaceSpec::hardy() : SpaceSpec::bergman(0.0);
        const auto a = volterra_matrix(random_coefficients(rng, 48), space, 48);
        const auto b = volterra_matrix(random_coefficients(rng, 48), space, 48);
        OperatorMatrix sum = a;
        sum.entries += b.entries;
        const auto sa = singular_values(a);
        const auto sb = singular_values(b);
        const auto ss = singular_values(sum);
        for (int t = 0; t < 20; ++t) {
            const int m = idx(rng);
            const int n = idx(rng);
            if (ss[static_cast<std::size_t>(m + n - 2)] >
                sa[static_cast<std::size_t>(m - 1)] + sb[static_cast<std::size_t>(n - 1)] + 1e-10) {
                ++violations;
            }
        }
    }
    CHECK(violations == 0);
}

TEST_CASE("converged prefix rule")
{
    const std::vector<double> fine{1.0, 0.5, 0.3, 0.2};
    const std::vector<double> coarse{1.0, 0.5, 0.2, 0.2};
    CHECK(converged_prefix(fine, coarse, 4, 0.01) == 2);
    CHECK(converged_prefix(fine, coarse, 1, 0.01) == 1);
    CHECK(converged_prefix(fine, coarse, 4, 0.5) == 4);
}
