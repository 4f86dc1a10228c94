#include "vlab/operator_matrices.hpp"

#include "vlab/errors.hpp"
#include "vlab/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace vlab {

DiscreteMeasure::DiscreteMeasure(std::vector<DiscPoint> points, std::vector<double> masses)
    : points_(std::move(points))
    , masses_(std::move(masses))
{
    if (points_.size() != masses_.size()) {
        throw InvalidArgument("discrete measure needs one mass per point");
    }
    for (double c : masses_) {
        if (!(c > 0.0) || !std::isfinite(c)) {
            throw InvalidArgument("discrete measure masses must be positive and finite");
        }
    }
}

double DiscreteMeasure::mass_in(const Region& region) const
{
    double total = 0.0;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (region.contains(points_[i].value())) {
            total += masses_[i];
        }
    }
    return total;
}

bool OperatorMatrix::is_real() const
{
    return (entries.imag().array() == 0.0).all();
}

std::vector<double> log_monomial_norms(const SpaceSpec& space, int N)
{
    if (N < 0) {
        throw InvalidArgument("monomial count must be non-negative");
    }
    std::vector<double> out(static_cast<std::size_t>(N), 0.0);
    if (space.is_hardy()) {
        return out;
    }
    const double alpha = *space.alpha;
    double acc = 0.0;
    for (int n = 1; n < N; ++n) {
        const int k = n - 1;
        acc += 0.5 * std::log((k + 1.0) / (k + alpha + 2.0));
        out[static_cast<std::size_t>(n)] = acc;
    }
    return out;
}

double norm_monomial(const SpaceSpec& space, int n)
{
    if (n < 0) {
        throw InvalidArgument("monomial index must be >= 0");
    }
    if (space.is_hardy()) {
        return 1.0;
    }
    const double alpha = *space.alpha;
    double sq = 1.0;
    for (int k = 0; k < n; ++k) {
        sq *= (k + 1.0) / (k + alpha + 2.0);
    }
    return std::sqrt(sq);
}

OperatorMatrix volterra_matrix(std::span<const double> coefficients, const SpaceSpec& space,
                               int N, std::string source)
{
    if (N < 2 || N > kMaxDimension) {
        throw InvalidArgument("Volterra matrix dimension must lie in [2, " +
                              std::to_string(kMaxDimension) + "]");
    }
    if (coefficients.size() < static_cast<std::size_t>(N)) {
        throw InvalidArgument("Volterra matrix of dimension " + std::to_string(N) +
                              " needs Taylor coefficients b_0..b_" + std::to_string(N - 1));
    }
    const auto logNorms = log_monomial_norms(space, N);
    OperatorMatrix m;
    m.kind = OperatorKind::volterra;
    m.space = space;
    m.source = std::move(source);
    m.entries = Eigen::MatrixXcd::Zero(N, N);
    for (int j = 1; j < N; ++j) {
        for (int k = 0; k < j; ++k) {
            const int d = j - k;
            const double b = coefficients[static_cast<std::size_t>(d)];
            if (b == 0.0) {
                continue;
            }
            const double ratio = std::exp(logNorms[static_cast<std::size_t>(j)] -
                                          logNorms[static_cast<std::size_t>(k)]);
            m.entries(j, k) = d * b / j * ratio;
        }
    }
    return m;
}

OperatorMatrix volterra_matrix(const AnalyticSymbol& symbol, const SpaceSpec& space, int N)
{
    if (N < 2 || N > kMaxDimension) {
        throw InvalidArgument("Volterra matrix dimension must lie in [2, " +
                              std::to_string(kMaxDimension) + "]");
    }
    const auto b = symbol.taylor_coefficients(N);
    return volterra_matrix(b, space, N, symbol.id());
}

OperatorMatrix toeplitz_gram(const DiscreteMeasure& measure, const SpaceSpec& space)
{
    const auto P = static_cast<Eigen::Index>(measure.size());
    const auto pts = measure.points();
    const auto c = measure.masses();

    std::vector<double> weight(measure.size(), 1.0);
    double exponent = -1.0;
    if (!space.is_hardy()) {
        const double alpha = *space.alpha;
        exponent = -2.0 - alpha;
        for (std::size_t i = 0; i < measure.size(); ++i) {
            const double r = pts[i].modulus();
            weight[i] = std::pow((1.0 - r) * (1.0 + r), 0.5 * alpha);
        }
    }

    OperatorMatrix m;
    m.kind = OperatorKind::toeplitzGram;
    m.space = space;
    m.source = "discrete measure (" + std::to_string(P) + " points)";
    m.entries.resize(P, P);
    for (Eigen::Index i = 0; i < P; ++i) {
        for (Eigen::Index j = i; j < P; ++j) {
            const auto zi = pts[static_cast<std::size_t>(i)].value();
            const auto zj = pts[static_cast<std::size_t>(j)].value();
            const std::complex<double> kernel =
                std::pow(1.0 - zi * std::conj(zj), exponent);
            const std::complex<double> g =
                std::sqrt(c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(j)]) *
                weight[static_cast<std::size_t>(i)] * weight[static_cast<std::size_t>(j)] * kernel;
            m.entries(i, j) = g;
            m.entries(j, i) = std::conj(g);
        }
        m.entries(i, i) = m.entries(i, i).real();
    }
    return m;
}

LittlewoodPaley lp_check(std::span<const std::complex<double>> f, double quadratureTol)
{
    if (f.size() > 65) {
        throw InvalidArgument("Littlewood-Paley check accepts polynomials of degree <= 64");
    }
    LittlewoodPaley out;
    for (std::size_t k = 1; k < f.size(); ++k) {
        out.lhs += std::norm(f[k]);
    }
    if (f.size() < 2) {
        return out;
    }

    const auto derivative = [&](std::complex<double> z) {
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t m = f.size(); m-- > 1;) {
            acc = acc * z + static_cast<double>(m) * f[m];
        }
        return acc;
    };
    const PolarIntegrand integrand = [&](double r, double depth, double theta) {
        return std::norm(derivative(std::polar(r, theta))) * -2.0 * std::log1p(-depth);
    };

    PolarQuadratureOptions opts;
    opts.tolerance = quadratureTol;
    opts.bandwidth = 2.0 * static_cast<double>(f.size() - 2);

    // strips [2^{-j-1}, 2^{-j}] absorb the logarithmic singularity at 0; the
    // innermost disc of radius 2^{-48} contributes below double precision
    constexpr int kStrips = 48;
    // strips near the origin carry r^{2k-1}-small mass and only need to be
    // accurate relative to the whole integral, which is lhs
    opts.absoluteTolerance = quadratureTol * out.lhs / kStrips;
    double total = 0.0;
    for (int j = kStrips - 1; j >= 0; --j) {
        const Region strip = Region::annulus(std::ldexp(1.0, -j - 1), std::ldexp(1.0, -j));
        total += integrate_polar(strip, integrand, opts);
    }
    out.rhs = total;
    return out;
}

double bessel_check(std::span<const DiscPoint> points, int N)
{
    if (N < 1 || N > kMaxDimension) {
        throw InvalidArgument("Bessel check dimension must lie in [1, " +
                              std::to_string(kMaxDimension) + "]");
    }
    if (points.empty()) {
        return 0.0;
    }
    if (!is_separated(points, 0.1)) {
        throw InvalidArgument("Bessel check requires 0.1-separated points");
    }
    const auto P = static_cast<Eigen::Index>(points.size());
    Eigen::MatrixXcd U(N, P);
    for (Eigen::Index p = 0; p < P; ++p) {
        const auto xi = points[static_cast<std::size_t>(p)].value();
        const double r = std::abs(xi);
        const double scale = std::pow((1.0 - r) * (1.0 + r), 1.5);
        std::complex<double> power{1.0, 0.0};
        for (int m = 0; m < N; ++m) {
            U(m, p) = scale * (m + 1.0) * power;
            power *= std::conj(xi);
        }
    }
    const Eigen::MatrixXcd gram = U.adjoint() * U;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().maxCoeff();
}

} // namespace vlab
