#include "vlab/spectra.hpp"

#include "vlab/errors.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace vlab {

namespace {

template <class Matrix>
std::vector<double> svd_values(const Matrix& m)
{
    if (m.rows() > kMaxDimension || m.cols() > kMaxDimension) {
        throw InvalidArgument("matrix dimension exceeds " + std::to_string(kMaxDimension));
    }
    if (!m.allFinite()) {
        throw InvalidArgument("matrix has non-finite entries");
    }
    if (m.size() == 0) {
        return {};
    }
    Eigen::BDCSVD<Matrix> svd(m);
    const auto& s = svd.singularValues();
    std::vector<double> out(s.data(), s.data() + s.size());
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

bool is_power_of_two(int n)
{
    return n > 0 && (n & (n - 1)) == 0;
}

} // namespace

std::vector<double> singular_values(const Eigen::MatrixXd& matrix)
{
    return svd_values(matrix);
}

std::vector<double> singular_values(const OperatorMatrix& matrix)
{
    if (matrix.is_real()) {
        return svd_values(Eigen::MatrixXd(matrix.entries.real()));
    }
    return svd_values(matrix.entries);
}

std::size_t converged_prefix(const std::vector<double>& fine, const std::vector<double>& coarse,
                             std::size_t window, double relTol)
{
    const std::size_t limit = std::min({window, fine.size(), coarse.size()});
    std::size_t m = 0;
    while (m < limit && std::abs(fine[m] - coarse[m]) <= relTol * fine[m]) {
        ++m;
    }
    return m;
}

SingularSpectrum converged_spectrum(const AnalyticSymbol& symbol, const SpaceSpec& space, int N,
                                    double relTol)
{
    if (!is_power_of_two(N) || N < 4 || N > kMaxDimension) {
        throw InvalidArgument("truncation dimension must be a power of two in [4, " +
                              std::to_string(kMaxDimension) + "]");
    }
    if (!(relTol > 0.0)) {
        throw InvalidArgument("relative tolerance must be positive");
    }
    SingularSpectrum out;
    out.truncationDimension = N;
    out.relTolerance = relTol;
    out.values = singular_values(volterra_matrix(symbol, space, N));
    const auto coarse = singular_values(volterra_matrix(symbol, space, N / 2));
    out.convergedPrefixLength = converged_prefix(out.values, coarse, out.reporting_window(), relTol);
    if (out.convergedPrefixLength == 0) {
        out.warning = "no singular value converged between dimensions " + std::to_string(N / 2) +
                      " and " + std::to_string(N);
    }
    return out;
}

std::vector<double> toeplitz_singular_values(const OperatorMatrix& gram)
{
    if (gram.kind != OperatorKind::toeplitzGram) {
        throw InvalidArgument("expected a Toeplitz Gram matrix");
    }
    if (gram.dimension() == 0) {
        return {};
    }
    if (!gram.entries.allFinite()) {
        throw InvalidArgument("matrix has non-finite entries");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram.entries, Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    std::vector<double> out(static_cast<std::size_t>(ev.size()));
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        out[static_cast<std::size_t>(i)] = std::max(0.0, ev(i));
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::vector<double> embedding_singular_values(const OperatorMatrix& gram)
{
    auto values = toeplitz_singular_values(gram);
    for (double& v : values) {
        v = std::sqrt(v);
    }
    return values;
}

} // namespace vlab
