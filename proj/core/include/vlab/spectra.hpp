#pragma once

#include "vlab/operator_matrices.hpp"
#include "vlab/symbols.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vlab {

/// Singular values of a dense matrix, nonincreasing. Real matrices take a
/// real divide-and-conquer SVD, others the complex one. Throws
/// InvalidArgument on non-finite entries or dimension above kMaxDimension.
std::vector<double> singular_values(const OperatorMatrix& matrix);
std::vector<double> singular_values(const Eigen::MatrixXd& matrix);

struct SingularSpectrum {
    std::vector<double> values;          ///< at the truncation dimension
    int truncationDimension = 0;
    std::size_t convergedPrefixLength = 0;  ///< <= truncationDimension / 4
    double relTolerance = 0.0;
    std::optional<std::string> warning;  ///< set when nothing converged

    std::size_t reporting_window() const { return static_cast<std::size_t>(truncationDimension) / 4; }
};

/// Spectra at N/2 and N; the converged prefix is the largest m <= N/4 with
/// |s_j(N) - s_j(N/2)| <= relTol s_j(N) for every j <= m.
SingularSpectrum converged_spectrum(const AnalyticSymbol& symbol, const SpaceSpec& space, int N,
                                    double relTol);

/// Converged-prefix rule applied to two precomputed spectra (coarse at N/2).
std::size_t converged_prefix(const std::vector<double>& fine, const std::vector<double>& coarse,
                             std::size_t window, double relTol);

/// Eigenvalues of a Toeplitz Gram matrix clipped at zero, nonincreasing;
/// these are the nonzero singular values of T_mu / S_mu.
std::vector<double> toeplitz_singular_values(const OperatorMatrix& gram);

/// s_n(J_mu) = sqrt(s_n(S_mu)).
std::vector<double> embedding_singular_values(const OperatorMatrix& gram);

} // namespace vlab
