#pragma once

// Finite matrix representations of integration operators, Toeplitz operators
// for discrete measures, and two quadrature-based identities used as oracles.

#include "vlab/disc_dyadics.hpp"
#include "vlab/symbols.hpp"

#include <Eigen/Dense>

#include <complex>
#include <span>
#include <string>
#include <vector>

namespace vlab {

/// sum_n c_n delta_{z_n}
class DiscreteMeasure {
public:
    DiscreteMeasure() = default;
    /// Throws InvalidArgument on length mismatch or a non-positive mass.
    DiscreteMeasure(std::vector<DiscPoint> points, std::vector<double> masses);

    std::span<const DiscPoint> points() const { return points_; }
    std::span<const double> masses() const { return masses_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }

    /// mu(region)
    double mass_in(const Region& region) const;

private:
    std::vector<DiscPoint> points_;
    std::vector<double> masses_;
};

enum class OperatorKind { volterra, toeplitzGram };

struct OperatorMatrix {
    OperatorKind kind = OperatorKind::volterra;
    SpaceSpec space;
    std::string source;  ///< symbol id or measure description
    Eigen::MatrixXcd entries;

    Eigen::Index dimension() const { return entries.rows(); }
    bool is_real() const;
};

/// Largest matrix dimension accepted anywhere (dense SVD cost bound).
inline constexpr int kMaxDimension = 4096;

/// ||z^n|| in H^2 (always 1) or in A^2_alpha, where
/// ||z^n||^2 = prod_{k<n} (k+1)/(k+alpha+2).
double norm_monomial(const SpaceSpec& space, int n);

/// log ||z^n|| for n = 0..N-1, accumulated factor by factor.
std::vector<double> log_monomial_norms(const SpaceSpec& space, int N);

/// Compression of I_g to span{z^0, ..., z^{N-1}} in the orthonormal monomial
/// basis: entry (j, k) = ((j-k) b_{j-k} / j) * ||z^j|| / ||z^k|| for j > k.
OperatorMatrix volterra_matrix(const AnalyticSymbol& symbol, const SpaceSpec& space, int N);

/// Same construction from raw Taylor coefficients b_0..b_M (M >= N-1).
OperatorMatrix volterra_matrix(std::span<const double> coefficients, const SpaceSpec& space,
                               int N, std::string source = "coefficients");

/// P x P Gram matrix G_mn = sqrt(c_m c_n) w_m w_n K(z_m, z_n) whose nonzero
/// eigenvalues are the nonzero singular values of S_mu (Hardy) or T_mu
/// (Bergman). Hardy: K = 1/(1 - z conj w), w = 1. Bergman:
/// K = (1 - z conj w)^{-2-alpha}, w_m = (1 - |z_m|^2)^{alpha/2}.
OperatorMatrix toeplitz_gram(const DiscreteMeasure& measure, const SpaceSpec& space);

struct LittlewoodPaley {
    double lhs = 0.0;  ///< ||f - f(0)||^2_{H^2}
    double rhs = 0.0;  ///< int |f'|^2 log(1/|z|^2) dm
};

/// Both sides of the Littlewood-Paley identity for a polynomial f of
/// degree <= 64 given by its Taylor coefficients.
LittlewoodPaley lp_check(std::span<const std::complex<double>> f, double quadratureTol);

/// Largest eigenvalue of the Gram matrix of u_n(z) = (1-|xi_n|^2)^{3/2} / (1 - conj(xi_n) z)^2
/// truncated to span{z^0..z^{N-1}}: an empirical Bessel bound for the family.
/// Throws InvalidArgument unless the points are 0.1-separated.
double bessel_check(std::span<const DiscPoint> points, int N);

} // namespace vlab
