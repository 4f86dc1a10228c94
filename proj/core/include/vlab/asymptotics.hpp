#pragma once

// Sequence analysis used to compare singular values of I_g with the
// rearranged box sequences: power-law fits, regularity-class checks,
// two-sided ratio reports and trace-inequality constants.
//
// Sequences are stored 0-based but indexed 1-based in every public
// argument: x_n is seq[n - 1].

#include "vlab/box_measures.hpp"
#include "vlab/spectra.hpp"
#include "vlab/symbols.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace vlab {

/// Closed 1-based index range [first, last].
struct IndexRange {
    std::size_t first = 1;
    std::size_t last = 1;
};

/// Least-squares slope of log x_n against log n over the range.
/// Requires last >= 2 first and every value in range > 0.
double fit_exponent(std::span<const double> sequence, IndexRange range);

struct RegularityClassSpec {
    double gamma = 1.0;
    std::optional<double> alpha;  ///< 0 < alpha < gamma when present

    void validate() const;
};

struct RegularityViolation {
    std::size_t index = 0;  ///< 1-based n at which x_n -> x_{n+1} fails
    std::string condition;
};

struct RegularityResult {
    bool inClass = true;
    std::vector<RegularityViolation> violations;  ///< first failure of each condition
};

/// Finite-range check that x is nonincreasing, n^gamma x_n nondecreasing and,
/// if alpha is given, n^alpha x_n nonincreasing; relative slack 1e-12 per step.
RegularityResult regularity_check(std::span<const double> sequence,
                                  const RegularityClassSpec& spec);

struct VerificationReport {
    std::string symbolId;
    SpaceSpec space;
    IndexRange indexRange;
    double ratioMin = 0.0;
    double ratioMax = 0.0;
    double fittedExponentSpectrum = 0.0;
    double fittedExponentSequence = 0.0;  ///< exponent of sqrt(sequence_n)
    double minimalTraceConstant = 0.0;
    std::size_t certifiedUpTo = 0;
    std::size_t convergedPrefixLength = 0;
    std::size_t certifiedPrefixLength = 0;

    double ratio_spread() const { return ratioMax / ratioMin; }
};

/// r_n = s_n / sqrt(sequence_n) over the range. Throws InvalidArgument if the
/// range leaves the converged or the certified prefix.
VerificationReport two_sided_report(const SingularSpectrum& spectrum,
                                    const RearrangedSequence& rearranged, IndexRange range,
                                    std::string symbolId = {}, SpaceSpec space = {});

/// max over n <= nMax of (sum_{j<=n} tau_j) / (sum_{j<=n} s_j^2).
/// Throws NumericalFailure when the spectrum vanishes (B would be infinite).
double trace_constant(std::span<const double> singularValues, std::span<const double> sequence,
                      std::size_t nMax);
double trace_inequality_report(const SingularSpectrum& spectrum,
                               const RearrangedSequence& rearranged, std::size_t nMax);

struct HSumComparison {
    double windowSum = 0.0;  ///< sum over generations <= G-2 of h(nu(W)/|I|)
    double innerSum = 0.0;   ///< sum over generations <= G of h(nu(R)/|I|)
    double ratio = 1.0;      ///< smallest B' with windowSum <= sum h(B' nu(R)/|I|)
};

/// Window-versus-inner-half comparison with h(t) = t^q, 1 < q <= 4.
HSumComparison h_sum_comparison(const BoxMeasureTable& table, double q);

struct H1Profile {
    std::vector<double> radii;
    std::vector<double> means;  ///< int |g'(r e^{i theta})| dtheta / 2pi
    double sup = 0.0;
};

/// Circle means of |g'| on r = 1 - 2^{-k}, k = 1..10, trapezoid rule with
/// 2^14 nodes.
H1Profile h1_norm_estimate(const AnalyticSymbol& symbol);

} // namespace vlab
