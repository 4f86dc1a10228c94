#pragma once

// Analytic symbols g with exact Taylor coefficients and closed-form g'.
//
// Only g' enters the integration operator, so b_0 is carried for
// completeness and never affects operator matrices.

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace vlab {

enum class SymbolKind { monomial, polynomial, power, log, lacunary };

std::string to_string(SymbolKind kind);

class AnalyticSymbol {
public:
    /// c * z^degree. Degree 0 gives a constant symbol.
    static AnalyticSymbol monomial(int degree = 1, double scale = 1.0);
    /// sum_m coefficients[m] z^m
    static AnalyticSymbol polynomial(std::vector<double> coefficients);
    /// (1 - z)^beta, beta in (0, 1).
    static AnalyticSymbol power(double beta);
    /// log(1 / (1 - z)).
    static AnalyticSymbol logarithm();
    /// sum_{n >= 0} 2^{-n sigma} z^{2^n}, sigma > 0.
    static AnalyticSymbol lacunary(double sigma);

    SymbolKind kind() const { return kind_; }
    double parameter() const { return parameter_; }
    int degree() const;  ///< polynomial degree; -1 for transcendental kinds

    /// Short stable identifier, e.g. "power(beta=0.5)".
    std::string id() const;

    /// b_0 .. b_M. Throws InvalidArgument for M <= 0.
    std::vector<double> taylor_coefficients(int M) const;

    std::complex<double> derivative_at(std::complex<double> z) const;

    /// g'(r e^{i theta}) with depth = 1 - r supplied separately; for symbols
    /// singular at z = 1 the factor 1 - z is formed without cancellation.
    std::complex<double> derivative_polar(double r, double depth, double theta) const;

    /// True when g' vanishes identically.
    bool is_constant() const;

    /// Boundary points (as angles in [0, 2pi)) where g' is unbounded.
    std::vector<double> boundary_singularities() const;

    /// Highest angular frequency of g'(r e^{i theta}) that carries non-negligible
    /// weight at radius r. Zero for symbols whose |g'| varies only through a
    /// boundary singularity.
    double angular_bandwidth(double r) const;

private:
    AnalyticSymbol(SymbolKind kind, double parameter, std::vector<double> coefficients)
        : kind_(kind)
        , parameter_(parameter)
        , coefficients_(std::move(coefficients))
    {
    }

    SymbolKind kind_;
    double parameter_;
    std::vector<double> coefficients_;  // polynomial / monomial only
};

enum class Space { hardy, bergman };

struct SpaceSpec {
    Space space = Space::hardy;
    std::optional<double> alpha;  ///< Bergman weight, > -1; absent for Hardy

    static SpaceSpec hardy() { return {}; }
    /// Throws InvalidArgument unless alpha > -1.
    static SpaceSpec bergman(double alpha);

    bool is_hardy() const { return space == Space::hardy; }
    std::string id() const;
};

/// max over an angular grid of (1 - r^2)|g'(r e^{i theta})| for each radius.
std::vector<double> little_bloch_profile(const AnalyticSymbol& symbol,
                                         std::span<const double> radii,
                                         int angularSamples = 4096);

} // namespace vlab
