#include "vlab/symbols.hpp"

#include "vlab/disc_dyadics.hpp"
#include "vlab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace vlab {

namespace {

constexpr double kLacunaryCutoff = 1e-18;
constexpr int kLacunaryMaxTerms = 62;

std::string format_parameter(double x)
{
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

} // namespace

std::string to_string(SymbolKind kind)
{
    switch (kind) {
    case SymbolKind::monomial: return "monomial";
    case SymbolKind::polynomial: return "polynomial";
    case SymbolKind::power: return "power";
    case SymbolKind::log: return "log";
    case SymbolKind::lacunary: return "lacunary";
    }
    return "unknown";
}

AnalyticSymbol AnalyticSymbol::monomial(int degree, double scale)
{
    if (degree < 0) {
        throw InvalidArgument("monomial degree must be >= 0");
    }
    if (!std::isfinite(scale)) {
        throw InvalidArgument("monomial scale must be finite");
    }
    std::vector<double> c(static_cast<std::size_t>(degree) + 1, 0.0);
    c.back() = scale;
    return {SymbolKind::monomial, static_cast<double>(degree), std::move(c)};
}

AnalyticSymbol AnalyticSymbol::polynomial(std::vector<double> coefficients)
{
    if (coefficients.empty()) {
        throw InvalidArgument("polynomial symbol needs at least one coefficient");
    }
    for (double c : coefficients) {
        if (!std::isfinite(c)) {
            throw InvalidArgument("polynomial coefficients must be finite");
        }
    }
    return {SymbolKind::polynomial, 0.0, std::move(coefficients)};
}

AnalyticSymbol AnalyticSymbol::power(double beta)
{
    if (!(beta > 0.0 && beta < 1.0)) {
        throw InvalidArgument("power symbol exponent beta must lie in (0, 1)");
    }
    return {SymbolKind::power, beta, {}};
}

AnalyticSymbol AnalyticSymbol::logarithm()
{
    return {SymbolKind::log, 0.0, {}};
}

AnalyticSymbol AnalyticSymbol::lacunary(double sigma)
{
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw InvalidArgument("lacunary decay sigma must be positive");
    }
    return {SymbolKind::lacunary, sigma, {}};
}

int AnalyticSymbol::degree() const
{
    if (kind_ == SymbolKind::monomial || kind_ == SymbolKind::polynomial) {
        return static_cast<int>(coefficients_.size()) - 1;
    }
    return -1;
}

std::string AnalyticSymbol::id() const
{
    switch (kind_) {
    case SymbolKind::monomial: {
        std::string s = "monomial(degree=" + std::to_string(degree());
        if (coefficients_.back() != 1.0) {
            s += ",scale=" + format_parameter(coefficients_.back());
        }
        return s + ")";
    }
    case SymbolKind::polynomial: {
        std::string s = "polynomial(";
        for (std::size_t m = 0; m < coefficients_.size(); ++m) {
            s += (m ? "," : "") + format_parameter(coefficients_[m]);
        }
        return s + ")";
    }
    case SymbolKind::power: return "power(beta=" + format_parameter(parameter_) + ")";
    case SymbolKind::log: return "log";
    case SymbolKind::lacunary: return "lacunary(sigma=" + format_parameter(parameter_) + ")";
    }
    return "unknown";
}

std::vector<double> AnalyticSymbol::taylor_coefficients(int M) const
{
    if (M <= 0) {
        throw InvalidArgument("coefficient count M must be >= 1");
    }
    std::vector<double> b(static_cast<std::size_t>(M) + 1, 0.0);
    switch (kind_) {
    case SymbolKind::monomial:
    case SymbolKind::polynomial:
        std::copy_n(coefficients_.begin(), std::min(coefficients_.size(), b.size()), b.begin());
        break;
    case SymbolKind::power: {
        // (-1)^m binom(beta, m) through b_{m+1} = b_m (m - beta) / (m + 1)
        const double beta = parameter_;
        b[0] = 1.0;
        for (int m = 0; m < M; ++m) {
            b[m + 1] = b[m] * (m - beta) / (m + 1);
        }
        break;
    }
    case SymbolKind::log:
        for (int m = 1; m <= M; ++m) {
            b[m] = 1.0 / m;
        }
        break;
    case SymbolKind::lacunary:
        for (int n = 0; n < kLacunaryMaxTerms; ++n) {
            const std::int64_t index = std::int64_t{1} << n;
            if (index > M) {
                break;
            }
            b[static_cast<std::size_t>(index)] = std::exp2(-n * parameter_);
        }
        break;
    }
    return b;
}

std::complex<double> AnalyticSymbol::derivative_at(std::complex<double> z) const
{
    using C = std::complex<double>;
    switch (kind_) {
    case SymbolKind::monomial:
    case SymbolKind::polynomial: {
        // Horner on sum m b_m z^{m-1}
        C acc{0.0, 0.0};
        for (std::size_t m = coefficients_.size(); m-- > 1;) {
            acc = acc * z + static_cast<double>(m) * coefficients_[m];
        }
        return acc;
    }
    case SymbolKind::power: {
        const double beta = parameter_;
        return -beta * std::pow(C{1.0, 0.0} - z, beta - 1.0);
    }
    case SymbolKind::log:
        return 1.0 / (C{1.0, 0.0} - z);
    case SymbolKind::lacunary: {
        // sum 2^{n(1-sigma)} z^{2^n - 1}, stopping once terms fall below the cutoff
        const double sigma = parameter_;
        C acc{0.0, 0.0};
        C zpow{1.0, 0.0};  // z^{2^n - 1}
        for (int n = 0; n < kLacunaryMaxTerms; ++n) {
            const C term = std::exp2(n * (1.0 - sigma)) * zpow;
            acc += term;
            if (std::abs(term) < kLacunaryCutoff && n > 0) {
                break;
            }
            // z^{2^{n+1} - 1} = z^{2^n - 1} * z^{2^n - 1} * z
            zpow = zpow * zpow * z;
        }
        return acc;
    }
    }
    return {};
}

std::complex<double> AnalyticSymbol::derivative_polar(double r, double depth, double theta) const
{
    using C = std::complex<double>;
    if (kind_ != SymbolKind::power && kind_ != SymbolKind::log) {
        return derivative_at(std::polar(r, theta));
    }
    // 1 - r e^{i theta} = (1 - r) + 2 r sin^2(theta / 2) - i r sin(theta)
    const double s = std::sin(0.5 * theta);
    const C w{depth + 2.0 * r * s * s, -r * std::sin(theta)};
    if (kind_ == SymbolKind::log) {
        return 1.0 / w;
    }
    const double beta = parameter_;
    return -beta * std::pow(w, beta - 1.0);
}

bool AnalyticSymbol::is_constant() const
{
    if (kind_ == SymbolKind::monomial || kind_ == SymbolKind::polynomial) {
        return std::all_of(coefficients_.begin() + 1, coefficients_.end(),
                           [](double c) { return c == 0.0; });
    }
    return false;
}

std::vector<double> AnalyticSymbol::boundary_singularities() const
{
    if (kind_ == SymbolKind::power || kind_ == SymbolKind::log) {
        return {0.0};
    }
    return {};
}

double AnalyticSymbol::angular_bandwidth(double r) const
{
    switch (kind_) {
    case SymbolKind::monomial:
    case SymbolKind::polynomial:
        // |g'|^2 is a trigonometric polynomial of degree 2(d - 1)
        return std::max(0, 2 * (degree() - 1));
    case SymbolKind::power:
    case SymbolKind::log:
        return 0.0;
    case SymbolKind::lacunary: {
        const double sigma = parameter_;
        double top = 0.0;
        double peak = 0.0;
        for (int n = 0; n < kLacunaryMaxTerms; ++n) {
            const double freq = std::exp2(n);
            const double weight = std::exp2(n * (1.0 - sigma)) * std::pow(r, freq - 1.0);
            peak = std::max(peak, weight);
            if (weight < 1e-12 * peak) {
                break;
            }
            top = freq;
        }
        return 2.0 * top;
    }
    }
    return 0.0;
}

SpaceSpec SpaceSpec::bergman(double alpha)
{
    if (!(alpha > -1.0) || !std::isfinite(alpha)) {
        throw InvalidArgument("Bergman weight alpha must be > -1");
    }
    return {Space::bergman, alpha};
}

std::string SpaceSpec::id() const
{
    if (is_hardy()) {
        return "hardy";
    }
    std::ostringstream os;
    os.precision(17);
    os << "bergman(alpha=" << *alpha << ")";
    return os.str();
}

std::vector<double> little_bloch_profile(const AnalyticSymbol& symbol,
                                         std::span<const double> radii,
                                         int angularSamples)
{
    if (angularSamples < 1) {
        throw InvalidArgument("angular sample count must be positive");
    }
    std::vector<double> out;
    out.reserve(radii.size());
    for (double r : radii) {
        if (!(r > 0.0 && r < 1.0)) {
            throw InvalidArgument("little Bloch profile radii must lie in (0, 1)");
        }
        double best = 0.0;
        for (int i = 0; i < angularSamples; ++i) {
            const double theta = kTwoPi * i / angularSamples;
            best = std::max(best, std::abs(symbol.derivative_at(std::polar(r, theta))));
        }
        out.push_back((1.0 - r * r) * best);
    }
    return out;
}

} // namespace vlab
