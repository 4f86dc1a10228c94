#include "vlab/asymptotics.hpp"

#include "vlab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace vlab {

namespace {

constexpr double kMonotoneSlack = 1e-12;

void check_range(std::span<const double> sequence, IndexRange range)
{
    if (range.first < 1 || range.last < range.first || range.last > sequence.size()) {
        throw InvalidArgument("index range [" + std::to_string(range.first) + ", " +
                              std::to_string(range.last) + "] outside sequence of length " +
                              std::to_string(sequence.size()));
    }
}

} // namespace

double fit_exponent(std::span<const double> sequence, IndexRange range)
{
    check_range(sequence, range);
    if (range.last < 2 * range.first) {
        throw InvalidArgument("fit range needs last >= 2 * first");
    }
    const auto count = static_cast<double>(range.last - range.first + 1);
    double meanX = 0.0;
    double meanY = 0.0;
    for (std::size_t n = range.first; n <= range.last; ++n) {
        const double v = sequence[n - 1];
        if (!(v > 0.0)) {
            throw InvalidArgument("cannot fit a power law through nonpositive value at n = " +
                                  std::to_string(n));
        }
        meanX += std::log(static_cast<double>(n));
        meanY += std::log(v);
    }
    meanX /= count;
    meanY /= count;
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t n = range.first; n <= range.last; ++n) {
        const double dx = std::log(static_cast<double>(n)) - meanX;
        sxy += dx * (std::log(sequence[n - 1]) - meanY);
        sxx += dx * dx;
    }
    return sxy / sxx;
}

void RegularityClassSpec::validate() const
{
    if (!(gamma > 0.0)) {
        throw InvalidArgument("regularity exponent gamma must be positive");
    }
    if (alpha && !(*alpha > 0.0 && *alpha < gamma)) {
        throw InvalidArgument("regularity exponent alpha must lie in (0, gamma)");
    }
}

RegularityResult regularity_check(std::span<const double> sequence,
                                  const RegularityClassSpec& spec)
{
    spec.validate();
    RegularityResult result;
    bool seenMonotone = false;
    bool seenGamma = false;
    bool seenAlpha = false;
    auto flag = [&](bool& seen, std::size_t n, std::string what) {
        if (!seen) {
            seen = true;
            result.violations.push_back({n, std::move(what)});
        }
    };
    for (std::size_t n = 1; n < sequence.size(); ++n) {
        const double a = sequence[n - 1];
        const double b = sequence[n];
        if (!(a > 0.0) || !(b > 0.0)) {
            throw InvalidArgument("regularity check needs a positive sequence");
        }
        const auto dn = static_cast<double>(n);
        if (b > a * (1.0 + kMonotoneSlack)) {
            flag(seenMonotone, n, "sequence increases");
        }
        const double gPrev = std::pow(dn, spec.gamma) * a;
        const double gNext = std::pow(dn + 1.0, spec.gamma) * b;
        if (gNext < gPrev * (1.0 - kMonotoneSlack)) {
            flag(seenGamma, n, "n^gamma x_n decreases");
        }
        if (spec.alpha) {
            const double aPrev = std::pow(dn, *spec.alpha) * a;
            const double aNext = std::pow(dn + 1.0, *spec.alpha) * b;
            if (aNext > aPrev * (1.0 + kMonotoneSlack)) {
                flag(seenAlpha, n, "n^alpha x_n increases");
            }
        }
    }
    result.inClass = result.violations.empty();
    return result;
}

double trace_constant(std::span<const double> singularValues, std::span<const double> sequence,
                      std::size_t nMax)
{
    if (nMax < 1 || nMax > singularValues.size() || nMax > sequence.size()) {
        throw InvalidArgument("trace constant range exceeds the available data");
    }
    if (std::all_of(singularValues.begin(), singularValues.end(),
                    [](double s) { return s == 0.0; })) {
        throw NumericalFailure("zero spectrum: trace constant B is infinite");
    }
    double sumTau = 0.0;
    double sumS2 = 0.0;
    double best = 0.0;
    for (std::size_t n = 1; n <= nMax; ++n) {
        sumTau += sequence[n - 1];
        sumS2 += singularValues[n - 1] * singularValues[n - 1];
        if (sumS2 == 0.0) {
            if (sumTau > 0.0) {
                throw NumericalFailure("trace constant B is infinite at n = " + std::to_string(n));
            }
            continue;
        }
        best = std::max(best, sumTau / sumS2);
    }
    return best;
}

double trace_inequality_report(const SingularSpectrum& spectrum,
                               const RearrangedSequence& rearranged, std::size_t nMax)
{
    if (std::all_of(spectrum.values.begin(), spectrum.values.end(),
                    [](double s) { return s == 0.0; })) {
        throw NumericalFailure("zero spectrum: trace constant B is infinite");
    }
    if (nMax > spectrum.convergedPrefixLength || nMax > rearranged.certifiedPrefixLength) {
        throw InvalidArgument("trace report nMax = " + std::to_string(nMax) +
                              " exceeds the converged (" +
                              std::to_string(spectrum.convergedPrefixLength) +
                              ") or certified (" +
                              std::to_string(rearranged.certifiedPrefixLength) + ") prefix");
    }
    return trace_constant(spectrum.values, rearranged.values, nMax);
}

VerificationReport two_sided_report(const SingularSpectrum& spectrum,
                                    const RearrangedSequence& rearranged, IndexRange range,
                                    std::string symbolId, SpaceSpec space)
{
    const std::size_t usable =
        std::min(spectrum.convergedPrefixLength, rearranged.certifiedPrefixLength);
    if (range.first < 1 || range.last < range.first || range.last > usable) {
        throw InvalidArgument("report range [" + std::to_string(range.first) + ", " +
                              std::to_string(range.last) + "] exceeds the converged (" +
                              std::to_string(spectrum.convergedPrefixLength) +
                              ") or certified (" +
                              std::to_string(rearranged.certifiedPrefixLength) + ") prefix");
    }
    VerificationReport report;
    report.symbolId = std::move(symbolId);
    report.space = space;
    report.indexRange = range;
    report.convergedPrefixLength = spectrum.convergedPrefixLength;
    report.certifiedPrefixLength = rearranged.certifiedPrefixLength;
    report.certifiedUpTo = usable;

    std::vector<double> rootSequence(range.last);
    for (std::size_t n = 1; n <= range.last; ++n) {
        rootSequence[n - 1] = std::sqrt(rearranged.values[n - 1]);
    }
    report.ratioMin = std::numeric_limits<double>::infinity();
    report.ratioMax = 0.0;
    for (std::size_t n = range.first; n <= range.last; ++n) {
        const double ratio = spectrum.values[n - 1] / rootSequence[n - 1];
        report.ratioMin = std::min(report.ratioMin, ratio);
        report.ratioMax = std::max(report.ratioMax, ratio);
    }
    report.fittedExponentSpectrum = fit_exponent(spectrum.values, range);
    report.fittedExponentSequence = fit_exponent(rootSequence, range);
    report.minimalTraceConstant = trace_constant(spectrum.values, rearranged.values, range.last);
    return report;
}

HSumComparison h_sum_comparison(const BoxMeasureTable& table, double q)
{
    if (!(q > 1.0 && q <= 4.0)) {
        throw InvalidArgument("h-sum exponent q must lie in (1, 4]");
    }
    HSumComparison out;
    for (const auto& e : table.entries) {
        const double scale = std::ldexp(1.0, e.box.generation) / kTwoPi;  // 1 / |I|
        if (e.box.generation <= table.maxGeneration - 2) {
            out.windowSum += std::pow(e.windowMass * scale, q);
        }
        out.innerSum += std::pow(e.innerHalfMass * scale, q);
    }
    if (out.innerSum > 0.0) {
        out.ratio = std::pow(out.windowSum / out.innerSum, 1.0 / q);
    }
    return out;
}

H1Profile h1_norm_estimate(const AnalyticSymbol& symbol)
{
    constexpr int kNodes = 1 << 14;
    H1Profile out;
    for (int k = 1; k <= 10; ++k) {
        const double depth = std::ldexp(1.0, -k);
        const double r = 1.0 - depth;
        double sum = 0.0;
        for (int i = 0; i < kNodes; ++i) {
            const double theta = kTwoPi * i / kNodes;
            sum += std::abs(symbol.derivative_polar(r, depth, theta));
        }
        out.radii.push_back(r);
        out.means.push_back(sum / kNodes);
        out.sup = std::max(out.sup, out.means.back());
    }
    return out;
}

} // namespace vlab
