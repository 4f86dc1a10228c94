#include "vlab/box_measures.hpp"

#include "vlab/errors.hpp"
#include "vlab/parallel.hpp"
#include "vlab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace vlab {

namespace {

double weight_power(double oneMinusRSquared, double sigma)
{
    if (sigma == 1.0) {
        return oneMinusRSquared;
    }
    if (sigma == 2.0) {
        return oneMinusRSquared * oneMinusRSquared;
    }
    return std::pow(oneMinusRSquared, sigma);
}

double integrate_density_impl(const AnalyticSymbol& symbol, const Region& region, double sigma,
                              double tol, double absTol)
{
    if (!(tol > 0.0)) {
        throw InvalidArgument("quadrature tolerance must be positive");
    }
    if (!(sigma >= 0.0)) {
        throw InvalidArgument("density exponent sigma must be >= 0");
    }
    if (symbol.is_constant()) {
        return 0.0;
    }
    PolarQuadratureOptions opts;
    opts.tolerance = tol;
    opts.absoluteTolerance = absTol;
    opts.singularAngles = symbol.boundary_singularities();
    opts.bandwidth = symbol.angular_bandwidth(region.radialUpper);
    const PolarIntegrand integrand = [&](double r, double depth, double theta) {
        const double density = std::norm(symbol.derivative_polar(r, depth, theta));
        return density * weight_power(depth * (1.0 + r), sigma);
    };
    return integrate_polar(region, integrand, opts);
}

} // namespace

double integrate_density(const AnalyticSymbol& symbol, const Region& region, double sigma,
                         double tol)
{
    return integrate_density_impl(symbol, region, sigma, tol, 0.0);
}

WindowMassDetail window_mass_detail(const AnalyticSymbol& symbol, const DyadicBox& box,
                                    double sigma, double tol, int strips)
{
    if (strips < 4) {
        throw InvalidArgument("window mass needs at least 4 grading strips");
    }
    const auto arc = arc_interval(box);
    WindowMassDetail detail;
    detail.strips.reserve(static_cast<std::size_t>(strips));
    for (int j = 0; j < strips; ++j) {
        const int depth = box.generation + j;
        const Region strip{1.0 - std::ldexp(1.0, -depth), 1.0 - std::ldexp(1.0, -depth - 1),
                           arc.lower, arc.upper};
        // deeper strips only need to be accurate relative to the whole window
        const double absTol = j == 0 ? 0.0 : tol * detail.strips.front() / strips;
        detail.strips.push_back(integrate_density_impl(symbol, strip, sigma, tol, absTol));
    }
    const double last = detail.strips[static_cast<std::size_t>(strips - 1)];
    const double penultimate = detail.strips[static_cast<std::size_t>(strips - 2)];
    if (last > 0.0) {
        detail.tailRatio = penultimate > 0.0 ? last / penultimate : INFINITY;
        if (!(detail.tailRatio < kMaxTailRatio)) {
            throw TailDivergence(detail.tailRatio, box.label());
        }
        detail.tail = last * detail.tailRatio / (1.0 - detail.tailRatio);
    }
    detail.value = std::accumulate(detail.strips.begin(), detail.strips.end(), 0.0) + detail.tail;
    return detail;
}

double window_mass(const AnalyticSymbol& symbol, const DyadicBox& box, double sigma, double tol,
                   int strips)
{
    return window_mass_detail(symbol, box, sigma, tol, strips).value;
}

const BoxEntry& BoxMeasureTable::at(const DyadicBox& box) const
{
    if (box.generation < 1 || box.generation > maxGeneration) {
        throw InvalidArgument(box.label() + " is outside the table");
    }
    return entries[canonical_index(box)];
}

BoxMeasureTable build_table(const AnalyticSymbol& symbol, const SpaceSpec& space, int G,
                            const TableOptions& options)
{
    if (G < 1 || G > kMaxTableGeneration) {
        throw InvalidArgument("table generation count must lie in [1, " +
                              std::to_string(kMaxTableGeneration) + "]");
    }
    BoxMeasureTable table;
    table.space = space;
    table.maxGeneration = G;
    table.quadratureTolerance = options.tolerance;
    table.strips = options.strips;
    table.symbolId = symbol.id();
    const double sigma = table.sigma();

    const auto count = static_cast<std::size_t>(boxes_up_to(G));
    table.entries.resize(count);
    parallel_for(count, options.threads, [&](std::size_t i) {
        const DyadicBox box = box_at_canonical_index(i);
        BoxEntry entry;
        entry.box = box;
        try {
            entry.innerHalfMass =
                integrate_density(symbol, inner_half_region(box), sigma, options.tolerance);
            entry.windowMass = window_mass(symbol, box, sigma, options.tolerance, options.strips);
        } catch (const QuadratureFailure& failure) {
            throw failure.with_context(box.label());
        } catch (const TailDivergence& failure) {
            throw TailDivergence(failure.ratio(), box.label());
        } catch (const NumericalFailure& failure) {
            throw NumericalFailure(std::string(failure.what()) + " (" + box.label() + ")");
        }
        entry.ratio = space.is_hardy()
                          ? entry.windowMass / arc_length(box)
                          : entry.innerHalfMass / normalized_area(inner_half_region(box));
        table.entries[i] = entry;
    });
    return table;
}

RearrangedSequence rearrange(const BoxMeasureTable& table, double safetyFactor)
{
    if (!(safetyFactor >= 1.0)) {
        throw InvalidArgument("certification safety factor must be >= 1");
    }
    std::vector<BoxEntry> sorted = table.entries;
    // ties keep (generation, position) order
    std::sort(sorted.begin(), sorted.end(), [](const BoxEntry& a, const BoxEntry& b) {
        if (a.ratio != b.ratio) {
            return a.ratio > b.ratio;
        }
        return a.box < b.box;
    });

    RearrangedSequence out;
    out.safetyFactor = safetyFactor;
    out.values.reserve(sorted.size());
    out.sourceBoxes.reserve(sorted.size());
    for (const auto& e : sorted) {
        out.values.push_back(e.ratio);
        out.sourceBoxes.push_back(e.box);
    }
    for (const auto& e : table.entries) {
        if (e.box.generation == table.maxGeneration) {
            out.deepestGenerationSup = std::max(out.deepestGenerationSup, e.ratio);
        }
    }
    const double threshold = safetyFactor * out.deepestGenerationSup;
    out.certifiedPrefixLength = static_cast<std::size_t>(
        std::count_if(out.values.begin(), out.values.end(),
                      [threshold](double v) { return v > threshold; }));
    return out;
}

std::vector<double> compactness_diagnostic(const BoxMeasureTable& table)
{
    std::vector<double> sups(static_cast<std::size_t>(table.maxGeneration), 0.0);
    for (const auto& e : table.entries) {
        auto& s = sups[static_cast<std::size_t>(e.box.generation - 1)];
        s = std::max(s, e.ratio);
    }
    return sups;
}

SchattenPartialSum schatten_partial_sum(const BoxMeasureTable& table, double p)
{
    if (!(p > 0.0)) {
        throw InvalidArgument("Schatten exponent p must be positive");
    }
    SchattenPartialSum out;
    out.increments.assign(static_cast<std::size_t>(table.maxGeneration), 0.0);
    for (const auto& e : table.entries) {
        out.increments[static_cast<std::size_t>(e.box.generation - 1)] += std::pow(e.ratio, p);
    }
    out.total = std::accumulate(out.increments.begin(), out.increments.end(), 0.0);
    return out;
}

DiscreteMeasure discretize_inner_halves(const BoxMeasureTable& table,
                                        const RearrangedSequence& rearranged,
                                        std::size_t startIndex)
{
    if (startIndex < 1) {
        throw InvalidArgument("discretization start index is 1-based");
    }
    const bool allZero = std::all_of(table.entries.begin(), table.entries.end(),
                                     [](const BoxEntry& e) { return e.innerHalfMass == 0.0; });
    if (allZero) {
        return {};
    }
    if (startIndex > rearranged.certifiedPrefixLength) {
        throw UncertifiedIndex("discretization start index " + std::to_string(startIndex) +
                               " exceeds the certified prefix length " +
                               std::to_string(rearranged.certifiedPrefixLength));
    }
    std::vector<DiscPoint> points;
    std::vector<double> masses;
    for (std::size_t k = startIndex - 1; k < rearranged.sourceBoxes.size(); ++k) {
        const auto& box = rearranged.sourceBoxes[k];
        const double mass = table.at(box).innerHalfMass;
        if (mass > 0.0) {
            points.emplace_back(inner_half_region(box).center());
            masses.push_back(mass);
        }
    }
    return {std::move(points), std::move(masses)};
}

DiscreteMeasure discretize_inner_halves(const BoxMeasureTable& table, std::size_t startIndex)
{
    return discretize_inner_halves(table, rearrange(table), startIndex);
}

double discrete_window_sup(const DiscreteMeasure& measure, int G)
{
    if (G < 1 || G > kMaxGeneration) {
        throw InvalidArgument("generation bound out of range");
    }
    std::vector<double> windowMass(static_cast<std::size_t>(boxes_up_to(G)), 0.0);
    const auto pts = measure.points();
    const auto masses = measure.masses();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const double r = pts[i].modulus();
        const double theta = principal_angle(pts[i].value());
        for (int n = 1; n <= G; ++n) {
            if (r < 1.0 - std::ldexp(1.0, -n)) {
                break;  // windows shrink radially with n
            }
            auto k = static_cast<std::int64_t>(std::floor(theta / std::ldexp(kTwoPi, -n)));
            k = std::clamp<std::int64_t>(k, 0, boxes_in_generation(n) - 1);
            windowMass[canonical_index({n, k})] += masses[i];
        }
    }
    double sup = 0.0;
    for (std::size_t idx = 0; idx < windowMass.size(); ++idx) {
        const DyadicBox box = box_at_canonical_index(idx);
        sup = std::max(sup, windowMass[idx] / arc_length(box));
    }
    return sup;
}

} // namespace vlab
