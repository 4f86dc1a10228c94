#include "vlab/quadrature.hpp"

#include "vlab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace vlab {

namespace {

GaussLegendreRule compute_rule(int order)
{
    GaussLegendreRule rule;
    rule.nodes.resize(static_cast<std::size_t>(order));
    rule.weights.resize(static_cast<std::size_t>(order));
    const int half = (order + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Newton on P_order from the Chebyshev-like initial guess
        double x = std::cos(kPi * (i + 0.75) / (order + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= order; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            const double p = order == 1 ? x : p1;
            const double pm1 = order == 1 ? 1.0 : p0;
            dp = order * (x * p - pm1) / (x * x - 1.0);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        // recompute derivative at the converged node
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= order; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        const double p = order == 1 ? x : p1;
        const double pm1 = order == 1 ? 1.0 : p0;
        dp = order * (x * p - pm1) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[static_cast<std::size_t>(i)] = -x;
        rule.nodes[static_cast<std::size_t>(order - 1 - i)] = x;
        rule.weights[static_cast<std::size_t>(i)] = w;
        rule.weights[static_cast<std::size_t>(order - 1 - i)] = w;
    }
    if (order % 2 == 1) {
        rule.nodes[static_cast<std::size_t>(half - 1)] = 0.0;
    }
    return rule;
}

// Breakpoints of [lo, hi] graded geometrically away from `from` (one of the
// ends), first panel of width `first`.
std::vector<double> graded_from(double lo, double hi, double first, bool fromLow)
{
    std::vector<double> pts;
    const double length = hi - lo;
    double offset = 0.0;
    double width = std::min(first, length);
    pts.push_back(fromLow ? lo : hi);
    while (offset + width < length * (1.0 - 1e-12)) {
        offset += width;
        pts.push_back(fromLow ? lo + offset : hi - offset);
        width *= 2.0;
    }
    pts.push_back(fromLow ? hi : lo);
    std::sort(pts.begin(), pts.end());
    return pts;
}

void append_unique(std::vector<double>& dst, const std::vector<double>& src)
{
    for (double x : src) {
        if (dst.empty() || x > dst.back()) {
            dst.push_back(x);
        }
    }
}

} // namespace

const GaussLegendreRule& gauss_legendre(int order)
{
    if (order < 1) {
        throw InvalidArgument("Gauss-Legendre order must be >= 1");
    }
    static std::mutex mutex;
    static std::map<int, GaussLegendreRule> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(order);
    if (it == cache.end()) {
        it = cache.emplace(order, compute_rule(order)).first;
    }
    // std::map nodes are stable, so the reference outlives the lock
    return it->second;
}

PanelLayout panel_layout(const Region& region, const PolarQuadratureOptions& options)
{
    const double a = region.angleLower;
    const double b = region.angleUpper;
    const double r0 = region.radialLower;
    const double r1 = region.radialUpper;
    const double gap = 1.0 - r1;  // distance of the rectangle from the circle
    const double slack = 1e-12 * std::max(1.0, b - a);

    // singular angles that touch [a, b], including images under 2 pi shifts
    std::vector<double> touching;
    for (double s0 : options.singularAngles) {
        for (double s : {s0 - kTwoPi, s0, s0 + kTwoPi}) {
            if (s >= a - slack && s <= b + slack) {
                touching.push_back(std::clamp(s, a, b));
            }
        }
    }
    std::sort(touching.begin(), touching.end());
    touching.erase(std::unique(touching.begin(), touching.end()), touching.end());

    PanelLayout layout;
    if (touching.empty() || !(gap > 0.0)) {
        layout.angular = {a, b};
        layout.radial = {r0, r1};
    } else {
        const double first = std::max(gap, 1e-15 * (b - a));
        // angular: split at each singular angle, grade both neighbours toward it
        std::vector<double> cuts{a};
        for (double s : touching) {
            if (s > cuts.back()) {
                cuts.push_back(s);
            }
        }
        if (b > cuts.back()) {
            cuts.push_back(b);
        }
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            const double lo = cuts[i];
            const double hi = cuts[i + 1];
            const bool lowSingular = std::binary_search(touching.begin(), touching.end(), lo);
            const bool highSingular = std::binary_search(touching.begin(), touching.end(), hi);
            std::vector<double> piece;
            if (lowSingular && highSingular) {
                const double mid = 0.5 * (lo + hi);
                piece = graded_from(lo, mid, first, true);
                append_unique(piece, graded_from(mid, hi, first, false));
            } else if (lowSingular) {
                piece = graded_from(lo, hi, first, true);
            } else if (highSingular) {
                piece = graded_from(lo, hi, first, false);
            } else {
                piece = {lo, hi};
            }
            append_unique(layout.angular, piece);
        }
        // radial: grade toward the outer edge when the rectangle is thick
        layout.radial = graded_from(r0, r1, gap, false);
    }

    if (options.bandwidth > 0.0) {
        const double maxWidth = 4.0 * kPi / options.bandwidth;
        std::vector<double> refined{layout.angular.front()};
        for (std::size_t i = 0; i + 1 < layout.angular.size(); ++i) {
            const double lo = layout.angular[i];
            const double hi = layout.angular[i + 1];
            const auto pieces = static_cast<int>(std::ceil((hi - lo) / maxWidth));
            for (int p = 1; p < pieces; ++p) {
                refined.push_back(lo + (hi - lo) * p / pieces);
            }
            refined.push_back(hi);
        }
        layout.angular = std::move(refined);
    }
    if (static_cast<int>(layout.angular.size()) - 1 > options.maxAngularPanels) {
        throw NumericalFailure("integrand needs more than " +
                               std::to_string(options.maxAngularPanels) +
                               " angular panels on this region");
    }
    return layout;
}

double integrate_polar(const Region& region, const PolarIntegrand& f,
                       const PolarQuadratureOptions& options)
{
    if (!(options.tolerance > 0.0)) {
        throw InvalidArgument("quadrature tolerance must be positive");
    }
    if (!(region.radialLower >= 0.0 && region.radialLower < region.radialUpper &&
          region.radialUpper <= 1.0 && region.angleLower < region.angleUpper)) {
        throw InvalidArgument("degenerate or out-of-disc integration region");
    }
    const PanelLayout layout = panel_layout(region, options);

    auto evaluate = [&](int order) {
        const auto& rule = gauss_legendre(order);
        double total = 0.0;
        for (std::size_t ir = 0; ir + 1 < layout.radial.size(); ++ir) {
            const double rl = layout.radial[ir];
            const double rh = layout.radial[ir + 1];
            const double rMid = 0.5 * (rl + rh);
            const double rHalf = 0.5 * (rh - rl);
            const double depthMid = 0.5 * ((1.0 - rl) + (1.0 - rh));
            for (std::size_t it = 0; it + 1 < layout.angular.size(); ++it) {
                const double tl = layout.angular[it];
                const double th = layout.angular[it + 1];
                const double tMid = 0.5 * (tl + th);
                const double tHalf = 0.5 * (th - tl);
                double panel = 0.0;
                for (int i = 0; i < order; ++i) {
                    const double x = rule.nodes[static_cast<std::size_t>(i)];
                    const double r = rMid + rHalf * x;
                    const double depth = depthMid - rHalf * x;
                    double inner = 0.0;
                    for (int j = 0; j < order; ++j) {
                        const double theta = tMid + tHalf * rule.nodes[static_cast<std::size_t>(j)];
                        inner += rule.weights[static_cast<std::size_t>(j)] * f(r, depth, theta);
                    }
                    panel += rule.weights[static_cast<std::size_t>(i)] * r * inner;
                }
                total += panel * rHalf * tHalf;
            }
        }
        return total / kPi;
    };

    int order = options.initialOrder;
    double older = 0.0;
    double previous = evaluate(order);
    while (order * 2 <= options.maxOrder) {
        order *= 2;
        const double current = evaluate(order);
        const double change = std::abs(current - previous);
        if (change <= options.tolerance * std::abs(current) ||
            change <= options.absoluteTolerance ||
            (current == 0.0 && previous == 0.0)) {
            return current;
        }
        older = previous;
        previous = current;
    }
    throw QuadratureFailure(older, previous);
}

} // namespace vlab
