#pragma once

// Tensor Gauss-Legendre quadrature on polar rectangles of the disc, against
// normalized area measure dm = r dr dtheta / pi.
//
// The rectangle is split into tensor panels: geometrically graded toward any
// boundary singularity whose angle touches the rectangle, and uniformly
// refined so each angular panel spans a bounded number of oscillations. All
// panels then share one Gauss-Legendre order q, doubled from the initial
// order until two successive totals agree to the requested relative tolerance.

#include "vlab/disc_dyadics.hpp"

#include <functional>
#include <vector>

namespace vlab {

struct GaussLegendreRule {
    std::vector<double> nodes;    ///< on [-1, 1], ascending
    std::vector<double> weights;
};

/// Cached rule of the given order (order >= 1). Thread-safe.
const GaussLegendreRule& gauss_legendre(int order);

struct PolarQuadratureOptions {
    double tolerance = 1e-10;          ///< relative, between successive orders
    double absoluteTolerance = 0.0;    ///< accepted absolute change, for tiny sub-integrals
    int initialOrder = 16;
    int maxOrder = 512;
    std::vector<double> singularAngles;  ///< boundary points of the integrand, radians
    double bandwidth = 0.0;              ///< highest angular frequency of the integrand
    int maxAngularPanels = 4096;
};

/// Integrand as a function of (r, 1 - r, theta). The depth 1 - r is computed
/// without cancellation so integrands can resolve points very near the circle.
using PolarIntegrand = std::function<double(double, double, double)>;

/// Integral over `region` of f(r, theta) dm. Throws QuadratureFailure when
/// the order cap is reached without convergence.
double integrate_polar(const Region& region, const PolarIntegrand& f,
                       const PolarQuadratureOptions& options);

/// Panel breakpoints used by integrate_polar; exposed for tests.
struct PanelLayout {
    std::vector<double> radial;
    std::vector<double> angular;
};
PanelLayout panel_layout(const Region& region, const PolarQuadratureOptions& options);

} // namespace vlab
