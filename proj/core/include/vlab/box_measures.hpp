#pragma once

// Dyadic box measures of a symbol:
//   m_g = |g'|^2 (1-|z|^2)^2 dm  on inner halves R(I)   (Bergman side)
//   nu_g = |g'|^2 (1-|z|^2) dm   on windows W(I)        (Hardy side)
// their normalized ratios, nonincreasing rearrangements with a certified
// prefix, and the diagnostics built on top of them.

#include "vlab/disc_dyadics.hpp"
#include "vlab/operator_matrices.hpp"
#include "vlab/symbols.hpp"

#include <vector>

namespace vlab {

/// int_region |g'|^2 (1-|z|^2)^sigma dm, by tensor Gauss-Legendre with order
/// doubling from 16 up to 512.
double integrate_density(const AnalyticSymbol& symbol, const Region& region, double sigma,
                         double tol);

struct WindowMassDetail {
    double value = 0.0;
    std::vector<double> strips;  ///< masses of r in [1-2^{-n-j}, 1-2^{-n-j-1}), j = 0..J-1
    double tailRatio = 0.0;      ///< last / penultimate strip
    double tail = 0.0;           ///< geometric extrapolation of strips j >= J
};

inline constexpr double kMaxTailRatio = 0.95;

/// Mass of the Carleson window as a sum of J graded radial strips plus a
/// geometric tail. Throws TailDivergence when the strip ratio is >= 0.95.
WindowMassDetail window_mass_detail(const AnalyticSymbol& symbol, const DyadicBox& box,
                                    double sigma, double tol, int strips);
double window_mass(const AnalyticSymbol& symbol, const DyadicBox& box, double sigma,
                   double tol, int strips);

struct BoxEntry {
    DyadicBox box;
    double innerHalfMass = 0.0;
    double windowMass = 0.0;
    double ratio = 0.0;
};

struct TableOptions {
    double tolerance = 1e-10;
    int strips = 20;
    unsigned threads = 1;
};

struct BoxMeasureTable {
    SpaceSpec space;
    int maxGeneration = 0;
    double quadratureTolerance = 0.0;
    int strips = 0;
    std::string symbolId;
    /// All boxes of generations 1..G in canonical (generation, position) order.
    std::vector<BoxEntry> entries;

    const BoxEntry& at(const DyadicBox& box) const;
    /// sigma of the measure recorded in this table: 2 for Bergman, 1 for Hardy.
    double sigma() const { return space.is_hardy() ? 1.0 : 2.0; }
};

inline constexpr int kMaxTableGeneration = 16;

/// Bergman: ratio = m_g(R) / m(R). Hardy: ratio = nu_g(W) / |I|.
/// Both masses are recorded for every box with the space's sigma.
BoxMeasureTable build_table(const AnalyticSymbol& symbol, const SpaceSpec& space, int G,
                            const TableOptions& options = {});

struct RearrangedSequence {
    std::vector<double> values;            ///< nonincreasing
    std::vector<DyadicBox> sourceBoxes;    ///< aligned with values
    std::size_t certifiedPrefixLength = 0;
    double safetyFactor = 2.0;
    double deepestGenerationSup = 0.0;
};

/// Sort ratios descending (ties by generation then position). Values strictly
/// above safetyFactor * (sup over generation G) are certified.
RearrangedSequence rearrange(const BoxMeasureTable& table, double safetyFactor = 2.0);

/// sup of the ratios in each generation 1..G.
std::vector<double> compactness_diagnostic(const BoxMeasureTable& table);

struct SchattenPartialSum {
    double total = 0.0;
    std::vector<double> increments;  ///< per generation 1..G
};

/// sum over boxes of ratio^p.
SchattenPartialSum schatten_partial_sum(const BoxMeasureTable& table, double p);

/// mu_n = sum_{k >= n} mu(R(I_k)) delta_{z_k}, with I_k in rearranged order
/// (1-based n) and z_k the polar center of R(I_k). Boxes with zero inner-half
/// mass carry no atom. Throws UncertifiedIndex if n exceeds the certified prefix.
DiscreteMeasure discretize_inner_halves(const BoxMeasureTable& table,
                                        const RearrangedSequence& rearranged,
                                        std::size_t startIndex);
DiscreteMeasure discretize_inner_halves(const BoxMeasureTable& table, std::size_t startIndex);

/// sup over boxes of generation <= G of mu(W(I)) / |I| for a discrete measure.
double discrete_window_sup(const DiscreteMeasure& measure, int G);

} // namespace vlab
