#pragma once

// Geometry of the unit disc: dyadic arcs, Carleson windows and their inner
// halves, normalized area, and the pseudohyperbolic metric.
//
// Boxes are indexed by generation n >= 1 and 0-based position k in [0, 2^n).
// The children of (n, k) are (n+1, 2k) and (n+1, 2k+1).

#include <complex>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace vlab {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Largest generation any table or enumeration is allowed to reach.
inline constexpr int kMaxGeneration = 30;

struct DyadicBox {
    int generation = 1;
    std::int64_t position = 0;

    /// Validating constructor; throws InvalidArgument unless n >= 1 and 0 <= k < 2^n.
    static DyadicBox make(int generation, std::int64_t position);

    DyadicBox parent() const;   ///< requires generation >= 2
    DyadicBox left_child() const { return {generation + 1, 2 * position}; }
    DyadicBox right_child() const { return {generation + 1, 2 * position + 1}; }

    /// True if `other` is this box or lies below it in the dyadic tree.
    bool contains(const DyadicBox& other) const;

    std::string label() const;

    auto operator<=>(const DyadicBox&) const = default;
};

inline std::int64_t boxes_in_generation(int n) { return std::int64_t{1} << n; }

/// Total number of boxes in generations 1..G, i.e. 2^{G+1} - 2.
inline std::int64_t boxes_up_to(int G) { return (std::int64_t{1} << (G + 1)) - 2; }

/// Position of `box` in the canonical (generation, position) ordering.
std::size_t canonical_index(const DyadicBox& box);
DyadicBox box_at_canonical_index(std::size_t index);

/// Half-open angular interval [lower, upper).
struct AngularInterval {
    double lower = 0.0;
    double upper = 0.0;
    double width() const { return upper - lower; }
};

/// Polar rectangle {radialLower <= |z| < radialUpper, angleLower <= arg z < angleUpper}.
struct Region {
    double radialLower = 0.0;
    double radialUpper = 1.0;
    double angleLower = 0.0;
    double angleUpper = kTwoPi;

    static Region full_disc() { return {}; }
    static Region annulus(double r0, double r1) { return {r0, r1, 0.0, kTwoPi}; }

    double angular_width() const { return angleUpper - angleLower; }
    double radial_thickness() const { return radialUpper - radialLower; }

    /// Polar midpoint (radial and angular).
    std::complex<double> center() const;

    /// Half-open containment in polar coordinates, argument taken in [0, 2pi).
    bool contains(std::complex<double> z) const;

    bool operator==(const Region&) const = default;
};

/// A point of the open unit disc.
class DiscPoint {
public:
    DiscPoint() = default;
    /// Throws InvalidArgument if |z| >= 1 or z is not finite.
    explicit DiscPoint(std::complex<double> z);
    DiscPoint(double re, double im) : DiscPoint(std::complex<double>{re, im}) {}

    std::complex<double> value() const { return z_; }
    double modulus() const { return std::abs(z_); }

private:
    std::complex<double> z_{};
};

AngularInterval arc_interval(const DyadicBox& box);

/// |I| = 2 pi 2^{-n}.
double arc_length(const DyadicBox& box);

Region window_region(const DyadicBox& box);
Region inner_half_region(const DyadicBox& box);

/// Area of a polar rectangle with m(D) = 1.
double normalized_area(const Region& region);

/// |(z - w) / (1 - conj(z) w)|
double pseudohyperbolic(const DiscPoint& z, const DiscPoint& w);

/// True iff every pair of distinct entries is at pseudohyperbolic distance >= delta.
bool is_separated(std::span<const DiscPoint> points, double delta);

/// Argument of z mapped into [0, 2pi).
double principal_angle(std::complex<double> z);

} // namespace vlab
