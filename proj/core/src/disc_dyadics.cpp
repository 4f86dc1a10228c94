#include "vlab/disc_dyadics.hpp"

#include "vlab/errors.hpp"

#include <cmath>

namespace vlab {

DyadicBox DyadicBox::make(int generation, std::int64_t position)
{
    if (generation < 1 || generation > kMaxGeneration) {
        throw InvalidArgument("dyadic box generation must lie in [1, " +
                              std::to_string(kMaxGeneration) + "], got " +
                              std::to_string(generation));
    }
    if (position < 0 || position >= boxes_in_generation(generation)) {
        throw InvalidArgument("dyadic box position " + std::to_string(position) +
                              " outside [0, 2^" + std::to_string(generation) + ")");
    }
    return {generation, position};
}

DyadicBox DyadicBox::parent() const
{
    if (generation < 2) {
        throw InvalidArgument("generation-1 boxes have no parent");
    }
    return {generation - 1, position / 2};
}

bool DyadicBox::contains(const DyadicBox& other) const
{
    if (other.generation < generation) {
        return false;
    }
    return (other.position >> (other.generation - generation)) == position;
}

std::string DyadicBox::label() const
{
    return "box(n=" + std::to_string(generation) + ",k=" + std::to_string(position) + ")";
}

std::size_t canonical_index(const DyadicBox& box)
{
    return static_cast<std::size_t>(boxes_up_to(box.generation - 1) + box.position);
}

DyadicBox box_at_canonical_index(std::size_t index)
{
    int n = 1;
    auto offset = static_cast<std::int64_t>(index);
    while (offset >= boxes_in_generation(n)) {
        offset -= boxes_in_generation(n);
        ++n;
    }
    return DyadicBox::make(n, offset);
}

std::complex<double> Region::center() const
{
    const double r = 0.5 * (radialLower + radialUpper);
    const double theta = 0.5 * (angleLower + angleUpper);
    return std::polar(r, theta);
}

bool Region::contains(std::complex<double> z) const
{
    const double r = std::abs(z);
    if (r < radialLower || r >= radialUpper) {
        return false;
    }
    const double theta = principal_angle(z);
    return theta >= angleLower && theta < angleUpper;
}

DiscPoint::DiscPoint(std::complex<double> z)
    : z_(z)
{
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || std::abs(z) >= 1.0) {
        throw InvalidArgument("disc point must satisfy |z| < 1");
    }
}

AngularInterval arc_interval(const DyadicBox& box)
{
    const double scale = std::ldexp(kTwoPi, -box.generation);
    return {scale * static_cast<double>(box.position),
            scale * static_cast<double>(box.position + 1)};
}

double arc_length(const DyadicBox& box)
{
    return std::ldexp(kTwoPi, -box.generation);
}

Region window_region(const DyadicBox& box)
{
    const auto arc = arc_interval(box);
    return {1.0 - std::ldexp(1.0, -box.generation), 1.0, arc.lower, arc.upper};
}

Region inner_half_region(const DyadicBox& box)
{
    const auto arc = arc_interval(box);
    return {1.0 - std::ldexp(1.0, -box.generation),
            1.0 - std::ldexp(1.0, -box.generation - 1), arc.lower, arc.upper};
}

double normalized_area(const Region& region)
{
    const double r0 = region.radialLower;
    const double r1 = region.radialUpper;
    // (r1^2 - r0^2) factored to keep thin annuli near |z| = 1 accurate.
    return region.angular_width() / kTwoPi * (r1 - r0) * (r1 + r0);
}

double pseudohyperbolic(const DiscPoint& z, const DiscPoint& w)
{
    const auto a = z.value();
    const auto b = w.value();
    return std::abs((a - b) / (1.0 - std::conj(a) * b));
}

bool is_separated(std::span<const DiscPoint> points, double delta)
{
    if (!(delta > 0.0)) {
        throw InvalidArgument("separation constant must be positive");
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (pseudohyperbolic(points[i], points[j]) < delta) {
                return false;
            }
        }
    }
    return true;
}

double principal_angle(std::complex<double> z)
{
    double theta = std::arg(z);
    if (theta < 0.0) {
        theta += kTwoPi;
    }
    if (theta >= kTwoPi) {
        theta = 0.0;
    }
    return theta;
}

} // namespace vlab
