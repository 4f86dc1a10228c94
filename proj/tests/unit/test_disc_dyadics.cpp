#include "vlab/disc_dyadics.hpp"
#include "vlab/errors.hpp"

#include <doctest.h>

#include <random>

using namespace vlab;

TEST_CASE("arc intervals")
{
    auto a = arc_interval(DyadicBox::make(1, 0));
    CHECK(a.lower == 0.0);
    CHECK(a.upper == doctest::Approx(kPi).scale(0).epsilon(1e-15));
    a = arc_interval(DyadicBox::make(1, 1));
    CHECK(a.lower == doctest::Approx(kPi).scale(0).epsilon(1e-15));
    CHECK(a.upper == doctest::Approx(kTwoPi).scale(0).epsilon(1e-15));
    a = arc_interval(DyadicBox::make(3, 5));
    CHECK(a.lower == doctest::Approx(5 * kPi / 4).scale(0).epsilon(1e-15));
    CHECK(a.upper == doctest::Approx(3 * kPi / 2).scale(0).epsilon(1e-15));
    CHECK(arc_length(DyadicBox::make(4, 2)) == doctest::Approx(kTwoPi / 16).scale(0).epsilon(1e-15));
}

TEST_CASE("box index validation")
{
    CHECK_THROWS_AS(DyadicBox::make(0, 0), InvalidArgument);
    CHECK_THROWS_AS(DyadicBox::make(2, 4), InvalidArgument);
    CHECK_THROWS_AS(DyadicBox::make(3, -1), InvalidArgument);
    CHECK_THROWS_AS(DyadicBox::make(kMaxGeneration + 1, 0), InvalidArgument);
    CHECK(DyadicBox::make(2, 3).label() == "box(n=2,k=3)");
}

TEST_CASE("windows and inner halves")
{
    auto w = window_region(DyadicBox::make(1, 0));
    CHECK(w.radialLower == 0.5);
    CHECK(w.radialUpper == 1.0);
    auto r = inner_half_region(DyadicBox::make(1, 0));
    CHECK(r.radialLower == 0.5);
    CHECK(r.radialUpper == 0.75);
    r = inner_half_region(DyadicBox::make(2, 0));
    CHECK(r.radialLower == 0.75);
    CHECK(r.radialUpper == 0.875);
}

TEST_CASE("normalized areas")
{
    CHECK(normalized_area(Region::full_disc()) == doctest::Approx(1.0).scale(0).epsilon(1e-15));
    for (int k = 0; k < 2; ++k) {
        CHECK(normalized_area(inner_half_region(DyadicBox::make(1, k))) ==
              doctest::Approx(5.0 / 32).scale(0).epsilon(1e-15));
    }
    for (int k = 0; k < 4; ++k) {
        CHECK(normalized_area(window_region(DyadicBox::make(2, k))) ==
              doctest::Approx(7.0 / 64).scale(0).epsilon(1e-15));
    }
}

TEST_CASE("pseudohyperbolic distance")
{
    const DiscPoint w(0.3, -0.4);
    CHECK(pseudohyperbolic(DiscPoint(0, 0), w) == doctest::Approx(0.5).scale(0).epsilon(1e-15));
    CHECK(pseudohyperbolic(w, w) == 0.0);
    CHECK(pseudohyperbolic(DiscPoint(0.5, 0), DiscPoint(-0.5, 0)) ==
          doctest::Approx(0.8).scale(0).epsilon(1e-15));
    CHECK_THROWS_AS(DiscPoint(1.0, 0.0), InvalidArgument);
    CHECK_THROWS_AS(DiscPoint(0.8, 0.7), InvalidArgument);
}

TEST_CASE("separation")
{
    const std::vector<DiscPoint> single{DiscPoint(0, 0)};
    CHECK(is_separated(single, 0.5));
    std::vector<DiscPoint> radial;
    for (int n = 1; n <= 8; ++n) {
        radial.emplace_back(1.0 - std::ldexp(1.0, -n), 0.0);
    }
    CHECK(is_separated(radial, 0.3));
    // rho(1 - 2h, 1 - h) = 1 / (3 - 2h)
    CHECK(pseudohyperbolic(radial[3], radial[4]) == doctest::Approx(16.0 / 47).scale(0).epsilon(1e-12));
    const std::vector<DiscPoint> close{DiscPoint(0.5, 0), DiscPoint(0.5 + 1e-9, 0)};
    CHECK_FALSE(is_separated(close, 0.1));
    CHECK_THROWS_AS(is_separated(single, 0.0), InvalidArgument);
}

TEST_CASE("children partition the parent arc and window")
{
    for (int n = 1; n <= 10; ++n) {
        for (std::int64_t k = 0; k < boxes_in_generation(n); k += std::max<std::int64_t>(1, boxes_in_generation(n) / 7)) {
            const auto box = DyadicBox::make(n, k);
            const auto left = arc_interval(box.left_child());
            const auto right = arc_interval(box.right_child());
            const auto parent = arc_interval(box);
            CHECK(left.lower == parent.lower);
            CHECK(left.upper == right.lower);
            CHECK(right.upper == doctest::Approx(parent.upper).scale(0).epsilon(1e-15));
            CHECK(box.left_child().parent() == box);
            CHECK(box.contains(box.right_child().left_child()));
            const double sum = normalized_area(window_region(box.left_child())) +
                               normalized_area(window_region(box.right_child())) +
                               normalized_area(inner_half_region(box));
            CHECK(sum == doctest::Approx(normalized_area(window_region(box))).scale(0).epsilon(1e-12));
        }
    }
}

TEST_CASE("inner halves of one generation are disjoint and tile an annulus")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int n = 1; n <= 6; ++n) {
        const double r0 = 1.0 - std::ldexp(1.0, -n);
        const double r1 = 1.0 - std::ldexp(1.0, -n - 1);
        for (int trial = 0; trial < 200; ++trial) {
            const double r = r0 + (r1 - r0) * u(rng);
            const auto zpt = std::polar(r, kTwoPi * u(rng));
            int hits = 0;
            for (std::int64_t k = 0; k < boxes_in_generation(n); ++k) {
                hits += inner_half_region(DyadicBox::make(n, k)).contains(zpt) ? 1 : 0;
            }
            CHECK(hits == 1);
        }
    }
}

TEST_CASE("canonical indexing round trips")
{
    CHECK(boxes_up_to(3) == 14);
    for (std::size_t i = 0; i < static_cast<std::size_t>(boxes_up_to(8)); ++i) {
        CHECK(canonical_index(box_at_canonical_index(i)) == i);
    }
    CHECK(canonical_index(DyadicBox::make(2, 0)) == 2);
}

TEST_CASE("inner halves of a generation sum to their annulus")
{
    double total = 0.0;
    for (int n = 1; n <= 12; ++n) {
        double gen = 0.0;
        for (std::int64_t k = 0; k < boxes_in_generation(n); ++k) {
            gen += normalized_area(inner_half_region(DyadicBox::make(n, k)));
        }
        const double r0 = 1.0 - std::ldexp(1.0, -n);
        const double r1 = 1.0 - std::ldexp(1.0, -n - 1);
        // areas are normalized to the unit disc, so 1e-14 is an absolute bound
        CHECK(std::abs(gen - (r1 - r0) * (r1 + r0)) <= 1e-14);
        total += gen;
        const double outer = 1.0 - std::ldexp(1.0, -n - 1);
        CHECK(std::abs(total - (outer * outer - 0.25)) <= 1e-14);
    }
}

TEST_CASE("child windows nest inside the parent window")
{
    for (int n = 1; n <= 12; ++n) {
        for (std::int64_t k : {std::int64_t{0}, boxes_in_generation(n) / 3, boxes_in_generation(n) - 1}) {
            const auto box = DyadicBox::make(n, k);
            const auto p = window_region(box);
            for (const auto& child : {box.left_child(), box.right_child()}) {
                const auto c = window_region(child);
                CHECK(c.radialLower >= p.radialLower);
                CHECK(c.radialUpper <= p.radialUpper);
                CHECK(c.angleLower >= p.angleLower);
                CHECK(c.angleUpper <= p.angleUpper);
            }
        }
    }
}

TEST_CASE("inner halves of distinct boxes do not overlap")
{
    std::vector<Region> regions;
    for (std::size_t i = 0; i < static_cast<std::size_t>(boxes_up_to(6)); ++i) {
        regions.push_back(inner_half_region(box_at_canonical_index(i)));
    }
    for (std::size_t i = 0; i < regions.size(); ++i) {
        for (std::size_t j = i + 1; j < regions.size(); ++j) {
            const auto& a = regions[i];
            const auto& b = regions[j];
            const bool radialGap = a.radialUpper <= b.radialLower || b.radialUpper <= a.radialLower;
            const bool angularGap = a.angleUpper <= b.angleLower || b.angleUpper <= a.angleLower;
            CHECK((radialGap || angularGap));
        }
    }
}
