#include "vlab/box_measures.hpp"
#include "vlab/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace vlab;

namespace {

const auto z = AnalyticSymbol::monomial();
const auto power = AnalyticSymbol::power(0.5);
const auto logsym = AnalyticSymbol::logarithm();
const auto constant = AnalyticSymbol::monomial(0, 2.5);

// Hardy window ratio of g(z) = z at generation n, h = 2^{-n}
double shift_window_ratio(int n)
{
    const double h = std::ldexp(1.0, -n);
    return std::pow(2 * h - h * h, 2) / (4 * kPi);
}

BoxMeasureTable synthetic_table(const std::vector<double>& ratios, int G)
{
    BoxMeasureTable t;
    t.maxGeneration = G;
    for (std::size_t i = 0; i < ratios.size(); ++i) {
        BoxEntry e;
        e.box = box_at_canonical_index(i);
        e.ratio = ratios[i];
        t.entries.push_back(e);
    }
    return t;
}

} // namespace

TEST_CASE("inner-half masses against closed forms and high-precision values")
{
    const auto r10 = inner_half_region(DyadicBox::make(1, 0));
    CHECK(integrate_density(z, r10, 2.0, 1e-12) == doctest::Approx(1385.0 / 24576).scale(0).epsilon(1e-13));
    CHECK(integrate_density(z, r10, 1.0, 1e-12) ==
          doctest::Approx((0.5625 - 0.19140625) / 4).scale(0).epsilon(1e-13));
    // reference values from 30-digit adaptive quadrature
    CHECK(integrate_density(power, r10, 2.0, 1e-12) ==
          doctest::Approx(0.0158603307206636631786).scale(0).epsilon(1e-11));
    CHECK(integrate_density(power, r10, 1.0, 1e-12) ==
          doctest::Approx(0.0262457380195565543581).scale(0).epsilon(1e-11));
    CHECK(integrate_density(power, inner_half_region(DyadicBox::make(2, 1)), 1.0, 1e-12) ==
          doctest::Approx(0.00264366295226439862362).scale(0).epsilon(1e-11));
    CHECK(integrate_density(logsym, inner_half_region(DyadicBox::make(2, 0)), 1.0, 1e-12) ==
          doctest::Approx(0.0949352033885528888260).scale(0).epsilon(1e-11));
    CHECK(integrate_density(constant, Region::full_disc(), 1.0, 1e-10) == 0.0);
}

TEST_CASE("window masses")
{
    CHECK(window_mass(z, DyadicBox::make(1, 0), 1.0, 1e-12, 20) ==
          doctest::Approx(9.0 / 64).scale(0).epsilon(1e-10));
    CHECK(window_mass(power, DyadicBox::make(1, 0), 1.0, 1e-12, 20) ==
          doctest::Approx(0.0424923142593715907254).scale(0).epsilon(1e-8));
    CHECK(window_mass(logsym, DyadicBox::make(2, 0), 1.0, 1e-12, 20) ==
          doctest::Approx(0.209746333611656313914).scale(0).epsilon(1e-8));
    CHECK(window_mass(constant, DyadicBox::make(3, 2), 1.0, 1e-10, 20) == 0.0);

    const auto d = window_mass_detail(power, DyadicBox::make(1, 0), 1.0, 1e-10, 20);
    CHECK(d.strips.size() == 20);
    CHECK(d.tailRatio == doctest::Approx(0.25).scale(0).epsilon(0.05));
    CHECK(d.tailRatio < kMaxTailRatio);
    CHECK_THROWS_AS(window_mass(z, DyadicBox::make(1, 0), 1.0, 1e-10, 3), InvalidArgument);
}

TEST_CASE("shift symbol tables")
{
    const auto t = build_table(z, SpaceSpec::hardy(), 6);
    REQUIRE(t.entries.size() == 126);
    for (const auto& e : t.entries) {
        CHECK(e.ratio == doctest::Approx(shift_window_ratio(e.box.generation)).scale(0).epsilon(1e-9));
    }
    CHECK(t.at(DyadicBox::make(1, 1)).ratio == doctest::Approx(9.0 / (64 * kPi)).scale(0).epsilon(1e-10));

    const double expected = (1385.0 / 24576) / (5.0 / 32);
    for (double alpha : {0.0, 0.5, 3.0}) {
        const auto b = build_table(z, SpaceSpec::bergman(alpha), 1);
        CHECK(b.entries[0].ratio == doctest::Approx(expected).scale(0).epsilon(1e-10));
        CHECK(b.entries[1].ratio == doctest::Approx(expected).scale(0).epsilon(1e-10));
    }
}

TEST_CASE("power symbol ratios at the singular box decay like 2^-n")
{
    const auto t = build_table(power, SpaceSpec::hardy(), 6);
    std::vector<double> scaled;
    for (int n = 2; n <= 6; ++n) {
        scaled.push_back(t.at(DyadicBox::make(n, 0)).ratio * std::ldexp(1.0, n));
    }
    const auto [lo, hi] = std::minmax_element(scaled.begin(), scaled.end());
    CHECK(*hi / *lo <= 2.0);
}

TEST_CASE("window mass decomposes into descendant inner halves plus a tail")
{
    const int G = 8;
    for (const auto& s : {z, power, logsym}) {
        const auto t = build_table(s, SpaceSpec::hardy(), G);
        for (int n = 1; n <= G - 4; ++n) {
            for (std::int64_t k : {std::int64_t{0}, boxes_in_generation(n) / 2, boxes_in_generation(n) - 1}) {
                const auto box = DyadicBox::make(n, k);
                std::vector<double> perGen;
                for (int m = n; m <= G; ++m) {
                    double acc = 0.0;
                    const std::int64_t span = std::int64_t{1} << (m - n);
                    for (std::int64_t j = 0; j < span; ++j) {
                        acc += t.at(DyadicBox::make(m, k * span + j)).innerHalfMass;
                    }
                    perGen.push_back(acc);
                }
                const double rho = perGen.back() / perGen[perGen.size() - 2];
                double total = perGen.back() * rho / (1 - rho);
                for (double v : perGen) {
                    total += v;
                }
                INFO(s.id(), " ", box.label());
                CHECK(total == doctest::Approx(t.at(box).windowMass).scale(0).epsilon(0.05));
            }
        }
    }
}

TEST_CASE("rearrangement")
{
    const auto t = synthetic_table({0.5, 0.2, 0.9, 0.0, 0.0, 0.0}, 2);
    const auto s = rearrange(t);
    CHECK(s.values == std::vector<double>{0.9, 0.5, 0.2, 0.0, 0.0, 0.0});
    CHECK(s.sourceBoxes[0] == DyadicBox::make(2, 0));
    CHECK(s.certifiedPrefixLength == 0);

    const auto flat = rearrange(build_table(constant, SpaceSpec::hardy(), 4));
    CHECK(flat.certifiedPrefixLength == 0);
    CHECK(std::all_of(flat.values.begin(), flat.values.end(), [](double v) { return v == 0.0; }));

    CHECK_THROWS_AS(rearrange(t, 0.5), InvalidArgument);
}

TEST_CASE("shift rearrangement repeats each generation value 2^n times")
{
    const auto t = build_table(z, SpaceSpec::hardy(), 8);
    const auto s = rearrange(t);
    std::size_t pos = 0;
    for (int n = 1; n <= 8; ++n) {
        for (std::int64_t k = 0; k < boxes_in_generation(n); ++k, ++pos) {
            CHECK(s.sourceBoxes[pos].generation == n);
            CHECK(s.values[pos] == doctest::Approx(shift_window_ratio(n)).scale(0).epsilon(1e-9));
        }
    }
    double lo = INFINITY;
    double hi = 0.0;
    for (std::size_t n = 4; n <= 200; ++n) {
        const double v = s.values[n - 1] * static_cast<double>(n * n);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    CHECK(hi / lo <= 20.0);
    CHECK(s.certifiedPrefixLength == boxes_up_to(7));
}

TEST_CASE("rearrangement does not depend on entry order")
{
    const auto t = build_table(power, SpaceSpec::hardy(), 6);
    auto shuffled = t;
    std::reverse(shuffled.entries.begin(), shuffled.entries.end());
    std::rotate(shuffled.entries.begin(), shuffled.entries.begin() + 17, shuffled.entries.end());
    const auto a = rearrange(t);
    const auto b = rearrange(shuffled);
    CHECK(a.values == b.values);
    CHECK(a.sourceBoxes == b.sourceBoxes);
    CHECK(a.certifiedPrefixLength == b.certifiedPrefixLength);
}

TEST_CASE("certified prefix never shrinks as G grows")
{
    for (const auto& s : {z, power}) {
        std::size_t previous = 0;
        for (int G = 2; G <= 8; ++G) {
            const auto seq = rearrange(build_table(s, SpaceSpec::hardy(), G));
            CHECK(seq.certifiedPrefixLength >= previous);
            previous = seq.certifiedPrefixLength;
        }
    }
}

TEST_CASE("table is identical for any thread count")
{
    const auto a = build_table(power, SpaceSpec::hardy(), 5, {1e-10, 20, 1});
    const auto b = build_table(power, SpaceSpec::hardy(), 5, {1e-10, 20, 4});
    REQUIRE(a.entries.size() == b.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        CHECK(a.entries[i].windowMass == b.entries[i].windowMass);
        CHECK(a.entries[i].innerHalfMass == b.entries[i].innerHalfMass);
    }
}

TEST_CASE("compactness diagnostics")
{
    const auto sz = compactness_diagnostic(build_table(z, SpaceSpec::hardy(), 8));
    for (std::size_t i = 0; i < sz.size(); ++i) {
        CHECK(sz[i] == doctest::Approx(shift_window_ratio(static_cast<int>(i) + 1)).scale(0).epsilon(1e-9));
    }
    CHECK(sz[6] / sz[7] == doctest::Approx(4.0).scale(0).epsilon(0.01));
    const auto sp = compactness_diagnostic(build_table(power, SpaceSpec::hardy(), 8));
    for (std::size_t i = 1; i < sp.size(); ++i) {
        CHECK(sp[i - 1] / sp[i] >= 2.0 * 0.7);
        CHECK(sp[i - 1] / sp[i] <= 2.0 * 1.3);
    }
    const auto sl = compactness_diagnostic(build_table(logsym, SpaceSpec::hardy(), 8));
    for (double v : sl) {
        CHECK(v >= 0.25 * sl[0]);
        CHECK(v <= 4.0 * sl[0]);
    }
}

TEST_CASE("Schatten partial sums")
{
    CHECK(schatten_partial_sum(build_table(constant, SpaceSpec::hardy(), 3), 1.0).total == 0.0);
    const auto t = build_table(z, SpaceSpec::hardy(), 8);
    const auto p1 = schatten_partial_sum(t, 1.0);
    const auto half = schatten_partial_sum(t, 0.5);
    double total = 0.0;
    for (int n = 1; n <= 8; ++n) {
        // 2^n boxes of equal ratio: C 2^{-n} for p = 1, nearly constant for p = 1/2
        const double count = std::ldexp(1.0, n);
        CHECK(p1.increments[n - 1] == doctest::Approx(count * shift_window_ratio(n)).scale(0).epsilon(1e-9));
        CHECK(half.increments[n - 1] ==
              doctest::Approx(count * std::sqrt(shift_window_ratio(n))).scale(0).epsilon(1e-9));
        total += p1.increments[n - 1];
    }
    CHECK(p1.total == doctest::Approx(total).scale(0).epsilon(1e-14));
    CHECK(p1.increments[7] / p1.increments[6] == doctest::Approx(0.5).scale(0).epsilon(0.01));
    CHECK(half.increments[7] / half.increments[6] == doctest::Approx(1.0).scale(0).epsilon(0.01));
}

TEST_CASE("discretized measures")
{
    const auto t = build_table(z, SpaceSpec::hardy(), 5);
    const auto mu = discretize_inner_halves(t, 1);
    REQUIRE(mu.size() == t.entries.size());
    double expected = 0.0;
    double got = 0.0;
    for (const auto& e : t.entries) {
        expected += e.innerHalfMass;
    }
    for (double c : mu.masses()) {
        got += c;
    }
    CHECK(got == doctest::Approx(expected).scale(0).epsilon(1e-14));
    CHECK(discretize_inner_halves(build_table(constant, SpaceSpec::hardy(), 3), 1).empty());

    const auto seq = rearrange(build_table(power, SpaceSpec::hardy(), 6));
    CHECK_THROWS_AS(discretize_inner_halves(build_table(power, SpaceSpec::hardy(), 6), seq,
                                            seq.certifiedPrefixLength + 1),
                    UncertifiedIndex);
}

TEST_CASE("discretized window masses stay below the rearranged sequence")
{
    const int G = 7;
    for (const auto& s : {z, power}) {
        const auto t = build_table(s, SpaceSpec::hardy(), G);
        const auto seq = rearrange(t);
        REQUIRE(seq.certifiedPrefixLength > 0);
        for (std::size_t n = 1; n <= seq.certifiedPrefixLength; n += 1 + n / 4) {
            const auto mu = discretize_inner_halves(t, seq, n);
            INFO(s.id(), " n=", n);
            CHECK(discrete_window_sup(mu, G) <= seq.values[n - 1] * (1 + 1e-6));
        }
    }
}
