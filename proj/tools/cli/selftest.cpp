#include "run.hpp"

#include "vlab/asymptotics.hpp"
#include "vlab/box_measures.hpp"
#include "vlab/csv_export.hpp"
#include "vlab/disc_dyadics.hpp"
#include "vlab/operator_matrices.hpp"
#include "vlab/spectra.hpp"
#include "vlab/symbols.hpp"

#include <cmath>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace vlab::cli {

namespace {

struct Check {
    std::string name;
    std::function<bool()> body;
};

bool near(double a, double b, double tol)
{
    return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

bool all_near(const std::vector<double>& a, const std::vector<double>& b, double tol)
{
    if (a.size() != b.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!near(a[i], b[i], tol)) {
            return false;
        }
    }
    return true;
}

std::vector<Check> checks(unsigned threads)
{
    const auto z = AnalyticSymbol::monomial();
    const auto constant = AnalyticSymbol::monomial(0, 3.0);
    const auto power = AnalyticSymbol::power(0.5);
    const auto logsym = AnalyticSymbol::logarithm();
    const auto hardy = SpaceSpec::hardy();
    const auto bergman = SpaceSpec::bergman(0.0);
    const TableOptions opts{1e-10, 20, threads};

    std::vector<Check> c;
    c.push_back({"arc (3,5) = [5pi/4, 3pi/2)", [] {
                     const auto a = arc_interval(DyadicBox::make(3, 5));
                     return near(a.lower, 5 * kPi / 4, 1e-15) && near(a.upper, 3 * kPi / 2, 1e-15);
                 }});
    c.push_back({"arc (1,1) = [pi, 2pi)", [] {
                     const auto a = arc_interval(DyadicBox::make(1, 1));
                     return a.lower == kPi && a.upper == kTwoPi;
                 }});
    c.push_back({"window (1,0) radial [1/2, 1)", [] {
                     const auto w = window_region(DyadicBox::make(1, 0));
                     return w.radialLower == 0.5 && w.radialUpper == 1.0;
                 }});
    c.push_back({"inner half (2,0) radial [3/4, 7/8)", [] {
                     const auto r = inner_half_region(DyadicBox::make(2, 0));
                     return r.radialLower == 0.75 && r.radialUpper == 0.875;
                 }});
    c.push_back({"normalized area R(1,k) = 5/32, W(2,k) = 7/64, disc = 1", [] {
                     return near(normalized_area(inner_half_region(DyadicBox::make(1, 1))), 5.0 / 32, 1e-15) &&
                            near(normalized_area(window_region(DyadicBox::make(2, 3))), 7.0 / 64, 1e-15) &&
                            near(normalized_area(Region::full_disc()), 1.0, 1e-15);
                 }});
    c.push_back({"pseudohyperbolic(1/2, -1/2) = 4/5", [] {
                     return near(pseudohyperbolic(DiscPoint(0.5, 0), DiscPoint(-0.5, 0)), 0.8, 1e-15);
                 }});
    c.push_back({"separation of 1 - 2^-n at 0.3; coincident points fail", [] {
                     std::vector<DiscPoint> pts;
                     for (int n = 1; n <= 8; ++n) {
                         pts.emplace_back(1.0 - std::ldexp(1.0, -n), 0.0);
                     }
                     const std::vector<DiscPoint> close{DiscPoint(0.5, 0), DiscPoint(0.5 + 1e-9, 0)};
                     return is_separated(pts, 0.3) && !is_separated(close, 0.1);
                 }});
    c.push_back({"taylor coefficients of z, (1-z)^1/2, log", [=] {
                     return all_near(z.taylor_coefficients(3), {0, 1, 0, 0}, 0) &&
                            all_near(power.taylor_coefficients(2), {1, -0.5, -0.125}, 1e-15) &&
                            all_near(logsym.taylor_coefficients(3), {0, 1, 0.5, 1.0 / 3}, 1e-15);
                 }});
    c.push_back({"g'(z): identity 1, power -1/2 at 0, log 2 at 1/2", [=] {
                     return z.derivative_at({0.3, 0.4}) == std::complex<double>(1.0) &&
                            near(power.derivative_at(0.0).real(), -0.5, 1e-15) &&
                            near(logsym.derivative_at(0.5).real(), 2.0, 1e-15);
                 }});
    c.push_back({"little Bloch profile of z at r = 0.9 is 0.19", [=] {
                     const double r[] = {0.9};
                     return near(little_bloch_profile(z, r)[0], 0.19, 1e-14);
                 }});
    c.push_back({"m_z(R(1,0)) = 1385/24576", [=] {
                     return near(integrate_density(z, inner_half_region(DyadicBox::make(1, 0)), 2.0, 1e-12),
                                 1385.0 / 24576, 1e-12);
                 }});
    c.push_back({"nu_z(W(1,0)) = 9/64 by strips and tail", [=] {
                     return near(window_mass(z, DyadicBox::make(1, 0), 1.0, 1e-12, 20), 9.0 / 64, 1e-10);
                 }});
    c.push_back({"constant symbol has zero box masses", [=] {
                     return integrate_density(constant, Region::full_disc(), 1.0, 1e-10) == 0.0 &&
                            window_mass(constant, DyadicBox::make(2, 1), 1.0, 1e-10, 20) == 0.0;
                 }});
    c.push_back({"power strips decay with ratio near 1/4", [=] {
                     const auto d = window_mass_detail(power, DyadicBox::make(1, 0), 1.0, 1e-10, 20);
                     return std::abs(d.tailRatio - 0.25) < 0.05;
                 }});
    c.push_back({"Hardy table of z is rotation invariant per generation", [=] {
                     const auto t = build_table(z, hardy, 2, opts);
                     return near(t.entries[0].ratio, 9.0 / (64 * kPi), 1e-10) &&
                            near(t.entries[1].ratio, t.entries[0].ratio, 1e-12) &&
                            near(t.entries[2].ratio, t.entries[5].ratio, 1e-12);
                 }});
    c.push_back({"Bergman table of z at G=1: ratio (1385/24576)/(5/32)", [=] {
                     const auto t = build_table(z, SpaceSpec::bergman(0.7), 1, opts);
                     return near(t.entries[0].ratio, (1385.0 / 24576) / (5.0 / 32), 1e-10);
                 }});
    c.push_back({"constant symbol rearranges to zeros, nothing certified", [=] {
                     const auto s = rearrange(build_table(constant, hardy, 3, opts));
                     return s.certifiedPrefixLength == 0 &&
                            std::all_of(s.values.begin(), s.values.end(), [](double v) { return v == 0.0; }) &&
                            discretize_inner_halves(build_table(constant, hardy, 3, opts), 1).empty();
                 }});
    c.push_back({"monomial norms in A^2_0: |z|^2 = 1/2, |z^3|^2 = 1/4", [=] {
                     return near(norm_monomial(bergman, 1), std::sqrt(0.5), 1e-15) &&
                            near(norm_monomial(bergman, 3), 0.5, 1e-15) && norm_monomial(hardy, 7) == 1.0;
                 }});
    c.push_back({"Volterra matrix of z: subdiagonal 1/(k+1) and 1/sqrt((k+1)(k+2))", [=] {
                     const auto h = volterra_matrix(z, hardy, 8);
                     const auto b = volterra_matrix(z, bergman, 8);
                     for (int k = 0; k + 1 < 8; ++k) {
                         if (!near(h.entries(k + 1, k).real(), 1.0 / (k + 1), 1e-15) ||
                             !near(b.entries(k + 1, k).real(), 1.0 / std::sqrt((k + 1.0) * (k + 2.0)), 1e-14)) {
                             return false;
                         }
                     }
                     return volterra_matrix(constant, hardy, 8).entries.isZero(0.0);
                 }});
    c.push_back({"single point masses: s_1 = c, c/(1-|z0|^2)", [] {
                     const DiscreteMeasure at0({DiscPoint(0, 0)}, {0.3});
                     const DiscreteMeasure atz({DiscPoint(0.6, 0)}, {0.3});
                     return near(toeplitz_singular_values(toeplitz_gram(at0, SpaceSpec::hardy()))[0], 0.3, 1e-15) &&
                            near(toeplitz_singular_values(toeplitz_gram(atz, SpaceSpec::hardy()))[0], 0.3 / 0.64, 1e-14) &&
                            near(toeplitz_singular_values(toeplitz_gram(at0, SpaceSpec::bergman(0)))[0], 0.3, 1e-15) &&
                            near(embedding_singular_values(toeplitz_gram(at0, SpaceSpec::hardy()))[0], std::sqrt(0.3), 1e-15);
                 }});
    c.push_back({"Littlewood-Paley identity for z^k, k = 1..10", [] {
                     for (int k = 1; k <= 10; ++k) {
                         std::vector<std::complex<double>> f(k + 1);
                         f[k] = 1.0;
                         const auto lp = lp_check(f, 1e-12);
                         if (std::abs(lp.lhs - 1) > 1e-8 || std::abs(lp.rhs - 1) > 1e-8) {
                             return false;
                         }
                     }
                     return true;
                 }});
    c.push_back({"Bessel bound: origin gives 1, empty gives 0", [] {
                     const std::vector<DiscPoint> origin{DiscPoint(0, 0)};
                     return near(bessel_check(origin, 16), 1.0, 1e-14) && bessel_check({}, 16) == 0.0;
                 }});
    c.push_back({"shift spectra for N = 4", [=] {
                     return all_near(singular_values(volterra_matrix(z, hardy, 4)), {1, 0.5, 1.0 / 3, 0}, 1e-14) &&
                            all_near(singular_values(volterra_matrix(z, bergman, 4)),
                                     {1 / std::sqrt(2.0), 1 / std::sqrt(6.0), 1 / std::sqrt(12.0), 0}, 1e-14);
                 }});
    c.push_back({"shift spectrum converges on the whole reporting window", [=] {
                     const auto s = converged_spectrum(z, hardy, 64, 1e-12);
                     const auto zero = converged_spectrum(constant, hardy, 64, 1e-12);
                     return s.convergedPrefixLength == 16 && zero.convergedPrefixLength == 16;
                 }});
    c.push_back({"power-law fits: 1/n slope -1, constant slope 0", [] {
                     std::vector<double> inv, one(64, 1.0);
                     for (int n = 1; n <= 64; ++n) {
                         inv.push_back(1.0 / n);
                     }
                     return near(fit_exponent(inv, {8, 64}), -1.0, 1e-12) &&
                            std::abs(fit_exponent(one, {8, 64})) < 1e-12;
                 }});
    c.push_back({"regularity classes of n^-1/2 and 1/n", [] {
                     std::vector<double> half, inv;
                     for (int n = 1; n <= 200; ++n) {
                         half.push_back(1.0 / std::sqrt(n));
                         inv.push_back(1.0 / n);
                     }
                     return regularity_check(half, {0.7, 0.3}).inClass &&
                            !regularity_check(half, {0.4, std::nullopt}).inClass &&
                            regularity_check(inv, {1.0, std::nullopt}).inClass;
                 }});
    c.push_back({"circle means of |g'| for z are 1", [=] {
                     const auto p = h1_norm_estimate(z);
                     return near(p.sup, 1.0, 1e-14);
                 }});
    return c;
}

} // namespace

int run_selftest(std::ostream& out, unsigned threads)
{
    int failures = 0;
    for (const auto& check : checks(threads)) {
        bool ok = false;
        std::string note;
        try {
            ok = check.body();
        } catch (const std::exception& e) {
            note = std::string(" (") + e.what() + ")";
        }
        failures += ok ? 0 : 1;
        out << (ok ? "PASS " : "FAIL ") << check.name << note << '\n';
    }
    out << (failures == 0 ? "selftest: all checks passed\n"
                          : "selftest: " + std::to_string(failures) + " check(s) failed\n");
    return failures;
}

} // namespace vlab::cli
