#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "trimer/bessel.hpp"
#include "trimer/effective.hpp"
#include "trimer/errors.hpp"
#include "trimer/ode.hpp"

using namespace trimer;

namespace {

// Independent long-double series evaluation of J_n, adequate for x <= 10.
long double series_j(int n, long double x) {
    long double term = 1.0L;
    const long double half = 0.5L * x;
    for (int k = 1; k <= n; ++k) term *= half / k;
    long double sum = term;
    const long double mult = -half * half;
    for (int k = 1; k <= 80; ++k) {
        term *= mult / (static_cast<long double>(k) * (n + k));
        sum += term;
        if (fabsl(term) < 1e-26L * fabsl(sum) + 1e-32L) break;
    }
    return sum;
}

// Brute-force interaction-ratio sums with the alternating-sign route for the
// negative orders, written independently of the library path.
detail::RhoPair rho_oracle(double x, double r) {
    const int ncut = static_cast<int>(std::ceil(x)) + 40;
    long double rho1 = 0.0L, rho2 = 0.0L;
    for (int n = -ncut; n <= ncut; ++n) {
        const long double jn = series_j(std::abs(n), x);
        const long double den = static_cast<long double>(r) + n;
        const long double sq = jn * jn;
        rho1 += sq / den;
        rho2 += ((n % 2 == 0) ? sq : -sq) / den;  // J_n J_{-n} = (-1)^n J_n^2
    }
    return {static_cast<double>(rho1), static_cast<double>(rho2)};
}

const ModelParams kFig3{1.0, 120.0, 160.0, 80.0};  // eps/omega = 2, U0/omega = 1.5

}  // namespace

TEST_CASE("undriven limit is exact") {
    const auto pair = detail::rho_pair(0.0, 1.5);
    CHECK(pair.rho1 == 2.0 / 3.0);
    CHECK(pair.rho2 == 2.0 / 3.0);

    const ModelParams p{1.0, 120.0, 0.0, 80.0};
    const auto c = rho_coefficients(p);
    CHECK(c.rho1 == 2.0 / 3.0);
    CHECK(c.rho2 == 2.0 / 3.0);
    CHECK(c.omega2 == std::numbers::sqrt2 * 1.0);  // J0(0) = 1
}

TEST_CASE("sums match the brute-force oracle") {
    const double points[][2] = {{2.0, 1.5}, {2.405, 1.5}, {1.0, 1.6}, {5.52, 2.58}, {0.5, 0.625}};
    for (const auto& pt : points) {
        const auto got = detail::rho_pair(pt[0], pt[1]);
        const auto want = rho_oracle(pt[0], pt[1]);
        CHECK(std::abs(got.rho1 - want.rho1) < 1e-12);
        CHECK(std::abs(got.rho2 - want.rho2) < 1e-12);
    }
}

TEST_CASE("reflection route equals the product route") {
    // library rho2 sums J_n J_{-n}; recompute with (-1)^n J_n^2 out of the
    // same Bessel values and compare
    const double points[][2] = {{2.0, 1.5}, {2.405, 0.625}, {4.4, 2.58}};
    for (const auto& pt : points) {
        const double x = pt[0], r = pt[1];
        const int ncut = detail::default_truncation(x);
        double alt = 0.0;
        for (int n = -ncut; n <= ncut; ++n) {
            const double jn = bessel_j(n, x);
            alt += ((n % 2 == 0) ? jn * jn : -jn * jn) / (r + n);
        }
        CHECK(std::abs(detail::rho_pair(x, r).rho2 - alt) < 1e-12);
    }
}

TEST_CASE("truncation is converged") {
    const double points[][2] = {{2.0, 1.5}, {5.52, 2.58}, {7.9, 0.37}};
    for (const auto& pt : points) {
        const int ncut = detail::default_truncation(pt[0]);
        const auto a = detail::rho_pair(pt[0], pt[1], ncut);
        const auto b = detail::rho_pair(pt[0], pt[1], ncut + 10);
        CHECK(std::abs(a.rho1 - b.rho1) < 1e-12);
        CHECK(std::abs(a.rho2 - b.rho2) < 1e-12);
    }
}

TEST_CASE("resonance guard") {
    CHECK_THROWS_AS(detail::rho_pair(2.0, 2.0000005), ResonanceError);
    CHECK_THROWS_AS(detail::rho_pair(2.0, 3.0), ResonanceError);
    CHECK_NOTHROW(detail::rho_pair(2.0, 2.0000011));
    ModelParams p{1.0, 160.0, 160.0, 80.0};  // U0/omega = 2
    CHECK_THROWS_AS(rho_coefficients(p), ResonanceError);
}

TEST_CASE("far-resonant summands stay below omega/J") {
    // |u| = 40 > J here, so every term 1/|r+n| <= omega/|u| << omega/J
    const double x = 2.0, r = 1.5, omega_over_j = 80.0;
    const int ncut = detail::default_truncation(x);
    double max_term = 0.0;
    for (int n = -ncut; n <= ncut; ++n) {
        const double jn = bessel_j(n, x);
        max_term = std::max(max_term, std::abs(jn * jn / (r + n)));
    }
    CHECK(max_term < omega_over_j);
    const auto pair = detail::rho_pair(x, r);
    CHECK(std::abs(pair.rho1) < omega_over_j);
    CHECK(std::abs(pair.rho2) < omega_over_j);
}

TEST_CASE("tunneling frequencies reproduce the reference periods") {
    const auto c = rho_coefficients(kFig3);
    CHECK(std::numbers::pi / c.omega1 == doctest::Approx(89.32).epsilon(1e-3));
    CHECK(std::numbers::pi / std::abs(c.omega2) == doctest::Approx(9.922).epsilon(1e-3));
    // derived-field invariants
    CHECK(c.omega1 ==
          doctest::Approx((1.0 / 80.0) * std::hypot(c.rho1, std::sqrt(8.0) * c.rho2)).epsilon(1e-12));
    CHECK(c.omega2 == doctest::Approx(std::numbers::sqrt2 * bessel_j(0, 2.0)).epsilon(1e-14));
}

TEST_CASE("rho2 zeros") {
    SUBCASE("single zero for U0/omega = 1.6") {
        const auto roots = find_rho2_zeros(1.6, 0.0, 8.0, 0.005);
        REQUIRE(roots.size() == 1);
        CHECK(std::abs(roots[0] - 0.95) < 0.02);
        CHECK(std::abs(detail::rho_pair(roots[0], 1.6).rho2) < 1e-10);
    }
    SUBCASE("four zeros for U0/omega = 2.58") {
        const auto roots = find_rho2_zeros(2.58, 0.0, 8.0, 0.005);
        REQUIRE(roots.size() == 4);
        const double want[4] = {1.20, 2.02, 5.52, 5.74};
        for (int k = 0; k < 4; ++k) {
            CHECK(std::abs(roots[static_cast<std::size_t>(k)] - want[k]) < 0.02);
            CHECK(std::abs(detail::rho_pair(roots[static_cast<std::size_t>(k)], 2.58).rho2) < 1e-10);
        }
    }
    SUBCASE("no zero close to zero drive") {
        CHECK(find_rho2_zeros(1.7, 0.0, 0.1, 0.001).empty());
        CHECK(find_rho2_zeros(2.58, 0.0, 0.1, 0.001).empty());
        // dense sign sweep confirms: rho2 keeps the sign of 1/(U0/omega) there
        for (double x = 0.0; x <= 0.1; x += 0.001) CHECK(detail::rho_pair(x, 1.7).rho2 > 0.0);
    }
    SUBCASE("grid step precondition") {
        CHECK_THROWS_AS(find_rho2_zeros(1.6, 0.0, 8.0, 0.02), std::invalid_argument);
    }
}

TEST_CASE("paired closed form") {
    const auto c = rho_coefficients(kFig3);
    SUBCASE("initial condition and normalization") {
        const auto p0 = analytic_paired_probabilities(c, 0.0);
        CHECK(p0.p1 == 0.0);
        CHECK(p0.p2 == 1.0);
        CHECK(p0.p3 == 0.0);
        for (double t = 0.0; t < 300.0; t += 7.3) {
            const auto pr = analytic_paired_probabilities(c, t);
            CHECK(std::abs(pr.p1 + pr.p2 + pr.p3 - 1.0) < 1e-14);
            CHECK(pr.p1 == pr.p3);
        }
    }
    SUBCASE("minimum of P2") {
        const double denom = c.rho1 * c.rho1 + 8.0 * c.rho2 * c.rho2;
        const double t_min = 0.5 * std::numbers::pi / c.omega1;
        CHECK(analytic_paired_probabilities(c, t_min).p2 ==
              doctest::Approx(c.rho1 * c.rho1 / denom).epsilon(1e-12));
    }
    SUBCASE("degenerate coefficients rejected") {
        TunnelingCoefficients zero{};
        CHECK_THROWS_AS(analytic_paired_probabilities(zero, 1.0), NumericError);
    }
}

TEST_CASE("paired closed form matches the integrated primed amplitude equations") {
    // independent oracle: integrate the coupled slow amplitudes
    //   i A1' = k A2 e^{-i a t},  i A2' = k e^{+i a t} (A1 + A3),  i A3' = i A1'
    // with k = 2 J^2 rho2 / omega, a = 2 J^2 rho1 / omega, from (0, 1, 0)
    const auto c = rho_coefficients(kFig3);
    const double k = 2.0 * c.rho2 / 80.0;
    const double a = 2.0 * c.rho1 / 80.0;
    ComplexVec<3> y{std::complex<double>{0.0, 0.0}, std::complex<double>{1.0, 0.0},
                    std::complex<double>{0.0, 0.0}};
    std::vector<double> grid;
    for (int i = 0; i <= 3000; ++i) grid.push_back(150.0 * i / 3000.0);

    double dev_right = 0.0, dev_printed = 0.0;
    const std::complex<double> mi{0.0, -1.0};
    integrate_dopri5<3>(
        [&](double t, const ComplexVec<3>& v, ComplexVec<3>& dv) {
            const std::complex<double> down = std::polar(1.0, -a * t);
            dv[0] = mi * (k * v[1] * down);
            dv[1] = mi * (k * (v[0] + v[2]) * std::conj(down));
            dv[2] = mi * (k * v[1] * down);
        },
        y, grid, 1e-12, 1e-12,
        [&](std::size_t, double t, const ComplexVec<3>& v) {
            const double p2 = std::norm(v[1]);
            dev_right = std::max(dev_right, std::abs(p2 - analytic_paired_probabilities(c, t).p2));
            // the same solution with the sine coefficient rho1/(rho1^2+8 rho2^2)
            // instead of rho1/sqrt(rho1^2+8 rho2^2) fails to track it
            const double denom = c.rho1 * c.rho1 + 8.0 * c.rho2 * c.rho2;
            const double cs = std::cos(c.omega1 * t), sn = std::sin(c.omega1 * t);
            const double p2_alt = cs * cs + (c.rho1 / denom) * (c.rho1 / denom) * sn * sn;
            dev_printed = std::max(dev_printed, std::abs(p2 - p2_alt));
        });
    CHECK(dev_right < 1e-8);
    CHECK(dev_printed > 0.01);
}

TEST_CASE("unpaired closed form") {
    const auto c = rho_coefficients(kFig3);
    const auto u0 = analytic_unpaired_probabilities(c, 0.0);
    CHECK(u0.p4 == 0.0);
    CHECK(u0.p5 == 1.0);
    CHECK(u0.p6 == 0.0);
    for (double t = 0.0; t < 40.0; t += 1.7) {
        const auto u = analytic_unpaired_probabilities(c, t);
        CHECK(std::abs(u.p4 + u.p5 + u.p6 - 1.0) < 1e-14);
        CHECK(u.p4 == u.p6);
    }
    // frozen at a zero of J0
    ModelParams pz{1.0, 120.0, 2.4048255577 * 80.0, 80.0};
    const auto cz = rho_coefficients(pz);
    CHECK(std::abs(cz.omega2) < 1e-8);
    CHECK(analytic_unpaired_probabilities(cz, 57.0).p5 == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("pair exchange at a J0 zero") {
    const ModelParams p{1.0, 120.0, 2.4048255577 * 80.0, 80.0};
    const auto c = rho_coefficients(p);
    const auto e0 = analytic_cdt_exchange(c, p, 0.0);
    CHECK(e0.p4 == 1.0);
    CHECK(e0.p6 == 0.0);
    const double half = 0.5 * std::numbers::pi * 80.0 / (2.0 * std::abs(c.rho2));
    const auto eh = analytic_cdt_exchange(c, p, half);
    CHECK(eh.p4 == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(eh.p6 == doctest::Approx(1.0).epsilon(1e-12));
    for (double t = 0.0; t < 200.0; t += 13.7) {
        const auto e = analytic_cdt_exchange(c, p, t);
        CHECK(std::abs(e.p4 + e.p6 - 1.0) < 1e-14);
    }
    // off the zero the formula refuses to apply
    CHECK_THROWS_AS(analytic_cdt_exchange(rho_coefficients(kFig3), kFig3, 1.0), PreconditionError);
}
