#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "trimer/bessel.hpp"

using trimer::bessel_j;
using trimer::bessel_j_all;

namespace {

// Independent oracle: the defining power series in long double. Good to
// ~1e-17 for |x| <= 12 where the terms do not cancel catastrophically.
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

}  // namespace

TEST_CASE("values at zero argument") {
    CHECK(bessel_j(0, 0.0) == 1.0);
    CHECK(bessel_j(1, 0.0) == 0.0);
    CHECK(bessel_j(7, 0.0) == 0.0);
    CHECK(bessel_j(-3, 0.0) == 0.0);
}

TEST_CASE("first zeros of J0 and J1") {
    CHECK(std::abs(bessel_j(0, 2.404826)) < 1e-5);
    CHECK(std::abs(bessel_j(1, 3.831706)) < 1e-5);
}

TEST_CASE("negative order equals the reflected series value") {
    const double oracle = static_cast<double>(series_j(1, 1.0L));
    CHECK(bessel_j(-1, 1.0) == doctest::Approx(-oracle).epsilon(1e-14));
    CHECK(bessel_j(-1, 1.0) == -bessel_j(1, 1.0));
}

TEST_CASE("reflection identities hold bit-exactly") {
    const double xs[] = {0.3, 1.0, 2.405, 7.7, 19.3};
    for (double x : xs) {
        for (int n = -20; n <= 20; ++n) {
            const double ref = bessel_j(std::abs(n), x);
            const double want_n = (n % 2 != 0 && n < 0) ? -ref : ref;
            CHECK(bessel_j(n, x) == want_n);
            const double want_neg_x = (n % 2 != 0) ? -bessel_j(n, x) : bessel_j(n, x);
            CHECK(bessel_j(n, -x) == want_neg_x);
        }
    }
}

TEST_CASE("matches the power series for small arguments") {
    const double xs[] = {0.1, 0.5, 1.0, 2.405, 3.832, 5.0, 8.0, 10.0};
    for (double x : xs) {
        for (int n = 0; n <= 30; ++n) {
            const double want = static_cast<double>(series_j(n, static_cast<long double>(x)));
            CHECK(std::abs(bessel_j(n, x) - want) < 1e-13);
        }
    }
}

TEST_CASE("matches the standard library for larger arguments") {
    const double xs[] = {15.0, 25.0, 35.0, 50.0};
    for (double x : xs) {
        for (int n = 0; n <= 100; n += 7) {
            const double want = std::cyl_bessel_j(static_cast<double>(n), x);
            CHECK(std::abs(bessel_j(n, x) - want) < 1e-10);
        }
    }
}

TEST_CASE("three-term recurrence") {
    const double xs[] = {0.5, 1.7, 4.3, 9.9, 14.2, 20.0};
    for (double x : xs) {
        for (int n = -20; n <= 20; ++n) {
            const double lhs = bessel_j(n - 1, x) + bessel_j(n + 1, x);
            const double rhs = (2.0 * n / x) * bessel_j(n, x);
            CHECK(std::abs(lhs - rhs) < 1e-10);
        }
    }
}

TEST_CASE("squared-sum normalization") {
    const double xs[] = {0.5, 2.405, 10.0, 20.0, 50.0};
    for (double x : xs) {
        const int nmax = static_cast<int>(std::ceil(x)) + 40;
        double sum = bessel_j(0, x) * bessel_j(0, x);
        for (int n = 1; n <= nmax; ++n) {
            const double j = bessel_j(n, x);
            sum += 2.0 * j * j;
        }
        CHECK(std::abs(sum - 1.0) < 1e-10);
    }
}

TEST_CASE("far-tail underflow returns zero, moderate tails are computed") {
    CHECK(bessel_j(200, 1.0) == 0.0);
    CHECK(bessel_j(1000, 10.0) == 0.0);
    // n > x + 40 but the value is ~5e-16: must still be evaluated
    const double tail = bessel_j(95, 50.0);
    CHECK(tail != 0.0);
    CHECK(std::abs(tail - std::cyl_bessel_j(95.0, 50.0)) < 1e-12);
}

TEST_CASE("non-finite arguments are rejected") {
    CHECK_THROWS_AS(bessel_j(0, std::nan("")), std::domain_error);
    CHECK_THROWS_AS(bessel_j(2, INFINITY), std::domain_error);
    CHECK_THROWS_AS(bessel_j(2000000, 1.0), std::invalid_argument);
}

TEST_CASE("bessel_j_all agrees with per-order evaluation") {
    const auto all = bessel_j_all(60, 2.405);
    for (int n = 0; n <= 60; ++n) CHECK(std::abs(all[static_cast<std::size_t>(n)] - bessel_j(n, 2.405)) < 1e-15);
    const auto big = bessel_j_all(80, 50.0);
    for (int n = 0; n <= 80; n += 5) CHECK(std::abs(big[static_cast<std::size_t>(n)] - bessel_j(n, 50.0)) < 1e-13);
}
