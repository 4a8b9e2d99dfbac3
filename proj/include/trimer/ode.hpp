#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>

#include "trimer/errors.hpp"

namespace trimer {

template <std::size_t N>
using ComplexVec = std::array<std::complex<double>, N>;

struct OdeStats {
    long long accepted = 0;
    long long rejected = 0;
    long long rhs_calls = 0;
};

// Adaptive embedded Dormand-Prince 5(4) with per-step error control on the
// real and imaginary parts. Integrates y' = f(t, y) along the monotone time
// grid, invoking observer(index, t, y) at every grid node including the
// first. Internal steps never cross a grid node, so observed states are
// genuine solution values, not interpolants.
template <std::size_t N, class Rhs, class Observer>
OdeStats integrate_dopri5(Rhs&& f, ComplexVec<N> y, std::span<const double> grid,
                          double rtol, double atol, Observer&& observer) {
    using C = std::complex<double>;

    constexpr double a21 = 1.0 / 5.0;
    constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
    constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
    constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0, a53 = 64448.0 / 6561.0,
                     a54 = -212.0 / 729.0;
    constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                     a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
    constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0, c5 = 8.0 / 9.0;
    constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0,
                     b5 = -2187.0 / 6784.0, b6 = 11.0 / 84.0;
    // Difference between the 5th-order weights and the embedded 4th-order ones.
    constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                     e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;

    OdeStats stats;
    if (grid.size() < 2) {
        if (!grid.empty()) observer(std::size_t{0}, grid[0], y);
        return stats;
    }

    ComplexVec<N> k1, k2, k3, k4, k5, k6, k7, yt, ynew;
    double t = grid[0];
    observer(std::size_t{0}, t, y);
    f(t, y, k1);
    ++stats.rhs_calls;

    double h = 0.01 * (grid[1] - grid[0]);

    for (std::size_t gi = 1; gi < grid.size(); ++gi) {
        const double t_target = grid[gi];
        while (t < t_target) {
            const double h_left = t_target - t;
            const bool clamped = h >= h_left;
            const double hs = clamped ? h_left : h;

            for (std::size_t i = 0; i < N; ++i) yt[i] = y[i] + hs * (a21 * k1[i]);
            f(t + c2 * hs, yt, k2);
            for (std::size_t i = 0; i < N; ++i) yt[i] = y[i] + hs * (a31 * k1[i] + a32 * k2[i]);
            f(t + c3 * hs, yt, k3);
            for (std::size_t i = 0; i < N; ++i)
                yt[i] = y[i] + hs * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
            f(t + c4 * hs, yt, k4);
            for (std::size_t i = 0; i < N; ++i)
                yt[i] = y[i] + hs * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
            f(t + c5 * hs, yt, k5);
            for (std::size_t i = 0; i < N; ++i)
                yt[i] = y[i] + hs * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] +
                                     a65 * k5[i]);
            f(t + hs, yt, k6);
            for (std::size_t i = 0; i < N; ++i)
                ynew[i] = y[i] + hs * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] +
                                       b6 * k6[i]);
            f(t + hs, ynew, k7);
            stats.rhs_calls += 6;

            double err2 = 0.0;
            for (std::size_t i = 0; i < N; ++i) {
                const C de = hs * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                                   e6 * k6[i] + e7 * k7[i]);
                const double sc = atol + rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
                const double q = std::abs(de) / sc;
                err2 += q * q;
            }
            const double err = std::sqrt(err2 / static_cast<double>(N));

            if (err <= 1.0) {
                t = clamped ? t_target : t + hs;
                y = ynew;
                k1 = k7;  // first-same-as-last
                ++stats.accepted;
                const double fac =
                    (err == 0.0) ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
                const double h_ctrl = hs * fac;
                h = clamped ? std::max(h, h_ctrl) : h_ctrl;
            } else {
                ++stats.rejected;
                h = hs * std::clamp(0.9 * std::pow(err, -0.2), 0.1, 0.9);
            }
            if (!(h > 1e-14 * std::max(1.0, std::abs(t))))
                throw IntegrationError(t, "integrate_dopri5: step size underflow");
        }
        observer(gi, t, y);
    }
    return stats;
}

}  // namespace trimer
