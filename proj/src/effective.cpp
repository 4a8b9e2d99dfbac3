#include "trimer/effective.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "trimer/bessel.hpp"
#include "trimer/errors.hpp"

namespace trimer {

namespace detail {

int default_truncation(double eps_over_omega) {
    return static_cast<int>(std::ceil(eps_over_omega)) + 40;
}

RhoPair rho_pair(double x, double r, int ncut) {
    if (!(std::isfinite(x) && x >= 0.0)) throw std::invalid_argument("rho_pair: eps/omega must be finite and >= 0");
    if (!std::isfinite(r)) throw std::invalid_argument("rho_pair: U0/omega must be finite");
    if (std::abs(r - std::round(r)) <= 1e-6)
        throw ResonanceError("rho coefficients undefined: U0/omega within 1e-6 of an integer");

    const std::vector<double> j = bessel_j_all(ncut, x);
    double rho1 = 0.0, rho2 = 0.0;
    for (int n = -ncut; n <= ncut; ++n) {
        const int an = n < 0 ? -n : n;
        double jn = j[static_cast<std::size_t>(an)];
        double jmn = jn;
        if (an & 1) {
            if (n < 0) jn = -jn;   // J_{-|n|} = -J_{|n|} for odd |n|
            else jmn = -jmn;
        }
        const double den = r + static_cast<double>(n);
        rho1 += jn * jn / den;
        rho2 += jn * jmn / den;
    }
    return {rho1, rho2};
}

RhoPair rho_pair(double x, double r) { return rho_pair(x, r, default_truncation(x)); }

}  // namespace detail

TunnelingCoefficients rho_coefficients(const ModelParams& p) {
    p.validate();
    const double x = p.eps_over_omega();
    const double r = p.u0_over_omega();
    const int ncut = detail::default_truncation(x);
    const auto [rho1, rho2] = detail::rho_pair(x, r, ncut);

    TunnelingCoefficients c;
    c.rho1 = rho1;
    c.rho2 = rho2;
    c.truncation = ncut;
    c.omega1 = (p.J * p.J / p.omega) * std::sqrt(rho1 * rho1 + 8.0 * rho2 * rho2);
    c.omega2 = std::numbers::sqrt2 * p.J * bessel_j(0, x);
    return c;
}

std::vector<double> find_rho2_zeros(double r, double lo, double hi, double grid_step) {
    if (!(grid_step > 0.0 && grid_step <= 0.01))
        throw std::invalid_argument("find_rho2_zeros: grid step must be in (0, 0.01]");
    if (!(lo >= 0.0 && hi > lo)) throw std::invalid_argument("find_rho2_zeros: bad interval");

    const int ncut = detail::default_truncation(hi);
    auto rho2_at = [&](double x) { return detail::rho_pair(x, r, ncut).rho2; };

    std::vector<double> roots;
    const int n = static_cast<int>(std::floor((hi - lo) / grid_step + 1e-9));
    double xa = lo;
    double fa = rho2_at(xa);
    for (int i = 1; i <= n; ++i) {
        const double xb = lo + i * grid_step;
        const double fb = rho2_at(xb);
        if (fa == 0.0) {
            roots.push_back(xa);
        } else if (fa * fb < 0.0) {
            double a = xa, b = xb, va = fa;
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (a + b);
                const double vm = rho2_at(mid);
                if (std::abs(vm) < 1e-10 || 0.5 * (b - a) < 1e-15) {
                    roots.push_back(mid);
                    break;
                }
                if (va * vm < 0.0) {
                    b = mid;
                } else {
                    a = mid;
                    va = vm;
                }
            }
        }
        xa = xb;
        fa = fb;
    }
    if (fa == 0.0) roots.push_back(xa);
    return roots;
}

PairedProbabilities analytic_paired_probabilities(const TunnelingCoefficients& c, double t) {
    const double denom = c.rho1 * c.rho1 + 8.0 * c.rho2 * c.rho2;
    if (denom == 0.0)
        throw NumericError("analytic_paired_probabilities: rho1 = rho2 = 0, amplitude equations are degenerate");
    const double cs = std::cos(c.omega1 * t);
    const double sn = std::sin(c.omega1 * t);
    PairedProbabilities out{};
    out.p2 = (c.rho1 * c.rho1 + 8.0 * c.rho2 * c.rho2 * cs * cs) / denom;
    out.p1 = 4.0 * c.rho2 * c.rho2 * sn * sn / denom;
    out.p3 = out.p1;
    return out;
}

UnpairedProbabilities analytic_unpaired_probabilities(const TunnelingCoefficients& c, double t) {
    const double cs = std::cos(c.omega2 * t);
    const double sn = std::sin(c.omega2 * t);
    return {0.5 * sn * sn, cs * cs, 0.5 * sn * sn};
}

ExchangeProbabilities analytic_cdt_exchange(const TunnelingCoefficients& c, const ModelParams& p,
                                            double t) {
    const double j0 = c.omega2 / (std::numbers::sqrt2 * p.J);
    if (std::abs(j0) > 1e-3)
        throw PreconditionError("analytic_cdt_exchange: J0(eps/omega) must vanish (|J0| <= 1e-3)");
    const double angle = 2.0 * p.J * p.J * c.rho2 * t / p.omega;
    const double cs = std::cos(angle);
    const double sn = std::sin(angle);
    return {cs * cs, sn * sn};
}

}  // namespace trimer
