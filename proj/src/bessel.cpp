#include "trimer/bessel.hpp"

#include <cmath>
#include <stdexcept>

namespace trimer {

namespace {

constexpr double kLn1em300 = -690.77552789821368;  // ln(1e-300)

// Crude but safe magnitude bound in the monotone-decay regime n > x:
// |J_n(x)| <= (x/2)^n / n!.
bool underflows_below_1e300(int n, double ax) {
    if (ax <= 0.0) return n > 0;
    double lg = static_cast<double>(n) * std::log(0.5 * ax) - std::lgamma(n + 1.0);
    return lg < kLn1em300;
}

// Miller's algorithm: run the three-term recurrence downward from a start
// index well above both the order and the turning point, then normalize with
// J_0 + 2*sum_{k>=1} J_2k = 1.
double bessel_j_downward(int n, double ax) {
    const double big = 1e250, small = 1e-250;
    const int top = std::max(n, static_cast<int>(std::ceil(ax)));
    const int start = top + 45 + static_cast<int>(2.0 * std::sqrt(static_cast<double>(top) + 1.0));

    double jup = 0.0;   // J_{k+1}, unnormalized
    double jcur = 1.0;  // J_k, unnormalized
    double sum = (start % 2 == 0) ? 2.0 * jcur : 0.0;
    double value = 0.0;
    double value_scale = 1.0;  // tracks rescaling applied after value was captured

    for (int k = start; k > 0; --k) {
        double jdown = (2.0 * k / ax) * jcur - jup;
        jup = jcur;
        jcur = jdown;
        const int idx = k - 1;
        if (idx == n) {
            value = jcur;
            value_scale = 1.0;
        }
        if (idx % 2 == 0) sum += (idx == 0) ? jcur : 2.0 * jcur;
        if (std::abs(jcur) > big) {
            jcur *= small;
            jup *= small;
            sum *= small;
            value_scale *= small;
        }
    }
    return (value * value_scale) / sum;
}

double bessel_j_nonneg(int n, double ax) {
    if (ax == 0.0) return n == 0 ? 1.0 : 0.0;
    if (n > ax + 40.0 && underflows_below_1e300(n, ax)) return 0.0;
    return bessel_j_downward(n, ax);
}

}  // namespace

double bessel_j(int n, double x) {
    if (!std::isfinite(x)) throw std::domain_error("bessel_j: non-finite argument");
    long long m = n;
    if (m > 1000000 || m < -1000000) throw std::invalid_argument("bessel_j: |order| > 1e6");
    double sign = 1.0;
    if (m < 0) {
        m = -m;
        if (m & 1) sign = -sign;
    }
    double ax = x;
    if (std::signbit(ax)) {
        ax = -ax;
        if (m & 1) sign = -sign;
    }
    return sign * bessel_j_nonneg(static_cast<int>(m), ax);
}

std::vector<double> bessel_j_all(int nmax, double x) {
    if (!std::isfinite(x) || x < 0.0) throw std::domain_error("bessel_j_all: argument must be finite and >= 0");
    if (nmax < 0 || nmax > 1000000) throw std::invalid_argument("bessel_j_all: order range");

    std::vector<double> out(static_cast<std::size_t>(nmax) + 1, 0.0);
    if (x == 0.0) {
        out[0] = 1.0;
        return out;
    }

    const double big = 1e250, small = 1e-250;
    const int top = std::max(nmax, static_cast<int>(std::ceil(x)));
    const int start = top + 45 + static_cast<int>(2.0 * std::sqrt(static_cast<double>(top) + 1.0));

    std::vector<double> scale(out.size(), 1.0);
    double jup = 0.0, jcur = 1.0;
    double sum = (start % 2 == 0) ? 2.0 * jcur : 0.0;
    double rescale = 1.0;  // cumulative shrink applied so far

    for (int k = start; k > 0; --k) {
        double jdown = (2.0 * k / x) * jcur - jup;
        jup = jcur;
        jcur = jdown;
        const int idx = k - 1;
        if (idx <= nmax) {
            out[static_cast<std::size_t>(idx)] = jcur;
            scale[static_cast<std::size_t>(idx)] = rescale;
        }
        if (idx % 2 == 0) sum += (idx == 0) ? jcur : 2.0 * jcur;
        if (std::abs(jcur) > big) {
            jcur *= small;
            jup *= small;
            sum *= small;
            rescale *= small;
        }
    }
    // Entries captured before a rescale carry the extra factor the running
    // variables lost afterwards; divide it back out.
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = out[i] * (rescale / scale[i]) / sum;
    return out;
}

}  // namespace trimer
