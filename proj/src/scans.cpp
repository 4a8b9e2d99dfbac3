#include "trimer/scans.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "trimer/errors.hpp"

namespace trimer {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

bool near_integer(double r) { return std::abs(r - std::round(r)) <= 1e-6; }

template <class Body>
void run_points(int n, bool parallel, Body&& body) {
#ifdef _OPENMP
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
#else
    (void)parallel;
#endif
    for (int i = 0; i < n; ++i) body(i);
}

// Runs one grid point, capturing any failure into the per-point record.
template <class Compute>
void guarded(ScanResult& res, int i, Compute&& compute) {
    try {
        compute();
    } catch (const ResonanceError& e) {
        res.status[static_cast<std::size_t>(i)] = PointStatus::skipped_resonance;
        res.message[static_cast<std::size_t>(i)] = e.what();
    } catch (const std::exception& e) {
        res.status[static_cast<std::size_t>(i)] = PointStatus::failed;
        res.message[static_cast<std::size_t>(i)] = e.what();
    }
}

ScanResult make_result(const ScanSpec& spec, int n, int n_values) {
    ScanResult res;
    res.spec = spec;
    res.coords.resize(static_cast<std::size_t>(n));
    res.values.assign(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n_values), kNan));
    res.status.assign(static_cast<std::size_t>(n), PointStatus::ok);
    res.message.resize(static_cast<std::size_t>(n));
    return res;
}

}  // namespace

const char* scan_quantity_name(ScanQuantity q) {
    switch (q) {
        case ScanQuantity::rho2_surface: return "rho2_surface";
        case ScanQuantity::s_vs_u0: return "S_vs_U0";
        case ScanQuantity::s_vs_omega: return "S_vs_omega";
        default: return "quasienergy_sweep";
    }
}

const char* point_status_name(PointStatus s) {
    switch (s) {
        case PointStatus::ok: return "ok";
        case PointStatus::skipped_resonance: return "skipped-resonance";
        default: return "failed";
    }
}

int AxisSpec::count() const {
    if (!(step > 0.0) || !(hi >= lo)) throw std::invalid_argument("AxisSpec: need hi >= lo and step > 0");
    return static_cast<int>(std::floor((hi - lo) / step + 1e-9)) + 1;
}

ScanResult scan_rho2_surface(const ScanSpec& spec) {
    if (spec.axes.size() != 2 || spec.axes[0].name != "u0_over_omega" ||
        spec.axes[1].name != "eps_over_omega")
        throw std::invalid_argument("scan_rho2_surface: axes must be (u0_over_omega, eps_over_omega)");

    const int rows = spec.axes[0].count();
    const int cols = spec.axes[1].count();
    const int n = rows * cols;
    ScanResult res = make_result(spec, n, 1);

    const int ncut = detail::default_truncation(spec.axes[1].hi);
    run_points(n, spec.parallel, [&](int i) {
        const int ir = i / cols, ic = i % cols;
        const double r = spec.axes[0].value(ir);
        const double x = spec.axes[1].value(ic);
        res.coords[static_cast<std::size_t>(i)] = {r, x};
        guarded(res, i, [&] {
            if (near_integer(r)) throw ResonanceError("integer U0/omega grid point");
            res.values[static_cast<std::size_t>(i)][0] = detail::rho_pair(x, r, ncut).rho2;
        });
    });
    return res;
}

ScanResult scan_S(const ScanSpec& spec) {
    if (spec.axes.size() != 1) throw std::invalid_argument("scan_S: exactly one axis");
    const bool over_u0 = spec.axes[0].name == "u0";
    if (!over_u0 && spec.axes[0].name != "omega")
        throw std::invalid_argument("scan_S: axis must be u0 or omega");

    const int n = spec.axes[0].count();
    ScanResult res = make_result(spec, n, 1);
    const StateVector initial = fock_state(spec.initial_state);

    run_points(n, spec.parallel, [&](int i) {
        const double v = spec.axes[0].value(i);
        res.coords[static_cast<std::size_t>(i)] = {v, 0.0};
        guarded(res, i, [&] {
            ModelParams p = spec.base;
            if (over_u0)
                p.U0 = v;
            else
                p.omega = v;
            const Trajectory traj = integrate_exact(p, initial, spec.tau, spec.tol);
            res.values[static_cast<std::size_t>(i)][0] = time_averaged_S(traj, spec.tau);
        });
    });
    return res;
}

ScanResult scan_quasienergies(const ScanSpec& spec) {
    if (spec.axes.size() != 1 || spec.axes[0].name != "eps_over_omega")
        throw std::invalid_argument("scan_quasienergies: axis must be eps_over_omega");

    const int n = spec.axes[0].count();
    const int n_values = spec.with_analytic ? 12 : 6;
    ScanResult res = make_result(spec, n, n_values);
    res.labels.assign(static_cast<std::size_t>(n),
                      {BandLabel::ambiguous, BandLabel::ambiguous, BandLabel::ambiguous,
                       BandLabel::ambiguous, BandLabel::ambiguous, BandLabel::ambiguous});

    run_points(n, spec.parallel, [&](int i) {
        const double x = spec.axes[0].value(i);
        res.coords[static_cast<std::size_t>(i)] = {x, 0.0};
        guarded(res, i, [&] {
            ModelParams p = spec.base;
            p.eps = x * p.omega;
            QuasienergyRecord rec = quasienergies(monodromy(p), p.omega);
            rec.eps_over_omega = x;
            rec.u0_over_omega = p.u0_over_omega();
            classify_bands(rec);
            auto& row = res.values[static_cast<std::size_t>(i)];
            for (int k = 0; k < 6; ++k) row[static_cast<std::size_t>(k)] = rec.energy[static_cast<std::size_t>(k)];
            res.labels[static_cast<std::size_t>(i)] = rec.label;

            if (spec.with_analytic && !near_integer(p.u0_over_omega())) {
                const TunnelingCoefficients c = rho_coefficients(p);
                auto un = analytic_unpaired_quasienergies(p, c).e;
                auto pa = analytic_paired_quasienergies(p, c).folded;
                std::sort(un.begin(), un.end());
                std::sort(pa.begin(), pa.end());
                for (int k = 0; k < 3; ++k) {
                    row[static_cast<std::size_t>(6 + k)] = un[static_cast<std::size_t>(k)];
                    row[static_cast<std::size_t>(9 + k)] = pa[static_cast<std::size_t>(k)];
                }
            }
        });
    });
    return res;
}

double estimate_half_width(const ScanResult& s_scan, int m, double recovery_level) {
    if (s_scan.spec.quantity != ScanQuantity::s_vs_u0)
        throw std::invalid_argument("estimate_half_width: needs an S-vs-U0 scan");
    if (m < 1) throw std::invalid_argument("estimate_half_width: m must be >= 1");
    if (!(recovery_level > 0.0 && recovery_level < 1.0))
        throw std::invalid_argument("estimate_half_width: recovery level must lie in (0, 1)");

    const AxisSpec& axis = s_scan.spec.axes[0];
    const double center = static_cast<double>(m) * s_scan.spec.base.omega;
    if (center < axis.lo || center > axis.hi)
        throw CoverageError("estimate_half_width: resonance point outside the scanned range");

    const int n = s_scan.points();
    const int i0 = static_cast<int>(std::lround((center - axis.lo) / axis.step));
    auto s_at = [&](int i) {
        if (s_scan.status[static_cast<std::size_t>(i)] != PointStatus::ok)
            throw CoverageError("estimate_half_width: non-ok point inside the valley");
        return s_scan.values[static_cast<std::size_t>(i)][0];
    };

    if (s_at(i0) > recovery_level)
        throw CoverageError("estimate_half_width: no valley at the resonance point");

    double right = -1.0, left = -1.0;
    for (int i = i0 + 1; i < n; ++i) {
        if (s_at(i) > recovery_level) {
            right = axis.value(i) - center;
            break;
        }
    }
    for (int i = i0 - 1; i >= 0; --i) {
        if (s_at(i) > recovery_level) {
            left = center - axis.value(i);
            break;
        }
    }
    if (right < 0.0 || left < 0.0)
        throw CoverageError("estimate_half_width: valley recovery not bracketed by the scan");
    return 0.5 * (left + right);
}

}  // namespace trimer
