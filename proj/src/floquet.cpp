#include "trimer/floquet.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "trimer/errors.hpp"
#include "trimer/ode.hpp"

namespace trimer {

namespace {

using C = std::complex<double>;
constexpr C kMinusI{0.0, -1.0};

// Column-major 6x6 propagator equation i dU/dt = H(t) U with the sparse
// Hamiltonian written out entry by entry.
struct PropagatorRhs {
    double J, U0, eps, omega;

    void operator()(double t, const ComplexVec<36>& u, ComplexVec<36>& du) const {
        const double e = eps * std::cos(omega * t);
        const double d0 = U0 - 2.0 * e, d2 = U0 + 2.0 * e;
        const double s = std::numbers::sqrt2 * J;
        for (int col = 0; col < 6; ++col) {
            const C* x = u.data() + 6 * col;
            C* dx = du.data() + 6 * col;
            dx[0] = kMinusI * (d0 * x[0] - s * x[3]);
            dx[1] = kMinusI * (U0 * x[1] - s * (x[3] + x[5]));
            dx[2] = kMinusI * (d2 * x[2] - s * x[5]);
            dx[3] = kMinusI * (-s * x[0] - s * x[1] - e * x[3] - J * x[4]);
            dx[4] = kMinusI * (-J * (x[3] + x[5]));
            dx[5] = kMinusI * (-s * x[1] - s * x[2] + e * x[5] - J * x[4]);
        }
    }
};

}  // namespace

Monodromy monodromy(const ModelParams& p, double tol) {
    p.validate();
    if (!(tol >= 1e-14 && tol <= 1e-10))
        throw std::invalid_argument("monodromy: tol must lie in [1e-14, 1e-10]");

    const double period = p.period();
    const std::array<double, 2> grid{0.0, period};

    ComplexVec<36> u0{};
    for (int i = 0; i < 6; ++i) u0[static_cast<std::size_t>(7 * i)] = C{1.0, 0.0};

    Monodromy m;
    m.period = period;
    PropagatorRhs rhs{p.J, p.U0, p.eps, p.omega};
    integrate_dopri5<36>(rhs, u0, grid, tol, tol,
                         [&](std::size_t i, double, const ComplexVec<36>& u) {
                             if (i == 1) {
                                 for (int col = 0; col < 6; ++col)
                                     for (int row = 0; row < 6; ++row)
                                         m.u(row, col) = u[static_cast<std::size_t>(6 * col + row)];
                             }
                         });

    const Matrix6cd defect = m.u.adjoint() * m.u - Matrix6cd::Identity();
    m.unitarity_defect = defect.cwiseAbs().maxCoeff();
    if (m.unitarity_defect > 1e-8)
        throw NumericError("monodromy: unitarity defect above 1e-8, retry with a tighter tol");
    return m;
}

double fold_to_zone(double e, double omega) {
    double r = std::remainder(e, omega);  // lands in [-omega/2, omega/2]
    if (r <= -0.5 * omega) r += omega;
    return r;
}

const char* band_label_name(BandLabel label) {
    switch (label) {
        case BandLabel::paired: return "paired";
        case BandLabel::unpaired: return "unpaired";
        default: return "ambiguous";
    }
}

QuasienergyRecord quasienergies(const Monodromy& m, double omega) {
    if (std::abs(omega * m.period - 2.0 * std::numbers::pi) > 1e-9)
        throw std::invalid_argument("quasienergies: omega inconsistent with the monodromy period");

    Eigen::ComplexEigenSolver<Matrix6cd> solver(m.u, /*computeEigenvectors=*/true);
    if (solver.info() != Eigen::Success)
        throw NumericError("quasienergies: eigen-decomposition did not converge");

    std::array<double, 6> energy{};
    for (int k = 0; k < 6; ++k) {
        const C lambda = solver.eigenvalues()(k);
        if (std::abs(std::abs(lambda) - 1.0) > 1e-7)
            throw NumericError("quasienergies: monodromy eigenvalue off the unit circle");
        const Eigen::Matrix<C, 6, 1> v = solver.eigenvectors().col(k);
        const double residual = (m.u * v - lambda * v).cwiseAbs().maxCoeff();
        if (residual > 1e-8) throw NumericError("quasienergies: eigenpair residual above 1e-8");
        energy[static_cast<std::size_t>(k)] = fold_to_zone(-std::arg(lambda) / m.period, omega);
    }

    std::array<int, 6> order{};
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return energy[static_cast<std::size_t>(a)] < energy[static_cast<std::size_t>(b)];
    });

    QuasienergyRecord rec;
    rec.omega = omega;
    for (int k = 0; k < 6; ++k) {
        rec.energy[static_cast<std::size_t>(k)] = energy[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])];
        rec.vectors.col(k) = solver.eigenvectors().col(order[static_cast<std::size_t>(k)]);
        rec.label[static_cast<std::size_t>(k)] = BandLabel::ambiguous;
    }
    return rec;
}

void classify_bands(QuasienergyRecord& rec) {
    for (int k = 0; k < 6; ++k) {
        double w = 0.0;
        for (int j = 0; j < kNumPaired; ++j) w += std::norm(rec.vectors(j, k));
        auto& label = rec.label[static_cast<std::size_t>(k)];
        if (w > 0.6)
            label = BandLabel::paired;
        else if (w < 0.4)
            label = BandLabel::unpaired;
        else
            label = BandLabel::ambiguous;
        rec.confidence[static_cast<std::size_t>(k)] = std::abs(2.0 * w - 1.0);
    }
    rec.labeled = true;
}

UnpairedQuasienergies analytic_unpaired_quasienergies(const ModelParams& p,
                                                      const TunnelingCoefficients& c) {
    if (p.J == 0.0) return {{0.0, 0.0, 0.0}, 0.0};
    const double j2 = p.J * p.J;
    const double bessel0 = c.omega2 / (std::numbers::sqrt2 * p.J);
    const double lin = (2.0 * c.rho1 + c.rho2) * j2;
    const double rho3 =
        std::sqrt(lin * lin + 2.0 * j2 * p.omega * p.omega * bessel0 * bessel0);
    UnpairedQuasienergies out{};
    out.rho3 = rho3;
    out.e[0] = -2.0 * (2.0 * c.rho1 - c.rho2) * j2 / p.omega;
    out.e[1] = (-lin + rho3) / p.omega;
    out.e[2] = (-lin - rho3) / p.omega;
    return out;
}

PairedQuasienergies analytic_paired_quasienergies(const ModelParams& p,
                                                  const TunnelingCoefficients& c) {
    const double j2 = p.J * p.J;
    const double split = j2 * std::sqrt(c.rho1 * c.rho1 + 8.0 * c.rho2 * c.rho2);
    PairedQuasienergies out{};
    out.unfolded[0] = p.U0 + 2.0 * j2 * c.rho1 / p.omega;
    out.unfolded[1] = p.U0 + (3.0 * j2 * c.rho1 + split) / p.omega;
    out.unfolded[2] = p.U0 + (3.0 * j2 * c.rho1 - split) / p.omega;
    for (int k = 0; k < 3; ++k)
        out.folded[static_cast<std::size_t>(k)] =
            fold_to_zone(out.unfolded[static_cast<std::size_t>(k)], p.omega);
    return out;
}

}  // namespace trimer
