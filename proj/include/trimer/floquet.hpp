#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>

#include "trimer/effective.hpp"
#include "trimer/model.hpp"

namespace trimer {

using Matrix6cd = Eigen::Matrix<std::complex<double>, 6, 6>;

// One-period propagator U(T, 0) of the exact model.
struct Monodromy {
    Matrix6cd u;
    double period = 0.0;
    double unitarity_defect = 0.0;  // max |U^dag U - I|
};

// Integrates i dU/dt = H(t) U over one drive period from U(0) = I.
// Throws NumericError if the unitarity defect exceeds 1e-8.
Monodromy monodromy(const ModelParams& p, double tol = 1e-12);

// Maps e into the first Brillouin zone (-omega/2, omega/2]. Idempotent.
double fold_to_zone(double e, double omega);

enum class BandLabel { paired, unpaired, ambiguous };

const char* band_label_name(BandLabel label);

struct QuasienergyRecord {
    std::array<double, 6> energy{};       // ascending, folded into (-omega/2, omega/2]
    std::array<BandLabel, 6> label{};     // ambiguous until classify_bands
    std::array<double, 6> confidence{};   // |2w - 1| with w the paired weight
    Matrix6cd vectors;                    // eigenvector columns aligned with energy order
    double omega = 0.0;
    double eps_over_omega = 0.0;          // parameter point, filled by sweeps
    double u0_over_omega = 0.0;
    bool labeled = false;
};

// Eigen-decomposition of the monodromy: E_k = -arg(lambda_k)/T folded into the
// first zone. Enforces |(|lambda_k| - 1)| <= 1e-7 and per-pair residual
// ||U v - lambda v||_inf <= 1e-8.
QuasienergyRecord quasienergies(const Monodromy& m, double omega);

// Labels each eigenvector by its weight on the paired subspace: paired above
// 0.6, unpaired below 0.4, ambiguous between.
void classify_bands(QuasienergyRecord& rec);

// Closed-form quasienergies of the unpaired band:
//   E1 = -2 (2 rho1 - rho2) J^2 / omega
//   E2,3 = (-(2 rho1 + rho2) J^2 +- rho3) / omega
//   rho3 = sqrt((2 J^2 rho1 + J^2 rho2)^2 + 2 J^2 omega^2 J0^2)
// The sign of the linear term in E2,3 follows from the symmetric-sector
// eigenproblem and is validated against the numerical spectrum in the tests.
struct UnpairedQuasienergies {
    std::array<double, 3> e;
    double rho3;
};
UnpairedQuasienergies analytic_unpaired_quasienergies(const ModelParams& p,
                                                      const TunnelingCoefficients& c);

// Closed-form quasienergies of the paired band,
//   E4 = U0 + 2 J^2 rho1 / omega,
//   E5,6 = U0 + (3 J^2 rho1 +- sqrt(J^4 rho1^2 + 8 J^4 rho2^2)) / omega,
// both raw and folded into the first zone.
struct PairedQuasienergies {
    std::array<double, 3> folded;
    std::array<double, 3> unfolded;
};
PairedQuasienergies analytic_paired_quasienergies(const ModelParams& p,
                                                  const TunnelingCoefficients& c);

}  // namespace trimer
