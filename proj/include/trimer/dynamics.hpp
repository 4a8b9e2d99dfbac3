#pragma once

#include <array>
#include <complex>
#include <vector>

#include "trimer/effective.hpp"
#include "trimer/model.hpp"

namespace trimer {

// Six complex amplitudes over the Fock basis order of model.hpp.
using StateVector = std::array<std::complex<double>, 6>;

StateVector fock_state(int index);

enum class ModelKind { exact, first_order, second_order, closed_form };

struct Trajectory {
    ModelKind model = ModelKind::exact;
    std::vector<double> time;                     // uniform, ascending
    std::vector<std::array<double, 6>> prob;      // |amplitude|^2 per state
    std::vector<StateVector> amplitudes;          // only when requested
    double max_norm_error = 0.0;                  // max over samples of |sum_j P_j - 1|
};

struct TrajectoryOptions {
    bool keep_amplitudes = false;
    int samples_per_period = 100;  // lower bound on output density
    int min_samples = 2000;        // lower bound on total output intervals
    // Testing hooks for the exact model only.
    bool lab_frame = false;        // integrate the untransformed amplitude equations
    double drive_sign = 1.0;       // -1 runs the mirrored drive -eps*cos(omega t)
};

// Uniform output grid covering [0, t_end] with at least samples_per_period
// points per drive period and at least min_samples intervals in total.
std::vector<double> sample_grid(double t_end, double omega, int samples_per_period = 100,
                                int min_samples = 2000);

// Exact amplitude equations i c' = H(t) c. Internally the fast diagonal
// phases are removed by an exact frame change (probabilities are unaffected)
// so the per-step error budget goes into the hopping dynamics; amplitudes,
// when kept, are transformed back. tol in [1e-12, 1e-4].
Trajectory integrate_exact(const ModelParams& p, const StateVector& initial, double t_end,
                           double tol = 1e-10, const TrajectoryOptions& opt = {});

// Drive-averaged first-order model: Bessel-weighted hopping with slow e^{±iut}
// phases. Amplitudes, when kept, are the slow variables themselves.
Trajectory integrate_first_order(const ModelParams& p, const StateVector& initial, double t_end,
                                 double tol = 1e-10, const TrajectoryOptions& opt = {});

// Constant-coefficient second-order model: decoupled paired and unpaired
// blocks with rho1/rho2 couplings (and the first-order J*J0 coupling in the
// unpaired block), expressed in physical time.
Trajectory integrate_second_order(const ModelParams& p, const TunnelingCoefficients& c,
                                  const StateVector& initial, double t_end, double tol = 1e-10,
                                  const TrajectoryOptions& opt = {});

// (1/tau) * integral_0^tau (P1+P2+P3) dt by trapezoidal quadrature on the
// trajectory grid. Throws CoverageError when the trajectory ends before tau.
double time_averaged_S(const Trajectory& traj, double tau);

}  // namespace trimer
