#pragma once

#include <vector>

#include "trimer/model.hpp"

namespace trimer {

// Coefficients of the slow effective dynamics in the far-resonant regime.
// rho1 shifts levels, rho2 sets the second-order tunneling rate. omega1 is
// the paired-pair oscillation frequency (J^2/omega)*sqrt(rho1^2 + 8 rho2^2),
// omega2 the first-order unpaired one sqrt(2)*J*J0(eps/omega); omega2 keeps
// its sign, periods use its magnitude.
struct TunnelingCoefficients {
    double rho1 = 0.0;
    double rho2 = 0.0;
    double omega1 = 0.0;
    double omega2 = 0.0;
    int truncation = 0;  // Bessel sums cut at |n'| <= truncation
};

// Evaluates the interaction-ratio sums
//   rho1 = sum_n J_n(eps/omega)^2 / (U0/omega + n)
//   rho2 = sum_n J_n(eps/omega) J_{-n}(eps/omega) / (U0/omega + n)
// truncated at |n| <= ceil(eps/omega) + 40. Throws ResonanceError when
// U0/omega is within 1e-6 of an integer (the sums have poles there).
TunnelingCoefficients rho_coefficients(const ModelParams& p);

namespace detail {
struct RhoPair {
    double rho1;
    double rho2;
};
int default_truncation(double eps_over_omega);
RhoPair rho_pair(double eps_over_omega, double u0_over_omega, int ncut);
RhoPair rho_pair(double eps_over_omega, double u0_over_omega);
}  // namespace detail

// All sign changes of rho2(eps/omega) on [lo, hi], grid-scanned at grid_step
// (<= 0.01) and refined by bisection to |rho2| < 1e-10. Ascending.
std::vector<double> find_rho2_zeros(double u0_over_omega, double lo, double hi,
                                    double grid_step);

// Closed forms for the middle-well pair released at t = 0 (P2(0) = 1):
//   P2 = [rho1^2 + 8 rho2^2 cos^2(omega1 t)] / (rho1^2 + 8 rho2^2)
//   P1 = P3 = 4 rho2^2 sin^2(omega1 t) / (rho1^2 + 8 rho2^2)
// P1+P2+P3 = 1 identically.
struct PairedProbabilities {
    double p1, p2, p3;
};
PairedProbabilities analytic_paired_probabilities(const TunnelingCoefficients& c, double t);

// First-order closed form for |1,0,1> at t = 0: P5 = cos^2(omega2 t),
// P4 = P6 = sin^2(omega2 t)/2.
struct UnpairedProbabilities {
    double p4, p5, p6;
};
UnpairedProbabilities analytic_unpaired_probabilities(const TunnelingCoefficients& c, double t);

// Second-order exchange for |1,1,0> at a zero of J0(eps/omega):
// P4 = cos^2(2 J^2 rho2 t / omega), P6 = sin^2 of the same angle.
// Requires |J0(eps/omega)| <= 1e-3.
struct ExchangeProbabilities {
    double p4, p6;
};
ExchangeProbabilities analytic_cdt_exchange(const TunnelingCoefficients& c,
                                            const ModelParams& p, double t);

}  // namespace trimer
