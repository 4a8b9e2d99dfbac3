#pragma once

#include <Eigen/Dense>
#include <array>
#include <string>

namespace trimer {

using Matrix6d = Eigen::Matrix<double, 6, 6>;

// Dimensionless physical parameters: hopping J, on-site interaction U0,
// drive amplitude eps and drive angular frequency omega. All energies are in
// units of the reference frequency, time in its inverse.
struct ModelParams {
    double J = 1.0;
    double U0 = 0.0;
    double eps = 0.0;
    double omega = 80.0;

    double drive(double t) const;              // eps * cos(omega * t)
    double period() const;                     // 2*pi / omega
    double eps_over_omega() const { return eps / omega; }
    double u0_over_omega() const { return U0 / omega; }
    void validate() const;                     // throws std::invalid_argument
};

// U0 split into whole drive quanta plus a reduced remainder:
// U0 = m*omega + u with u in (-omega/2, omega/2], m >= 0.
struct InteractionDecomposition {
    int m = 0;
    double u = 0.0;
};

InteractionDecomposition decompose_interaction(const ModelParams& p);
InteractionDecomposition decompose_interaction(double u0, double omega);

// Two-boson occupation basis, fixed order. Indices 0..2 are the paired
// states (both bosons on one site), 3..5 the unpaired ones.
inline constexpr std::array<std::array<int, 3>, 6> kFockBasis = {{
    {2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1},
}};
inline constexpr int kNumStates = 6;
inline constexpr int kNumPaired = 3;

// "020" -> 1 etc.; throws UsageError for anything else.
int fock_index(const std::string& label);
std::string fock_label(int index);

// Instantaneous Hamiltonian over the basis above: real symmetric, diagonal
// (U0-2e, U0, U0+2e, -e, 0, +e) with e = eps*cos(omega*t), hopping -sqrt(2)*J
// on (0,3),(1,3),(1,5),(2,5) and -J on (3,4),(4,5).
Matrix6d hamiltonian(const ModelParams& p, double t);

}  // namespace trimer
