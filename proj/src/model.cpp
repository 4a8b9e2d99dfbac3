#include "trimer/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "trimer/errors.hpp"

namespace trimer {

double ModelParams::drive(double t) const { return eps * std::cos(omega * t); }

double ModelParams::period() const { return 2.0 * std::numbers::pi / omega; }

void ModelParams::validate() const {
    if (!(std::isfinite(J) && std::isfinite(U0) && std::isfinite(eps) && std::isfinite(omega)))
        throw std::invalid_argument("ModelParams: parameters must be finite");
    if (!(J >= 0.0)) throw std::invalid_argument("ModelParams: J must be >= 0");
    if (!(omega > 0.0)) throw std::invalid_argument("ModelParams: omega must be > 0");
    if (!(eps >= 0.0)) throw std::invalid_argument("ModelParams: eps must be >= 0");
}

InteractionDecomposition decompose_interaction(double u0, double omega) {
    if (!(omega > 0.0)) throw std::invalid_argument("decompose_interaction: omega must be > 0");
    if (!(u0 >= 0.0)) throw std::invalid_argument("decompose_interaction: U0 must be >= 0");
    // u in (-omega/2, omega/2]: the tie u = +omega/2 goes with the smaller m.
    int m = static_cast<int>(std::ceil(u0 / omega - 0.5));
    if (m < 0) m = 0;
    return {m, u0 - static_cast<double>(m) * omega};
}

InteractionDecomposition decompose_interaction(const ModelParams& p) {
    return decompose_interaction(p.U0, p.omega);
}

int fock_index(const std::string& label) {
    for (int i = 0; i < kNumStates; ++i) {
        if (label == fock_label(i)) return i;
    }
    throw UsageError("unknown initial-state tag '" + label + "' (expected one of 200,020,002,110,101,011)");
}

std::string fock_label(int index) {
    if (index < 0 || index >= kNumStates) throw std::invalid_argument("fock_label: index out of range");
    const auto& occ = kFockBasis[static_cast<std::size_t>(index)];
    return std::to_string(occ[0]) + std::to_string(occ[1]) + std::to_string(occ[2]);
}

Matrix6d hamiltonian(const ModelParams& p, double t) {
    if (!std::isfinite(t)) throw std::invalid_argument("hamiltonian: t must be finite");
    const double e = p.drive(t);
    const double hop2 = -std::numbers::sqrt2 * p.J;

    Matrix6d h = Matrix6d::Zero();
    h(0, 0) = p.U0 - 2.0 * e;
    h(1, 1) = p.U0;
    h(2, 2) = p.U0 + 2.0 * e;
    h(3, 3) = -e;
    h(4, 4) = 0.0;
    h(5, 5) = e;

    h(0, 3) = h(3, 0) = hop2;
    h(1, 3) = h(3, 1) = hop2;
    h(1, 5) = h(5, 1) = hop2;
    h(2, 5) = h(5, 2) = hop2;
    h(3, 4) = h(4, 3) = -p.J;
    h(4, 5) = h(5, 4) = -p.J;
    return h;
}

}  // namespace trimer
