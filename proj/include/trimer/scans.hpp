#pragma once

#include <array>
#include <string>
#include <vector>

#include "trimer/dynamics.hpp"
#include "trimer/effective.hpp"
#include "trimer/floquet.hpp"
#include "trimer/model.hpp"

namespace trimer {

enum class ScanQuantity { rho2_surface, s_vs_u0, s_vs_omega, quasienergy_sweep };

const char* scan_quantity_name(ScanQuantity q);

struct AxisSpec {
    std::string name;  // "u0", "omega", "eps_over_omega", "u0_over_omega"
    double lo = 0.0;
    double hi = 0.0;
    double step = 0.0;

    int count() const;
    double value(int i) const { return lo + static_cast<double>(i) * step; }
};

struct ScanSpec {
    ScanQuantity quantity = ScanQuantity::rho2_surface;
    std::vector<AxisSpec> axes;  // one axis, or two for rho2_surface (row-major: axes[0] outer)
    ModelParams base;            // fixed parameters
    int initial_state = 1;       // Fock index, |0,2,0> by default
    double tau = 200.0;          // averaging window for the S scans
    double tol = 1e-8;           // trajectory tolerance for the S scans
    bool with_analytic = false;  // quasienergy sweeps: add the closed-form sextuple
    bool parallel = true;        // false runs the serial reference path
};

enum class PointStatus { ok, skipped_resonance, failed };

const char* point_status_name(PointStatus s);

// One record per grid point in deterministic row-major order; identical specs
// produce identical results regardless of the execution path.
struct ScanResult {
    ScanSpec spec;
    std::vector<std::array<double, 2>> coords;      // [axis0, axis1]; axis1 = 0 for 1-D scans
    std::vector<std::vector<double>> values;        // payload, see the scan functions
    std::vector<std::array<BandLabel, 6>> labels;   // quasienergy sweeps only
    std::vector<PointStatus> status;
    std::vector<std::string> message;               // failure detail, empty when ok

    int points() const { return static_cast<int>(coords.size()); }
};

// rho2 over a (u0_over_omega, eps_over_omega) grid; payload {rho2}. Points
// with U0/omega within 1e-6 of an integer are marked skipped_resonance.
ScanResult scan_rho2_surface(const ScanSpec& spec);

// Time-averaged paired-subspace probability <S> from the exact model with the
// middle-well pair as default initial state; payload {S}. Axis "u0" or "omega".
ScanResult scan_S(const ScanSpec& spec);

// Numerical quasienergies (ascending, with band labels) along an
// eps_over_omega axis; payload {E1..E6} plus {Eu1..Eu3, Ep1..Ep3} when
// with_analytic is set (NaN at resonant U0/omega, where the closed forms
// have poles).
ScanResult scan_quasienergies(const ScanSpec& spec);

// Half-width of the <S> valley centred at U0 = m*omega, measured where <S>
// first recovers above recovery_level on each side of the resonance (average
// of the two one-sided distances). At 0.98 the first valley of the reference
// scan (J=1, omega=80, eps/omega=2.405, tau=200) is 10.5 J wide, consistent
// with the expected ~10 J; a 0.99 level pushes the measured edge to ~15 J.
// Throws CoverageError when the scan shows no valley there or does not
// bracket the recovery.
double estimate_half_width(const ScanResult& s_scan, int m, double recovery_level = 0.98);

}  // namespace trimer
