#pragma once

#include <string>

#include "trimer/dynamics.hpp"
#include "trimer/scans.hpp"

namespace trimer {

// Fixed 12-significant-digit scientific notation used for all numeric data
// output; byte-identical across runs.
std::string format_sci(double v);

// Shortest round-trip representation, used for config echo.
std::string format_full(double v);

// Writes content with LF line endings; throws IoError on failure.
void write_text_file(const std::string& path, const std::string& content);

// Header "t,P1,P2,P3,P4,P5,P6", one row per sample in time order.
std::string trajectory_csv(const Trajectory& traj);

// First a "# quantity=...; fixed=...; tau=..." metadata comment, then the
// per-quantity header row and the data rows in deterministic grid order.
std::string scan_csv(const ScanResult& result);

}  // namespace trimer
