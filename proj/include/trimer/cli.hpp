#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trimer/model.hpp"

namespace trimer {

inline constexpr const char* kVersion = "1.0.0";

struct Range {
    double lo = 0.0;
    double hi = 0.0;
    double step = 0.0;
    bool operator==(const Range&) const = default;
};

// Resolved run description. The same set of keys is accepted as command-line
// flags (--key value, dashes and underscores interchangeable) and as lines of
// a flat key=value config file; flags override file values. A value written
// as lo:hi:step sweeps that parameter.
struct RunConfig {
    std::string command;  // simulate | scan-s | scan-rho2 | floquet-sweep | analytic-compare | find-crossings
    double J = 1.0;
    double U0 = 0.0;
    double eps = 0.0;  // eps_over_omega input is resolved into eps at parse time
    double omega = 80.0;
    int initial_state = 1;
    std::string model = "exact";  // simulate: exact | first-order | second-order | closed-form
    double t_end = 200.0;
    double tau = 200.0;
    double tol = 1e-10;
    std::optional<Range> sweep_u0;
    std::optional<Range> sweep_omega;
    std::optional<Range> sweep_eps_over_omega;
    std::optional<Range> sweep_u0_over_omega;
    double u0_over_omega = 0.0;  // find-crossings scalar
    Range crossing_range{0.0, 8.0, 0.0};
    double grid = 0.005;  // find-crossings scan step
    bool analytic = false;
    bool serial = false;
    std::string output;  // base path; defaults to the command name

    bool operator==(const RunConfig&) const = default;
};

// Flat key=value text (one pair per line, '#' comments allowed).
RunConfig parse_config_text(const std::string& text);

// argv-style parsing: first token is the command, the rest --key value pairs.
// --config FILE merges a config file underneath the explicit flags.
RunConfig parse_command_line(const std::vector<std::string>& args);

// Canonical key=value emission; parse_config_text(emit_config(c)) == c.
std::string emit_config(const RunConfig& c);

std::string usage_text();

// Dispatches the command and writes <output>.csv / <output>.json.
// Throws on failure; cli_main maps exceptions to exit codes.
void run(const RunConfig& c);

// Exit codes: 0 ok, 1 usage, 2 numeric, 3 resonance, 4 I/O.
int cli_main(int argc, char** argv);

}  // namespace trimer
