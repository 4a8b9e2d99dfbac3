#include "trimer/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <limits>
#include <set>
#include <sstream>

#include "trimer/dynamics.hpp"
#include "trimer/effective.hpp"
#include "trimer/errors.hpp"
#include "trimer/floquet.hpp"
#include "trimer/io.hpp"
#include "trimer/scans.hpp"

namespace trimer {

namespace {

using ordered_json = nlohmann::ordered_json;

const std::set<std::string> kCommands = {"simulate",       "scan-s",           "scan-rho2",
                                         "floquet-sweep",  "analytic-compare", "find-crossings"};

struct KV {
    std::string key, value;
};

std::string normalize_key(std::string k) {
    for (char& c : k) {
        if (c == '-') c = '_';
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return k;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_number(const std::string& key, const std::string& value) {
    char* end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0' || !std::isfinite(v))
        throw UsageError("malformed number '" + value + "' for key '" + key + "'");
    return v;
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    throw UsageError("malformed boolean '" + value + "' for key '" + key + "'");
}

bool looks_like_range(const std::string& value) { return value.find(':') != std::string::npos; }

Range parse_range(const std::string& key, const std::string& value, bool step_required) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : value) {
        if (ch == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    if (parts.size() == 2 && !step_required)
        return {parse_number(key, parts[0]), parse_number(key, parts[1]), 0.0};
    if (parts.size() != 3)
        throw UsageError("key '" + key + "' expects a range min:max:step, got '" + value + "'");
    Range r{parse_number(key, parts[0]), parse_number(key, parts[1]), parse_number(key, parts[2])};
    if (!(r.step > 0.0) || !(r.hi >= r.lo))
        throw UsageError("key '" + key + "' expects max >= min and step > 0");
    return r;
}

std::vector<KV> parse_kv_lines(const std::string& text) {
    std::vector<KV> kvs;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const auto pos = line.find('=');
        if (pos == std::string::npos) throw UsageError("config line without '=': '" + line + "'");
        kvs.push_back({trim(line.substr(0, pos)), trim(line.substr(pos + 1))});
    }
    return kvs;
}

RunConfig build_config(const std::string& command, const std::vector<KV>& kvs) {
    if (!kCommands.count(command)) throw UsageError("unknown command '" + command + "'");

    RunConfig c;
    c.command = command;
    // per-command defaults; explicit keys overwrite them below
    if (command == "scan-s" || command == "scan-rho2" || command == "floquet-sweep" ||
        command == "analytic-compare")
        c.tol = 1e-8;
    if (command == "scan-rho2") {
        c.sweep_u0_over_omega = Range{0.37, 5.37, 1.0};
        c.sweep_eps_over_omega = Range{0.0, 8.0, 0.02};
    }
    if (command == "floquet-sweep") c.sweep_eps_over_omega = Range{0.0, 8.0, 0.01};
    if (command == "analytic-compare") {
        c.analytic = true;
        c.sweep_eps_over_omega = Range{1.5, 3.5, 0.02};
    }

    std::set<std::string> seen;
    bool eps_ratio_given = false;
    double eps_ratio = 0.0;

    for (const KV& raw : kvs) {
        const std::string key = normalize_key(raw.key);
        const std::string& val = raw.value;
        seen.insert(key);
        if (key == "command") {
            if (val != command)
                throw UsageError("config command '" + val + "' conflicts with '" + command + "'");
        } else if (key == "j") {
            c.J = parse_number(key, val);
        } else if (key == "u0") {
            if (looks_like_range(val))
                c.sweep_u0 = parse_range(key, val, true);
            else
                c.U0 = parse_number(key, val);
        } else if (key == "omega") {
            if (looks_like_range(val))
                c.sweep_omega = parse_range(key, val, true);
            else
                c.omega = parse_number(key, val);
        } else if (key == "eps") {
            c.eps = parse_number(key, val);
        } else if (key == "eps_over_omega") {
            if (looks_like_range(val)) {
                c.sweep_eps_over_omega = parse_range(key, val, true);
            } else {
                eps_ratio_given = true;
                eps_ratio = parse_number(key, val);
            }
        } else if (key == "u0_over_omega") {
            if (looks_like_range(val))
                c.sweep_u0_over_omega = parse_range(key, val, true);
            else
                c.u0_over_omega = parse_number(key, val);
        } else if (key == "initial") {
            c.initial_state = fock_index(val);
        } else if (key == "model") {
            c.model = val;
        } else if (key == "t_end") {
            c.t_end = parse_number(key, val);
        } else if (key == "tau") {
            c.tau = parse_number(key, val);
        } else if (key == "tol") {
            c.tol = parse_number(key, val);
        } else if (key == "range") {
            c.crossing_range = parse_range(key, val, false);
            c.crossing_range.step = 0.0;
        } else if (key == "grid") {
            c.grid = parse_number(key, val);
        } else if (key == "analytic") {
            c.analytic = parse_bool(key, val);
        } else if (key == "serial") {
            c.serial = parse_bool(key, val);
        } else if (key == "output") {
            c.output = val;
        } else {
            throw UsageError("unknown config key '" + raw.key + "'");
        }
    }

    if (eps_ratio_given) {
        if (seen.count("eps")) throw UsageError("give either eps or eps-over-omega, not both");
        if (c.sweep_omega)
            throw UsageError("eps-over-omega cannot be combined with an omega sweep; give eps");
        c.eps = eps_ratio * c.omega;
    }

    // ---- validation ----
    if (!(std::isfinite(c.J) && c.J >= 0.0)) throw UsageError("J must be finite and >= 0");
    if (!c.sweep_omega && !(std::isfinite(c.omega) && c.omega > 0.0))
        throw UsageError("omega must be finite and > 0");
    if (c.sweep_omega && !(c.sweep_omega->lo > 0.0)) throw UsageError("omega sweep must start > 0");
    if (!(std::isfinite(c.eps) && c.eps >= 0.0)) throw UsageError("eps must be finite and >= 0");
    if (!std::isfinite(c.U0)) throw UsageError("U0 must be finite");
    if (!(c.tol >= 1e-12 && c.tol <= 1e-4)) throw UsageError("tol must lie in [1e-12, 1e-4]");

    const bool any_sweep = c.sweep_u0 || c.sweep_omega || c.sweep_eps_over_omega || c.sweep_u0_over_omega;
    if (command == "simulate") {
        if (any_sweep) throw UsageError("simulate takes scalar parameters, not ranges");
        if (c.model != "exact" && c.model != "first-order" && c.model != "second-order" &&
            c.model != "closed-form")
            throw UsageError("model must be exact | first-order | second-order | closed-form");
        if (!(c.t_end > 0.0)) throw UsageError("t-end must be > 0");
    } else if (command == "scan-s") {
        if (static_cast<bool>(c.sweep_u0) == static_cast<bool>(c.sweep_omega))
            throw UsageError("scan-s sweeps exactly one of u0 or omega (value min:max:step)");
        if (c.sweep_eps_over_omega || c.sweep_u0_over_omega)
            throw UsageError("scan-s sweeps only u0 or omega");
        if (!(c.tau > 0.0)) throw UsageError("tau must be > 0");
    } else if (command == "scan-rho2") {
        if (c.sweep_u0 || c.sweep_omega) throw UsageError("scan-rho2 axes are u0-over-omega and eps-over-omega");
        if (!(c.sweep_eps_over_omega->lo >= 0.0)) throw UsageError("eps-over-omega must be >= 0");
    } else if (command == "floquet-sweep" || command == "analytic-compare") {
        if (c.sweep_u0 || c.sweep_omega || c.sweep_u0_over_omega)
            throw UsageError(command + " sweeps eps-over-omega only");
        if (!(c.sweep_eps_over_omega->lo >= 0.0)) throw UsageError("eps-over-omega must be >= 0");
    } else if (command == "find-crossings") {
        if (any_sweep) throw UsageError("find-crossings takes scalar u0-over-omega plus range/grid");
        if (!seen.count("u0_over_omega")) throw UsageError("find-crossings requires u0-over-omega");
        if (!(c.crossing_range.hi > c.crossing_range.lo) || !(c.crossing_range.lo >= 0.0))
            throw UsageError("range must satisfy 0 <= min < max");
        if (!(c.grid > 0.0 && c.grid <= 0.01)) throw UsageError("grid must lie in (0, 0.01]");
    }
    return c;
}

}  // namespace

RunConfig parse_config_text(const std::string& text) {
    const std::vector<KV> kvs = parse_kv_lines(text);
    std::string command;
    for (const KV& kv : kvs) {
        if (normalize_key(kv.key) == "command") command = kv.value;
    }
    if (command.empty()) throw UsageError("config must name a command");
    return build_config(command, kvs);
}

RunConfig parse_command_line(const std::vector<std::string>& args) {
    if (args.empty()) throw UsageError("no command given\n" + usage_text());

    std::string command;
    std::size_t i = 0;
    if (args[0].rfind("--", 0) != 0) {
        command = args[0];
        i = 1;
    }

    std::vector<KV> file_kvs, flag_kvs;
    for (; i < args.size(); ++i) {
        const std::string& tok = args[i];
        if (tok.rfind("--", 0) != 0) throw UsageError("expected a --flag, got '" + tok + "'");
        const std::string key = tok.substr(2);
        const std::string norm = normalize_key(key);
        if (norm == "help") throw UsageError(usage_text());

        std::string value;
        const bool boolean_key = (norm == "analytic" || norm == "serial");
        if (i + 1 < args.size() && args[i + 1].rfind("--", 0) != 0) {
            value = args[++i];
        } else if (boolean_key) {
            value = "true";
        } else {
            throw UsageError("missing value for --" + key);
        }

        if (norm == "config") {
            std::ifstream in(value);
            if (!in) throw IoError("cannot read config file '" + value + "'");
            std::stringstream ss;
            ss << in.rdbuf();
            const auto kvs = parse_kv_lines(ss.str());
            file_kvs.insert(file_kvs.end(), kvs.begin(), kvs.end());
        } else {
            flag_kvs.push_back({key, value});
        }
    }

    if (command.empty()) {
        for (const KV& kv : file_kvs)
            if (normalize_key(kv.key) == "command") command = kv.value;
        if (command.empty()) throw UsageError("no command given\n" + usage_text());
    }

    // file values first so explicit flags override them
    std::vector<KV> merged = std::move(file_kvs);
    merged.insert(merged.end(), flag_kvs.begin(), flag_kvs.end());
    return build_config(command, merged);
}

namespace {

std::string range_text(const Range& r, bool with_step) {
    std::string s = format_full(r.lo) + ":" + format_full(r.hi);
    if (with_step) s += ":" + format_full(r.step);
    return s;
}

}  // namespace

std::string emit_config(const RunConfig& c) {
    std::vector<std::pair<std::string, std::string>> kv;
    kv.emplace_back("command", c.command);
    kv.emplace_back("analytic", c.analytic ? "true" : "false");
    kv.emplace_back("eps", format_full(c.eps));
    if (c.sweep_eps_over_omega) kv.emplace_back("eps_over_omega", range_text(*c.sweep_eps_over_omega, true));
    kv.emplace_back("grid", format_full(c.grid));
    kv.emplace_back("initial", fock_label(c.initial_state));
    kv.emplace_back("j", format_full(c.J));
    kv.emplace_back("model", c.model);
    kv.emplace_back("omega", c.sweep_omega ? range_text(*c.sweep_omega, true) : format_full(c.omega));
    kv.emplace_back("output", c.output);
    kv.emplace_back("range", range_text(c.crossing_range, false));
    kv.emplace_back("serial", c.serial ? "true" : "false");
    kv.emplace_back("t_end", format_full(c.t_end));
    kv.emplace_back("tau", format_full(c.tau));
    kv.emplace_back("tol", format_full(c.tol));
    kv.emplace_back("u0", c.sweep_u0 ? range_text(*c.sweep_u0, true) : format_full(c.U0));
    kv.emplace_back("u0_over_omega", c.sweep_u0_over_omega
                                         ? range_text(*c.sweep_u0_over_omega, true)
                                         : format_full(c.u0_over_omega));
    std::string out;
    for (const auto& [k, v] : kv) out += k + "=" + v + "\n";
    return out;
}

namespace {

ordered_json config_json(const RunConfig& c) {
    ordered_json j = ordered_json::object();
    for (const KV& kv : parse_kv_lines(emit_config(c))) j[kv.key] = kv.value;
    return j;
}

ordered_json statuses_json(const ScanResult& r) {
    int ok = 0, skipped = 0, failed = 0;
    ordered_json failures = ordered_json::array();
    for (int i = 0; i < r.points(); ++i) {
        switch (r.status[static_cast<std::size_t>(i)]) {
            case PointStatus::ok: ++ok; break;
            case PointStatus::skipped_resonance: ++skipped; break;
            case PointStatus::failed:
                ++failed;
                if (failures.size() < 20)
                    failures.push_back({{"index", i}, {"message", r.message[static_cast<std::size_t>(i)]}});
                break;
        }
    }
    ordered_json j;
    j["ok"] = ok;
    j["skipped-resonance"] = skipped;
    j["failed"] = failed;
    if (!failures.empty()) j["failures"] = failures;
    return j;
}

void write_outputs(const std::string& base, const std::string* csv, const ordered_json& summary) {
    if (csv) write_text_file(base + ".csv", *csv);
    write_text_file(base + ".json", summary.dump(2) + "\n");
}

ModelParams params_of(const RunConfig& c) { return ModelParams{c.J, c.U0, c.eps, c.omega}; }

Trajectory closed_form_trajectory(const ModelParams& p, int initial, double t_end) {
    const TunnelingCoefficients coeffs = rho_coefficients(p);
    Trajectory traj;
    traj.model = ModelKind::closed_form;
    traj.time = sample_grid(t_end, p.omega);
    traj.prob.resize(traj.time.size());
    for (std::size_t i = 0; i < traj.time.size(); ++i) {
        const double t = traj.time[i];
        std::array<double, 6> row{};
        if (initial == 1) {
            const auto pr = analytic_paired_probabilities(coeffs, t);
            row = {pr.p1, pr.p2, pr.p3, 0.0, 0.0, 0.0};
        } else if (initial == 4) {
            const auto un = analytic_unpaired_probabilities(coeffs, t);
            row = {0.0, 0.0, 0.0, un.p4, un.p5, un.p6};
        } else if (initial == 3) {
            const auto ex = analytic_cdt_exchange(coeffs, p, t);
            row = {0.0, 0.0, 0.0, ex.p4, 0.0, ex.p6};
        } else {
            throw UsageError("closed-form model supports initial 020, 101 or 110");
        }
        traj.prob[i] = row;
        double sum = 0.0;
        for (double v : row) sum += v;
        traj.max_norm_error = std::max(traj.max_norm_error, std::abs(sum - 1.0));
    }
    return traj;
}

void run_simulate(const RunConfig& c, const std::string& base) {
    const ModelParams p = params_of(c);
    const StateVector c0 = fock_state(c.initial_state);

    Trajectory traj;
    if (c.model == "exact") {
        traj = integrate_exact(p, c0, c.t_end, c.tol);
    } else if (c.model == "first-order") {
        traj = integrate_first_order(p, c0, c.t_end, c.tol);
    } else if (c.model == "second-order") {
        traj = integrate_second_order(p, rho_coefficients(p), c0, c.t_end, c.tol);
    } else {
        traj = closed_form_trajectory(p, c.initial_state, c.t_end);
    }

    const std::string csv = trajectory_csv(traj);
    ordered_json summary;
    summary["config"] = config_json(c);
    ordered_json results;
    results["samples"] = traj.time.size();
    results["max_norm_error"] = traj.max_norm_error;
    ordered_json final = ordered_json::array();
    for (double v : traj.prob.back()) final.push_back(v);
    results["final_probabilities"] = final;
    summary["results"] = results;
    summary["statuses"] = {{"ok", 1}};
    summary["version"] = kVersion;
    write_outputs(base, &csv, summary);
}

void run_scan_s(const RunConfig& c, const std::string& base) {
    ScanSpec spec;
    spec.base = params_of(c);
    spec.initial_state = c.initial_state;
    spec.tau = c.tau;
    spec.tol = c.tol;
    spec.parallel = !c.serial;
    if (c.sweep_u0) {
        spec.quantity = ScanQuantity::s_vs_u0;
        spec.axes = {{"u0", c.sweep_u0->lo, c.sweep_u0->hi, c.sweep_u0->step}};
    } else {
        spec.quantity = ScanQuantity::s_vs_omega;
        spec.axes = {{"omega", c.sweep_omega->lo, c.sweep_omega->hi, c.sweep_omega->step}};
    }

    const ScanResult res = scan_S(spec);
    const std::string csv = scan_csv(res);

    double smin = 2.0, smax = -1.0, at_min = 0.0, at_max = 0.0;
    ordered_json minima = ordered_json::array();
    for (int i = 0; i < res.points(); ++i) {
        if (res.status[static_cast<std::size_t>(i)] != PointStatus::ok) continue;
        const double s = res.values[static_cast<std::size_t>(i)][0];
        const double x = res.coords[static_cast<std::size_t>(i)][0];
        if (s < smin) smin = s, at_min = x;
        if (s > smax) smax = s, at_max = x;
    }
    for (int i = 1; i + 1 < res.points(); ++i) {
        const double s = res.values[static_cast<std::size_t>(i)][0];
        if (std::isnan(s)) continue;
        const double prev = res.values[static_cast<std::size_t>(i - 1)][0];
        const double next = res.values[static_cast<std::size_t>(i + 1)][0];
        if (!std::isnan(prev) && !std::isnan(next) && s < prev && s <= next && s < 0.99)
            minima.push_back(res.coords[static_cast<std::size_t>(i)][0]);
    }

    ordered_json summary;
    summary["config"] = config_json(c);
    ordered_json results;
    results["points"] = res.points();
    results["S_min"] = {{"value", smin}, {"at", at_min}};
    results["S_max"] = {{"value", smax}, {"at", at_max}};
    results["minima"] = minima;
    summary["results"] = results;
    summary["statuses"] = statuses_json(res);
    summary["version"] = kVersion;
    write_outputs(base, &csv, summary);
}

void run_scan_rho2(const RunConfig& c, const std::string& base) {
    ScanSpec spec;
    spec.quantity = ScanQuantity::rho2_surface;
    spec.base = params_of(c);
    spec.parallel = !c.serial;
    spec.axes = {
        {"u0_over_omega", c.sweep_u0_over_omega->lo, c.sweep_u0_over_omega->hi, c.sweep_u0_over_omega->step},
        {"eps_over_omega", c.sweep_eps_over_omega->lo, c.sweep_eps_over_omega->hi, c.sweep_eps_over_omega->step}};

    const ScanResult res = scan_rho2_surface(spec);
    const std::string csv = scan_csv(res);

    double rmin = 0.0, rmax = 0.0;
    std::array<double, 2> at_min{}, at_max{};
    bool first = true;
    int sign_changes = 0;
    const int cols = spec.axes[1].count();
    for (int i = 0; i < res.points(); ++i) {
        if (res.status[static_cast<std::size_t>(i)] != PointStatus::ok) continue;
        const double v = res.values[static_cast<std::size_t>(i)][0];
        if (first || v < rmin) rmin = v, at_min = res.coords[static_cast<std::size_t>(i)];
        if (first || v > rmax) rmax = v, at_max = res.coords[static_cast<std::size_t>(i)];
        first = false;
        if (i % cols != 0 && res.status[static_cast<std::size_t>(i - 1)] == PointStatus::ok) {
            const double prev = res.values[static_cast<std::size_t>(i - 1)][0];
            if (prev * v < 0.0) ++sign_changes;
        }
    }

    ordered_json summary;
    summary["config"] = config_json(c);
    ordered_json results;
    results["points"] = res.points();
    results["rho2_min"] = {{"value", rmin}, {"u0_over_omega", at_min[0]}, {"eps_over_omega", at_min[1]}};
    results["rho2_max"] = {{"value", rmax}, {"u0_over_omega", at_max[0]}, {"eps_over_omega", at_max[1]}};
    results["sign_changes"] = sign_changes;
    summary["results"] = results;
    summary["statuses"] = statuses_json(res);
    summary["version"] = kVersion;
    write_outputs(base, &csv, summary);
}

void run_quasienergy_sweep(const RunConfig& c, const std::string& base, bool force_analytic) {
    ScanSpec spec;
    spec.quantity = ScanQuantity::quasienergy_sweep;
    spec.base = params_of(c);
    spec.with_analytic = force_analytic || c.analytic;
    spec.parallel = !c.serial;
    spec.axes = {{"eps_over_omega", c.sweep_eps_over_omega->lo, c.sweep_eps_over_omega->hi,
                  c.sweep_eps_over_omega->step}};

    const ScanResult res = scan_quasienergies(spec);
    const std::string csv = scan_csv(res);

    double spread_min = 0.0, spread_max = 0.0, at_smin = 0.0, at_smax = 0.0;
    bool first = true;
    double max_unpaired_dev = 0.0, max_paired_dev = 0.0;
    bool any_dev = false;
    std::vector<double> spreads(static_cast<std::size_t>(res.points()),
                                std::numeric_limits<double>::quiet_NaN());
    for (int i = 0; i < res.points(); ++i) {
        const auto idx = static_cast<std::size_t>(i);
        if (res.status[idx] != PointStatus::ok) continue;
        const auto& row = res.values[idx];
        const double spread = row[5] - row[0];
        spreads[idx] = spread;
        if (first || spread < spread_min) spread_min = spread, at_smin = res.coords[idx][0];
        if (first || spread > spread_max) spread_max = spread, at_smax = res.coords[idx][0];
        first = false;

        if (spec.with_analytic && row.size() >= 12 && !std::isnan(row[6])) {
            std::vector<double> unpaired, paired;
            for (int k = 0; k < 6; ++k) {
                if (res.labels[idx][static_cast<std::size_t>(k)] == BandLabel::unpaired)
                    unpaired.push_back(row[static_cast<std::size_t>(k)]);
                else if (res.labels[idx][static_cast<std::size_t>(k)] == BandLabel::paired)
                    paired.push_back(row[static_cast<std::size_t>(k)]);
            }
            if (unpaired.size() == 3 && paired.size() == 3) {
                any_dev = true;
                for (int k = 0; k < 3; ++k) {
                    max_unpaired_dev = std::max(
                        max_unpaired_dev,
                        std::abs(unpaired[static_cast<std::size_t>(k)] - row[static_cast<std::size_t>(6 + k)]));
                    max_paired_dev = std::max(
                        max_paired_dev,
                        std::abs(paired[static_cast<std::size_t>(k)] - row[static_cast<std::size_t>(9 + k)]));
                }
            }
        }
    }

    // band-collapse candidates: local minima of the total spread below 0.05
    ordered_json collapses = ordered_json::array();
    for (int i = 1; i + 1 < res.points(); ++i) {
        const auto idx = static_cast<std::size_t>(i);
        if (std::isnan(spreads[idx]) || std::isnan(spreads[idx - 1]) || std::isnan(spreads[idx + 1]))
            continue;
        if (spreads[idx] < spreads[idx - 1] && spreads[idx] <= spreads[idx + 1] &&
            spreads[idx] < 0.05)
            collapses.push_back(res.coords[idx][0]);
    }

    ordered_json summary;
    summary["config"] = config_json(c);
    ordered_json results;
    results["points"] = res.points();
    results["spread_min"] = {{"value", spread_min}, {"eps_over_omega", at_smin}};
    results["spread_max"] = {{"value", spread_max}, {"eps_over_omega", at_smax}};
    results["collapse_points"] = collapses;
    if (spec.with_analytic && any_dev) {
        results["max_unpaired_deviation"] = max_unpaired_dev;
        results["max_paired_deviation"] = max_paired_dev;
    }
    summary["results"] = results;
    summary["statuses"] = statuses_json(res);
    summary["version"] = kVersion;
    write_outputs(base, &csv, summary);
}

void run_find_crossings(const RunConfig& c, const std::string& base) {
    const std::vector<double> roots =
        find_rho2_zeros(c.u0_over_omega, c.crossing_range.lo, c.crossing_range.hi, c.grid);
    ordered_json summary;
    summary["config"] = config_json(c);
    ordered_json rj = ordered_json::array();
    for (double r : roots) rj.push_back(r);
    summary["results"] = {{"roots", rj}};
    summary["statuses"] = {{"ok", 1}};
    summary["version"] = kVersion;
    write_outputs(base, nullptr, summary);
}

}  // namespace

std::string usage_text() {
    return
        "usage: trimer <command> [--key value ...] [--config FILE]\n"
        "\n"
        "commands:\n"
        "  simulate          trajectory of one model; keys: --J --U0 --eps|--eps-over-omega\n"
        "                    --omega --initial 200|020|002|110|101|011 --model exact|first-order|\n"
        "                    second-order|closed-form --t-end --tol --output\n"
        "  scan-s            time-averaged paired probability; sweep one of --u0 min:max:step\n"
        "                    or --omega min:max:step; keys: --J --eps|--eps-over-omega --tau --tol\n"
        "  scan-rho2         rho2 over (--u0-over-omega min:max:step, --eps-over-omega min:max:step)\n"
        "  floquet-sweep     quasienergies vs --eps-over-omega min:max:step at fixed --J --U0 --omega;\n"
        "                    --analytic adds the closed-form sextuple\n"
        "  analytic-compare  floquet-sweep with the closed-form columns always on\n"
        "  find-crossings    zeros of rho2 for --u0-over-omega R on --range lo:hi with --grid step\n"
        "\n"
        "Config files hold the same keys, one key=value per line; explicit flags win.\n"
        "Outputs <output>.csv and <output>.json (default base name: the command).\n";
}

void run(const RunConfig& c) {
    const std::string base = c.output.empty() ? c.command : c.output;
    if (c.command == "simulate")
        run_simulate(c, base);
    else if (c.command == "scan-s")
        run_scan_s(c, base);
    else if (c.command == "scan-rho2")
        run_scan_rho2(c, base);
    else if (c.command == "floquet-sweep")
        run_quasienergy_sweep(c, base, false);
    else if (c.command == "analytic-compare")
        run_quasienergy_sweep(c, base, true);
    else if (c.command == "find-crossings")
        run_find_crossings(c, base);
    else
        throw UsageError("unknown command '" + c.command + "'");
}

int cli_main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (!args.empty() && (args[0] == "--help" || args[0] == "-h" || args[0] == "help")) {
        std::cout << usage_text();
        return 0;
    }
    try {
        run(parse_command_line(args));
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ResonanceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace trimer
