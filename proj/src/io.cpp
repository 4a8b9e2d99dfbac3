#include "trimer/io.hpp"

#include <cstdio>
#include <fstream>

#include "trimer/errors.hpp"

namespace trimer {

std::string format_sci(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.11e", v);
    return buf;
}

std::string format_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw IoError("short write to '" + path + "'");
}

std::string trajectory_csv(const Trajectory& traj) {
    std::string out = "t,P1,P2,P3,P4,P5,P6\n";
    for (std::size_t i = 0; i < traj.time.size(); ++i) {
        out += format_sci(traj.time[i]);
        for (int j = 0; j < 6; ++j) {
            out += ',';
            out += format_sci(traj.prob[i][static_cast<std::size_t>(j)]);
        }
        out += '\n';
    }
    return out;
}

namespace {

std::string fixed_params_line(const ScanResult& r) {
    const ModelParams& p = r.spec.base;
    switch (r.spec.quantity) {
        case ScanQuantity::rho2_surface:
            return "";
        case ScanQuantity::s_vs_u0:
            return "J=" + format_sci(p.J) + ",eps=" + format_sci(p.eps) +
                   ",omega=" + format_sci(p.omega) + ",initial=" + fock_label(r.spec.initial_state);
        case ScanQuantity::s_vs_omega:
            return "J=" + format_sci(p.J) + ",eps=" + format_sci(p.eps) +
                   ",U0=" + format_sci(p.U0) + ",initial=" + fock_label(r.spec.initial_state);
        default:
            return "J=" + format_sci(p.J) + ",U0=" + format_sci(p.U0) +
                   ",omega=" + format_sci(p.omega);
    }
}

std::string header_row(const ScanResult& r) {
    switch (r.spec.quantity) {
        case ScanQuantity::rho2_surface:
            return "u0_over_omega,eps_over_omega,rho2,status";
        case ScanQuantity::s_vs_u0:
            return "u0,S,status";
        case ScanQuantity::s_vs_omega:
            return "omega,S,status";
        default: {
            std::string h = "eps_over_omega,E1,E2,E3,E4,E5,E6,label1,label2,label3,label4,label5,label6";
            if (r.spec.with_analytic) h += ",Eu1,Eu2,Eu3,Ep1,Ep2,Ep3";
            h += ",status";
            return h;
        }
    }
}

}  // namespace

std::string scan_csv(const ScanResult& r) {
    std::string out = "# quantity=";
    out += scan_quantity_name(r.spec.quantity);
    out += "; fixed=" + fixed_params_line(r);
    out += "; tau=" + format_sci(r.spec.tau) + "\n";
    out += header_row(r);
    out += '\n';

    for (int i = 0; i < r.points(); ++i) {
        const auto idx = static_cast<std::size_t>(i);
        out += format_sci(r.coords[idx][0]);
        if (r.spec.quantity == ScanQuantity::rho2_surface) out += ',' + format_sci(r.coords[idx][1]);

        if (r.spec.quantity == ScanQuantity::quasienergy_sweep) {
            // numeric sextuple, band labels, then any analytic columns
            for (int k = 0; k < 6; ++k) out += ',' + format_sci(r.values[idx][static_cast<std::size_t>(k)]);
            for (int k = 0; k < 6; ++k) {
                out += ',';
                out += band_label_name(r.labels[idx][static_cast<std::size_t>(k)]);
            }
            for (std::size_t k = 6; k < r.values[idx].size(); ++k)
                out += ',' + format_sci(r.values[idx][k]);
        } else {
            for (double v : r.values[idx]) out += ',' + format_sci(v);
        }
        out += ',';
        out += point_status_name(r.status[idx]);
        out += '\n';
    }
    return out;
}

}  // namespace trimer
