#include "shapesphere/trajectory_io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "shapesphere/errors.hpp"
#include "shapesphere/invariants.hpp"

namespace shapesphere {

std::array<double, TrajectoryRow::kColumns> TrajectoryRow::values() const {
    return {t, rho, phi, theta, rho_dot, phi_dot, theta_dot, alpha, s,
            v, u_star, u_tau, u_nu, K_star, siegel, h_drift, omega_check};
}

TrajectoryRow TrajectoryRow::from_values(const std::array<double, kColumns>& x) {
    TrajectoryRow r;
    r.t = x[0];
    r.rho = x[1];
    r.phi = x[2];
    r.theta = x[3];
    r.rho_dot = x[4];
    r.phi_dot = x[5];
    r.theta_dot = x[6];
    r.alpha = x[7];
    r.s = x[8];
    r.v = x[9];
    r.u_star = x[10];
    r.u_tau = x[11];
    r.u_nu = x[12];
    r.K_star = x[13];
    r.siegel = x[14];
    r.h_drift = x[15];
    r.omega_check = x[16];
    return r;
}

const std::string& csv_header() {
    static const std::string header =
        "t,rho,phi,theta,rho_dot,phi_dot,theta_dot,alpha,s,v,u_star,u_tau,u_nu,K_star,siegel,"
        "h_drift,omega_check";
    return header;
}

std::vector<TrajectoryRow> build_rows(const std::vector<double>& t,
                                      const std::vector<ModuliState>& states,
                                      const std::vector<double>& alpha, const EnergyMomentum& em,
                                      const PotentialSource& U) {
    if (t.size() != states.size() || t.size() != alpha.size()) {
        throw DegenerateInputError("trajectory columns have different lengths");
    }
    std::vector<TrajectoryRow> rows;
    rows.reserve(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        const ModuliState& s = states[i];
        const InvariantSample inv = sample_invariants(s, em, U);
        TrajectoryRow r;
        r.t = t[i];
        r.rho = s.rho;
        r.phi = s.phi;
        r.theta = s.theta;
        r.rho_dot = s.rho_dot;
        r.phi_dot = s.phi_dot;
        r.theta_dot = s.theta_dot;
        r.alpha = alpha[i];
        r.s = i == 0 ? 0.0 : rows.back().s + 0.5 * (t[i] - t[i - 1]) * (rows.back().v + inv.v);
        r.v = inv.v;
        r.u_star = inv.u_star;
        r.u_tau = inv.u_tau;
        r.u_nu = inv.u_nu;
        r.K_star = inv.K_star;
        r.siegel = inv.siegel;
        r.h_drift = energy_level(s, em.omega, U) - em.h;
        r.omega_check = inv.omega_check;
        rows.push_back(r);
    }
    return rows;
}

void write_csv(const std::vector<TrajectoryRow>& rows, std::ostream& os) {
    if (rows.empty()) throw DegenerateInputError("refusing to export an empty trajectory");
    os << csv_header() << '\n';
    char buf[32];
    for (const auto& r : rows) {
        const auto v = r.values();
        for (std::size_t k = 0; k < v.size(); ++k) {
            std::snprintf(buf, sizeof buf, "%.17g", v[k]);
            if (k) os << ',';
            os << buf;
        }
        os << '\n';
    }
}

void write_csv(const std::vector<TrajectoryRow>& rows, const std::string& path) {
    if (rows.empty()) throw DegenerateInputError("refusing to export an empty trajectory");
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    write_csv(rows, out);
    out.flush();
    if (!out) throw IoError("write failed for " + path);
}

std::vector<TrajectoryRow> read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::string line;
    if (!std::getline(in, line) || line != csv_header()) {
        throw IoError(path + ": missing or unexpected CSV header");
    }
    std::vector<TrajectoryRow> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::array<double, TrajectoryRow::kColumns> v{};
        std::size_t k = 0;
        const char* p = line.c_str();
        while (true) {
            if (k == v.size()) throw IoError(path + ":" + std::to_string(line_no) + ": too many fields");
            char* end = nullptr;
            errno = 0;
            v[k++] = std::strtod(p, &end);
            if (end == p) throw IoError(path + ":" + std::to_string(line_no) + ": bad number");
            if (*end == ',') {
                p = end + 1;
            } else if (*end == '\0' || *end == '\r') {
                break;
            } else {
                throw IoError(path + ":" + std::to_string(line_no) + ": bad field separator");
            }
        }
        if (k != v.size()) throw IoError(path + ":" + std::to_string(line_no) + ": too few fields");
        rows.push_back(TrajectoryRow::from_values(v));
    }
    return rows;
}

}  // namespace shapesphere
