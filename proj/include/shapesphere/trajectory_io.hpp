#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "shapesphere/reduced_dynamics.hpp"

namespace shapesphere {

/// One CSV row. Field order matches `csv_header()`.
struct TrajectoryRow {
    double t = 0.0;
    double rho = 0.0, phi = 0.0, theta = 0.0;
    double rho_dot = 0.0, phi_dot = 0.0, theta_dot = 0.0;
    double alpha = 0.0;
    double s = 0.0;
    double v = 0.0;
    double u_star = 0.0, u_tau = 0.0, u_nu = 0.0;
    double K_star = 0.0;
    double siegel = 0.0;
    double h_drift = 0.0;
    double omega_check = 0.0;

    static constexpr std::size_t kColumns = 17;
    std::array<double, kColumns> values() const;
    static TrajectoryRow from_values(const std::array<double, kColumns>& v);
};

const std::string& csv_header();

/// Rows for a sampled moduli curve. `alpha` must have one entry per sample; the
/// arc length s is accumulated with the trapezoid rule and h_drift is measured
/// against em.h.
std::vector<TrajectoryRow> build_rows(const std::vector<double>& t,
                                      const std::vector<ModuliState>& states,
                                      const std::vector<double>& alpha, const EnergyMomentum& em,
                                      const PotentialSource& U);

/// Throws DegenerateInputError for an empty trajectory and IoError on write failure.
void write_csv(const std::vector<TrajectoryRow>& rows, const std::string& path);
void write_csv(const std::vector<TrajectoryRow>& rows, std::ostream& os);

/// Throws IoError with the path on open or parse failure.
std::vector<TrajectoryRow> read_csv(const std::string& path);

}  // namespace shapesphere
