#pragma once

#include <array>
#include <vector>

#include <Eigen/Core>

#include "shapesphere/moduli.hpp"
#include "shapesphere/ode.hpp"
#include "shapesphere/shape_geometry.hpp"

namespace shapesphere {

/// Three planar bodies with positions and velocities.
struct PlanarConfig {
    std::array<Eigen::Vector2d, 3> positions{Eigen::Vector2d::Zero(), Eigen::Vector2d::Zero(),
                                             Eigen::Vector2d::Zero()};
    std::array<Eigen::Vector2d, 3> velocities{Eigen::Vector2d::Zero(), Eigen::Vector2d::Zero(),
                                              Eigen::Vector2d::Zero()};
};

struct KinematicSummary {
    double inertia_I = 0.0;
    double kinetic_T = 0.0;
    double potential_U = 0.0;
    double omega = 0.0;
    double rho = 0.0;
    double energy_h = 0.0;
};

struct ModuliPoint {
    double rho = 0.0;
    ShapePoint shape;
};

/// Moduli coordinates of a configuration together with the rotation angle.
struct HopfProjection {
    ModuliPoint point;
    double rho_dot = 0.0;
    double phi_dot = 0.0;
    double theta_dot = 0.0;
    double alpha = 0.0;
    double alpha_dot = 0.0;

    ModuliState state() const {
        return {point.rho, point.shape.phi, point.shape.theta, rho_dot, phi_dot, theta_dot};
    }
};

/// Jacobi vectors as the columns of a 2x2 matrix: x1 joins the (2,3) barycenter
/// to body 1 and x2 joins body 2 to body 3, scaled so that |X|_F^2 = I.
Eigen::Matrix2d jacobi_matrix(const std::array<Eigen::Vector2d, 3>& a, const MassDistribution& md);
std::array<Eigen::Vector2d, 3> positions_from_jacobi(const Eigen::Matrix2d& x,
                                                     const MassDistribution& md);

/// Shifts positions and velocities to the barycentric frame.
PlanarConfig make_barycentric(const PlanarConfig& c, const MassDistribution& md);

/// Throws DomainError unless the configuration is barycentric (within 1e-12 rho)
/// and not a triple collision.
void validate_config(const PlanarConfig& c, const MassDistribution& md);

KinematicSummary kinematic_summary(const PlanarConfig& c, const MassDistribution& md);

/// Accelerations under mutual Newtonian attraction. Throws CollisionError
/// (index = body opposite the colliding pair) when two bodies coincide.
std::array<Eigen::Vector2d, 3> newton_rhs(const PlanarConfig& c, const MassDistribution& md);

struct TimeSpan {
    double t0 = 0.0;
    double t1 = 1.0;
    double stride = 0.01;   // <= 0 records only the end points
};

std::vector<double> make_time_grid(const TimeSpan& span);

struct FullTrajectory {
    std::vector<double> t;
    std::vector<PlanarConfig> samples;
    Termination termination = Termination::completed;
    std::string reason;
};

/// Integrates Newton's equations. Throws IntegrationHalted if the requested span
/// cannot be completed, unless allow_partial is set.
FullTrajectory integrate_full(const PlanarConfig& c0, const MassDistribution& md,
                              const TimeSpan& span, const OdeOptions& opt = {},
                              bool allow_partial = false);

/// Throws ChartError near the poles of the (phi, theta) chart.
HopfProjection hopf_project(const PlanarConfig& c, const MassDistribution& md);

/// Removes the 2*pi jumps of theta (with the matching pi shift of alpha) and the
/// 2*pi jumps of alpha so that sampled projections vary continuously.
void make_continuous(std::vector<HopfProjection>& samples);

/// Barycentric positions whose Jacobi matrix is P(alpha) R(rho, phi) Q(theta).
std::array<Eigen::Vector2d, 3> hopf_lift(double alpha, const ModuliPoint& m,
                                         const MassDistribution& md);

/// Full configuration (positions and velocities) from moduli data, the rotation
/// angle and the angular momentum.
PlanarConfig hopf_lift_state(double alpha, const ModuliState& s, double omega,
                             const MassDistribution& md);

}  // namespace shapesphere
