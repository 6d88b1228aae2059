#pragma once

// Independent reference computations used by the unit and acceptance tests.

#include <array>
#include <cmath>
#include <vector>

#include <Eigen/Core>

#include <random>

#include "shapesphere/invariants.hpp"
#include "shapesphere/kinematics.hpp"
#include "shapesphere/random_cases.hpp"
#include "shapesphere/reduced_dynamics.hpp"

namespace oracle {

using namespace shapesphere;

inline double rel_err(double a, double b, double floor = 0.0) {
    const double scale = std::max({std::abs(a), std::abs(b), floor});
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

/// Smallest signed difference of two angles.
inline double angle_diff(double a, double b) {
    return std::remainder(a - b, 2.0 * M_PI);
}

/// Unit vector of a shape point in the embedding n = (cos phi, sin phi cos theta, sin phi sin theta).
Eigen::Vector3d shape_vector(double phi, double theta);

/// Geodesic curvature of the radial projection of a space curve w(t),
/// |w|^3 w.(w' x w'') / |w x w'|^3.
double projected_curvature(const Eigen::Vector3d& w, const Eigen::Vector3d& wd,
                           const Eigen::Vector3d& wdd);

/// Geodesic curvature of the shape curve of a moduli state, from the
/// embedded curve and the supplied angular accelerations.
double embedded_curvature(const ModuliState& s, double phi_ddot, double theta_ddot);

/// Geodesic curvature of the shape curve of a planar motion, from the
/// quadratic Hopf invariants of the Jacobi matrix and Newton's accelerations.
double configuration_curvature(const PlanarConfig& c, const MassDistribution& md);

/// Local fit estimates of the six-tuple and Siegel coefficients: the motion is
/// integrated a short arc length either side of s and U*, U_nu, K* and their
/// ratio are fitted by polynomials in arc length. A positive `arc` fixes the
/// half-width of the window; otherwise it is chosen from a coarse first pass.
struct FitEstimate {
    BasicSixTuple six;
    SiegelValue siegel;
    double u2 = 0.0;  // second arc-length derivative of U*
};
FitEstimate quadrature_fit(const ModuliState& s, double omega, const PotentialSource& U,
                           int half_samples = 4, double arc = 0.0);

/// Random cases whose motion stays regular on [0, t1]: every pair separation
/// remains above `min_separation` times the initial size. Close binary
/// encounters are rejected because no fixed-tolerance integrator resolves them
/// to the accuracy the comparison tests demand.
std::vector<RandomCase> regular_cases(std::uint64_t seed, int count, double t1,
                                      bool zero_momentum = false, double min_separation = 0.05);

/// Reference explicit RK4 with a fixed step, used as a cross-check of the adaptive solver.
std::vector<std::array<double, 12>> rk4_full(const PlanarConfig& c0, const MassDistribution& md,
                                             double t1, int steps);

}  // namespace oracle
