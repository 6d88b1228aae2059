#pragma once

#include "shapesphere/moduli.hpp"
#include "shapesphere/reduced_dynamics.hpp"
#include "shapesphere/shape_geometry.hpp"

namespace shapesphere {

/// First-order geometry of a shape curve at a point: speed, unit direction and,
/// when computed with dynamics, the speed coefficient v1 and the arc-length
/// derivatives of the direction.
struct ShapeJet {
    ShapePoint point;
    double v = 0.0;
    DirectionElement direction;
    double v1 = 0.0;
    double j_phi_prime = 0.0;
    double j_theta_prime = 0.0;
};

struct BasicSixTuple {
    double u0 = 0.0;
    double u1 = 0.0;
    double w0 = 0.0;
    double w1 = 0.0;
    double K0 = 0.0;
    double K1 = 0.0;
};

struct SiegelValue {
    double s0 = 0.0;
    double s1 = 0.0;
};

/// (rho0, rho1, v0): hyperradius, its rate and the shape speed at the base point.
struct BasicTriple {
    double rho0 = 0.0;
    double rho1 = 0.0;
    double v0 = 0.0;
};

/// Which closed form of w1 to use. `alternate` is a second expression that does
/// not match the arc-length derivative of U_nu; it is kept only for comparison.
enum class W1Form { derived, alternate };

/// Throws CuspError when v = 0.
ShapeJet shape_kinematics(const ModuliState& s);

double curvature_dynamical(double rho, double v, double w0, double omega);
double curvature_temporal(const ModuliState& s, double phi_ddot, double theta_ddot);

double siegel(double w, double K);

struct SixTupleResult {
    BasicSixTuple six;
    SiegelValue siegel;
    ShapeJet jet;
    double tau1 = 0.0;          // second arc-length coefficient of U_tau
    double K0_intrinsic = 0.0;  // K0 from the direction derivatives
    double w1_unreduced = 0.0;  // w1 from the direction derivatives
};

/// Basic 6-tuple at the current point of the moduli curve through s.
/// Throws SingularPointError if v, U_nu or K* vanishes there.
SixTupleResult basic_six_tuple(const ModuliState& s, double omega, const PotentialSource& U,
                               W1Form form = W1Form::derived);

EnergyMomentum energy_momentum_from_invariants(const BasicTriple& triple, const BasicSixTuple& six);

/// Per-sample diagnostics along a trajectory.
struct InvariantSample {
    double v = 0.0;
    double u_star = 0.0;
    double u_tau = 0.0;
    double u_nu = 0.0;
    double K_star = 0.0;
    double siegel = 0.0;
    double omega_check = 0.0;
};

/// Evaluates the sample at s; quantities undefined at a cusp are NaN.
InvariantSample sample_invariants(const ModuliState& s, const EnergyMomentum& em,
                                  const PotentialSource& U);

}  // namespace shapesphere
