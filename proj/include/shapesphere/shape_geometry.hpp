#pragma once

#include <array>

namespace shapesphere {

inline constexpr double kCollisionTolerance = 1e-12;
inline constexpr double kPoleTolerance = 1e-9;

struct MassDistribution {
    std::array<double, 3> masses{};
    std::array<double, 3> mu{};
    double mbar = 0.0;
    std::array<double, 3> theta_collision{};
    std::array<double, 3> beta{};
};

/// (phi, theta): colatitude and longitude on the shape sphere.
struct ShapePoint {
    double phi = 0.0;
    double theta = 0.0;
};

/// Unit tangent direction at a shape point: j_phi^2 + sin^2(phi) j_theta^2 = 1.
struct DirectionElement {
    double j_phi = 0.0;
    double j_theta = 0.0;
};

/// Value, gradient and Hessian of the shape potential in (phi, theta).
struct PotentialJet {
    double u = 0.0;
    double u_phi = 0.0;
    double u_theta = 0.0;
    double u_phiphi = 0.0;
    double u_phitheta = 0.0;
    double u_thetatheta = 0.0;
};

struct FrameDerivatives {
    double u_tau = 0.0;
    double u_nu = 0.0;
};

/// Throws DomainError unless every mass is positive and finite.
MassDistribution make_mass_distribution(const std::array<double, 3>& masses);

/// 1 - sin(phi) cos(theta - theta_i): vanishes exactly at the collision point theta_i.
double collision_gap(const ShapePoint& p, double theta_i);

/// Newtonian shape potential and its analytic first and second partials.
/// Throws CollisionError (index = collision longitude) within kCollisionTolerance
/// of a binary collision point.
PotentialJet potential_jet(const ShapePoint& p, const MassDistribution& md);

/// Tangential and normal derivatives of the potential along a direction.
/// Throws ChartError when sin(phi) < kPoleTolerance.
FrameDerivatives frame_transform(const ShapePoint& p, const DirectionElement& d,
                                 const PotentialJet& jet);

/// Wraps an angle into [0, 2*pi).
double wrap_two_pi(double angle);

}  // namespace shapesphere
