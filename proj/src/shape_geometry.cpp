#include "shapesphere/shape_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "shapesphere/errors.hpp"

namespace shapesphere {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

double wrap_two_pi(double angle) {
    double a = std::fmod(angle, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    if (a >= kTwoPi) a = 0.0;
    return a;
}

MassDistribution make_mass_distribution(const std::array<double, 3>& masses) {
    MassDistribution md;
    for (int i = 0; i < 3; ++i) {
        if (!(masses[i] > 0.0) || !std::isfinite(masses[i])) {
            throw DomainError("mass " + std::to_string(i + 1) + " must be positive and finite");
        }
    }
    md.masses = masses;
    md.mbar = masses[0] + masses[1] + masses[2];
    for (int i = 0; i < 3; ++i) md.mu[i] = masses[i] / md.mbar;

    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3;
        const int k = (i + 2) % 3;
        const double c = (md.mu[j] * md.mu[k] - md.mu[i]) / ((1.0 - md.mu[j]) * (1.0 - md.mu[k]));
        md.beta[i] = std::acos(std::clamp(c, -1.0, 1.0));
    }
    md.theta_collision = {0.0, md.beta[2], -md.beta[1]};
    return md;
}

double collision_gap(const ShapePoint& p, double theta_i) {
    // Half-angle form, free of cancellation near the collision point.
    const double a = std::sin(0.25 * std::numbers::pi - 0.5 * p.phi);
    const double b = std::sin(0.5 * (p.theta - theta_i));
    return 2.0 * (a * a + std::sin(p.phi) * b * b);
}

PotentialJet potential_jet(const ShapePoint& p, const MassDistribution& md) {
    const double sp = std::sin(p.phi);
    const double cp = std::cos(p.phi);
    const double scale = std::pow(md.mbar, 2.5);

    PotentialJet jet;
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3;
        const int k = (i + 2) % 3;
        const double mu_star = 0.5 * (1.0 - md.mu[i]);
        const double c = scale * std::pow(md.mu[j] * md.mu[k], 1.5) / std::sqrt(mu_star);

        const double delta = p.theta - md.theta_collision[i];
        const double cd = std::cos(delta);
        const double sd = std::sin(delta);
        const double d = collision_gap(p, md.theta_collision[i]);
        if (!(d > kCollisionTolerance)) {
            throw CollisionError("binary collision at shape longitude index " + std::to_string(i), i);
        }

        const double d_phi = -cp * cd;
        const double d_theta = sp * sd;
        const double d_phiphi = sp * cd;
        const double d_phitheta = cp * sd;
        const double d_thetatheta = sp * cd;

        const double r = 1.0 / std::sqrt(d);   // D^{-1/2}
        const double r3 = r * r * r;           // D^{-3/2}
        const double r5 = r3 * r * r;          // D^{-5/2}

        jet.u += c * r;
        jet.u_phi += -0.5 * c * r3 * d_phi;
        jet.u_theta += -0.5 * c * r3 * d_theta;
        jet.u_phiphi += 0.75 * c * r5 * d_phi * d_phi - 0.5 * c * r3 * d_phiphi;
        jet.u_phitheta += 0.75 * c * r5 * d_phi * d_theta - 0.5 * c * r3 * d_phitheta;
        jet.u_thetatheta += 0.75 * c * r5 * d_theta * d_theta - 0.5 * c * r3 * d_thetatheta;
    }
    return jet;
}

FrameDerivatives frame_transform(const ShapePoint& p, const DirectionElement& d,
                                 const PotentialJet& jet) {
    const double sp = std::sin(p.phi);
    if (!(std::abs(sp) > kPoleTolerance)) throw ChartError("frame transform at a pole of the chart");
    const double g = jet.u_theta / sp;
    return {d.j_phi * jet.u_phi + d.j_theta * sp * g, -d.j_theta * sp * jet.u_phi + d.j_phi * g};
}

}  // namespace shapesphere
