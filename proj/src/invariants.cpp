#include "shapesphere/invariants.hpp"

#include <cmath>
#include <limits>

#include "shapesphere/errors.hpp"

namespace shapesphere {

ShapeJet shape_kinematics(const ModuliState& s) {
    const double sp = std::sin(s.phi);
    const double v = std::sqrt(s.phi_dot * s.phi_dot + sp * sp * s.theta_dot * s.theta_dot);
    if (!(v > 0.0)) throw CuspError("shape speed vanishes");
    ShapeJet jet;
    jet.point = {s.phi, s.theta};
    jet.v = v;
    jet.direction = {s.phi_dot / v, s.theta_dot / v};
    return jet;
}

double curvature_dynamical(double rho, double v, double w0, double omega) {
    if (!(v > 0.0)) throw CuspError("curvature undefined at a cusp");
    if (!(rho > 0.0)) throw DomainError("rho must be positive");
    return 4.0 * w0 / (rho * rho * rho * v * v) - 2.0 * omega / (rho * rho * v);
}

double curvature_temporal(const ModuliState& s, double phi_ddot, double theta_ddot) {
    const double sp = std::sin(s.phi), cp = std::cos(s.phi);
    const double v2 = s.phi_dot * s.phi_dot + sp * sp * s.theta_dot * s.theta_dot;
    const double v = std::sqrt(v2);
    if (!(v > 0.0)) throw CuspError("curvature undefined at a cusp");
    return (cp * s.theta_dot * (v2 + s.phi_dot * s.phi_dot) +
            sp * (s.phi_dot * theta_ddot - s.theta_dot * phi_ddot)) /
           (v2 * v);
}

double siegel(double w, double K) {
    if (K == 0.0) {
        SingularityKind kind;
        kind.geodesic = true;
        throw SingularPointError("Siegel function undefined for vanishing curvature", kind);
    }
    return w / K;
}

SixTupleResult basic_six_tuple(const ModuliState& s, double omega, const PotentialSource& U,
                               W1Form form) {
    const double sp = std::sin(s.phi), cp = std::cos(s.phi);
    if (!(std::abs(sp) > kPoleTolerance)) throw ChartError("six-tuple at a chart pole");

    SingularityKind kind;
    const double v = std::sqrt(s.phi_dot * s.phi_dot + sp * sp * s.theta_dot * s.theta_dot);
    if (!(v > 0.0)) {
        kind.cusp = true;
        throw SingularPointError("cusp: shape speed vanishes", kind);
    }

    const PotentialJet jet = U({s.phi, s.theta});
    const double rho = s.rho, rho2 = rho * rho, rho3 = rho2 * rho;
    const double jp = s.phi_dot / v, jt = s.theta_dot / v;
    const double f0 = std::sin(2.0 * s.phi), g0 = sp * sp;

    const FrameDerivatives fd = frame_transform({s.phi, s.theta}, {jp, jt}, jet);
    const double u0 = jet.u, u1 = fd.u_tau, w0 = fd.u_nu;

    const double term_w = 4.0 * w0 / (rho3 * v * v);
    const double term_omega = 2.0 * omega / (rho2 * v);
    const double K0 = term_w - term_omega;

    const double grad = std::hypot(jet.u_phi, jet.u_theta / sp);
    kind.tangent_to_gradient = !(std::abs(w0) > 1e-9 * grad);
    kind.geodesic = !(std::abs(K0) > 1e-9 * (std::abs(term_w) + std::abs(term_omega)));
    if (kind.tangent_to_gradient || kind.geodesic) {
        throw SingularPointError(kind.tangent_to_gradient && kind.geodesic
                                     ? "singular point: U_nu and K* vanish"
                                 : kind.tangent_to_gradient ? "singular point: U_nu vanishes"
                                                            : "singular point: K* vanishes",
                                 kind);
    }

    const double v1 = 2.0 * (-rho2 * v * s.rho_dot + 2.0 * u1) / rho3;
    const double c4 = 4.0 / (rho3 * v * v);
    const double jp_prime = 0.5 * f0 * jt * jt + 2.0 * omega * sp * jt / (rho2 * v) +
                            c4 * (jet.u_phi - u1 * jp);
    const double jt_prime = -(f0 / g0) * jp * jt - 2.0 * omega * sp * jp / (g0 * rho2 * v) +
                            c4 * (jet.u_theta / g0 - u1 * jt);

    const double K0_intrinsic = jt * (1.0 + jp * jp) * cp + (jp * jt_prime - jt * jp_prime) * sp;

    const double J = -f0 * jt * (w0 / sp + 0.5 * jet.u_phi * jt) +
                     (jet.u_phiphi * jp * jp + 2.0 * jet.u_phitheta * jp * jt +
                      jet.u_thetatheta * jt * jt);
    const double tau1 = w0 * K0 + J;

    const double coriolis_part = 2.0 * u1 / (rho2 * v) * (omega - 2.0 * w0 / (rho * v));
    const double mixed = (jet.u_phi * cp + jet.u_thetatheta / sp - jet.u_phiphi * sp) * jp * jt;
    double w1 = 0.0;
    if (form == W1Form::derived) {
        w1 = coriolis_part + jet.u_theta * cp * (jt * jt - jp * jp / g0) +
             jet.u_phitheta * (jp * jp / sp - sp * jt * jt) + mixed;
    } else {
        w1 = coriolis_part + jet.u_theta * cp * (jp * jp + jt * jt) +
             (jet.u_thetatheta / sp - jet.u_phitheta * sp) * jt * jt + mixed;
    }
    const double w1_unreduced = jet.u_theta / sp * jp_prime - jet.u_phi * sp * jt_prime -
                                jet.u_theta * cp / g0 * jp * jp +
                                jet.u_phitheta * (jp * jp / sp - sp * jt * jt) +
                                (jet.u_thetatheta / sp - jet.u_phiphi * sp - jet.u_phi * cp) * jp * jt;

    const double K1 = 2.0 * K0 *
                      (2.0 * K0 * u1 * rho2 * v - w1 * rho2 * v - w0 * rho * s.rho_dot +
                       2.0 * omega * u1) /
                      (rho2 * v * (omega * rho * v - 2.0 * w0));

    SixTupleResult r;
    r.six = {u0, u1, w0, w1, K0, K1};
    r.siegel = {w0 / K0, (K0 * w1 - K1 * w0) / (K0 * K0)};
    r.jet.point = {s.phi, s.theta};
    r.jet.v = v;
    r.jet.direction = {jp, jt};
    r.jet.v1 = v1;
    r.jet.j_phi_prime = jp_prime;
    r.jet.j_theta_prime = jt_prime;
    r.tau1 = tau1;
    r.K0_intrinsic = K0_intrinsic;
    r.w1_unreduced = w1_unreduced;
    return r;
}

EnergyMomentum energy_momentum_from_invariants(const BasicTriple& t, const BasicSixTuple& six) {
    if (!(t.rho0 > 0.0) || !(t.v0 > 0.0)) throw DomainError("triple must have rho0 > 0 and v0 > 0");
    const double r = t.rho0, v = t.v0;
    EnergyMomentum em;
    em.omega = 2.0 * six.w0 / (r * v) - 0.5 * six.K0 * r * r * v;
    em.h = 0.5 * t.rho1 * t.rho1 + r * r * v * v / 8.0 + 2.0 * six.w0 * six.w0 / (r * r * r * r * v * v) -
           (six.w0 * six.K0 + six.u0) / r + six.K0 * six.K0 * r * r * v * v / 8.0;
    return em;
}

InvariantSample sample_invariants(const ModuliState& s, const EnergyMomentum& em,
                                  const PotentialSource& U) {
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    InvariantSample out;
    const PotentialJet jet = U({s.phi, s.theta});
    const double sp = std::sin(s.phi);
    out.u_star = jet.u;
    out.v = std::sqrt(s.phi_dot * s.phi_dot + sp * sp * s.theta_dot * s.theta_dot);
    if (!(out.v > 0.0)) {
        out.u_tau = out.u_nu = out.K_star = out.siegel = out.omega_check = nan;
        return out;
    }
    const DirectionElement d{s.phi_dot / out.v, s.theta_dot / out.v};
    const FrameDerivatives fd = frame_transform({s.phi, s.theta}, d, jet);
    out.u_tau = fd.u_tau;
    out.u_nu = fd.u_nu;
    const ModuliAccel a = reduced_rhs(s, em, U);
    out.K_star = curvature_temporal(s, a.phi_ddot, a.theta_ddot);
    out.siegel = out.K_star != 0.0 ? out.u_nu / out.K_star : nan;
    out.omega_check = 2.0 * out.u_nu / (s.rho * out.v) - 0.5 * out.K_star * s.rho * s.rho * out.v;
    return out;
}

}  // namespace shapesphere
