#include "shapesphere/reduced_dynamics.hpp"

#include <cmath>
#include <limits>

#include "shapesphere/errors.hpp"

namespace shapesphere {

namespace {

ModuliAccel gradient_part(const ModuliState& s, double h, const PotentialSource& U, double& sin_phi) {
    sin_phi = std::sin(s.phi);
    if (!(std::abs(sin_phi) > kPoleTolerance)) throw ChartError("reduced equations at a chart pole");
    if (!(s.rho > 0.0)) throw DomainError("reduced equations need rho > 0");
    const PotentialJet jet = U({s.phi, s.theta});
    const double rho = s.rho;
    const double rho3 = rho * rho * rho;
    const double cos_phi = std::cos(s.phi);

    ModuliAccel a;
    a.rho_ddot = -s.rho_dot * s.rho_dot / rho + (jet.u / rho + 2.0 * h) / rho;
    a.phi_ddot = -2.0 * s.rho_dot * s.phi_dot / rho +
                 0.5 * std::sin(2.0 * s.phi) * s.theta_dot * s.theta_dot + 4.0 * jet.u_phi / rho3;
    a.theta_ddot = -2.0 * s.rho_dot * s.theta_dot / rho -
                   2.0 * (cos_phi / sin_phi) * s.phi_dot * s.theta_dot +
                   4.0 * jet.u_theta / (rho3 * sin_phi * sin_phi);
    return a;
}

}  // namespace

PotentialSource PotentialSource::newtonian(const MassDistribution& md) {
    return PotentialSource([md](const ShapePoint& p) { return potential_jet(p, md); }, md);
}

PotentialSource PotentialSource::constant(double value) {
    return PotentialSource([value](const ShapePoint&) {
        PotentialJet jet;
        jet.u = value;
        return jet;
    });
}

ModuliAccel reduced_rhs(const ModuliState& s, const EnergyMomentum& em, const PotentialSource& U) {
    double sin_phi = 0.0;
    ModuliAccel a = gradient_part(s, em.h, U, sin_phi);
    const double rho2 = s.rho * s.rho;
    a.phi_ddot += 2.0 * em.omega * sin_phi * s.theta_dot / rho2;
    a.theta_ddot -= 2.0 * em.omega * s.phi_dot / (rho2 * sin_phi);
    return a;
}

ModuliAccel fake_rhs(const ModuliState& s, double h, const PotentialSource& U) {
    double sin_phi = 0.0;
    return gradient_part(s, h, U, sin_phi);
}

double energy_level(const ModuliState& s, double omega, const PotentialSource& U) {
    const double u = U({s.phi, s.theta}).u;
    const double sp = std::sin(s.phi);
    const double rho2 = s.rho * s.rho;
    return 0.5 * s.rho_dot * s.rho_dot +
           rho2 / 8.0 * (s.phi_dot * s.phi_dot + sp * sp * s.theta_dot * s.theta_dot) +
           omega * omega / (2.0 * rho2) - u / s.rho;
}

ReducedTrajectory integrate_reduced(const ModuliState& s0, double omega, const PotentialSource& U,
                                    const TimeSpan& span, const OdeOptions& opt, ReducedModel model,
                                    bool allow_partial) {
    if (!(s0.rho > 0.0)) throw DomainError("initial rho must be positive");
    if (!(std::abs(std::sin(s0.phi)) > kPoleTolerance)) {
        throw ChartError("initial state at a chart pole");
    }
    if (!(opt.rtol > 0.0) || !(opt.atol > 0.0)) throw DomainError("tolerances must be positive");

    const EnergyMomentum em{energy_level(s0, omega, U), omega};

    // The seventh component accumulates the rotation angle.
    using State = StateVector<7>;
    auto to_state = [](const State& y) { return ModuliState{y[0], y[1], y[2], y[3], y[4], y[5]}; };
    auto rhs = [&](double, const State& y) -> State {
        const ModuliState s = to_state(y);
        try {
            const ModuliAccel a =
                model == ReducedModel::newton ? reduced_rhs(s, em, U) : fake_rhs(s, em.h, U);
            const double alpha_dot = omega / (y[0] * y[0]) + 0.5 * std::cos(y[1]) * y[5];
            return {y[3], y[4], y[5], a.rho_ddot, a.phi_ddot, a.theta_ddot, alpha_dot};
        } catch (const Error&) {
            // A trial stage left the domain; the NaN forces a smaller step.
            State bad;
            bad.fill(std::numeric_limits<double>::quiet_NaN());
            return bad;
        }
    };
    // A step can carry phi across a pole without landing near it; the sign of
    // sin(phi) catches that.
    const bool north = std::sin(s0.phi) > 0.0;
    auto guard = [&](double, const State& y) -> std::optional<Termination> {
        if (y[0] < 1e-8) return Termination::small_size;
        const double sp = std::sin(y[1]);
        if (std::abs(sp) < kPoleTolerance || (sp > 0.0) != north) return Termination::pole;
        if (const auto& md = U.masses()) {
            for (double th : md->theta_collision) {
                if (collision_gap({y[1], y[2]}, th) < kCollisionTolerance) return Termination::collision;
            }
        }
        return std::nullopt;
    };

    const State y0{s0.rho, s0.phi, s0.theta, s0.rho_dot, s0.phi_dot, s0.theta_dot, 0.0};
    const auto grid = make_time_grid(span);
    const auto sol = integrate_dopri5<7>(rhs, y0, grid, opt, guard);

    ReducedTrajectory out;
    out.em = em;
    out.t = sol.t;
    out.states.reserve(sol.y.size());
    for (const auto& y : sol.y) out.states.push_back(to_state(y));
    out.alpha_increment.reserve(sol.y.size());
    for (const auto& y : sol.y) out.alpha_increment.push_back(y[6]);
    out.termination = sol.termination;
    out.reason = sol.reason;
    if (sol.termination != Termination::completed && !allow_partial) {
        throw IntegrationHalted("reduced integration halted: " + sol.reason, out.t.back());
    }
    return out;
}

std::vector<double> reconstruct_rotation(const ReducedTrajectory& traj, double omega, double alpha0) {
    std::vector<double> alpha;
    alpha.reserve(traj.t.size());
    if (traj.t.empty()) return alpha;
    auto rate = [omega](const ModuliState& s) {
        return omega / (s.rho * s.rho) + 0.5 * std::cos(s.phi) * s.theta_dot;
    };
    if (traj.alpha_increment.size() == traj.t.size() && omega == traj.em.omega) {
        for (double a : traj.alpha_increment) alpha.push_back(alpha0 + a);
        return alpha;
    }
    alpha.push_back(alpha0);
    for (std::size_t i = 1; i < traj.t.size(); ++i) {
        const double dt = traj.t[i] - traj.t[i - 1];
        alpha.push_back(alpha.back() + 0.5 * dt * (rate(traj.states[i - 1]) + rate(traj.states[i])));
    }
    return alpha;
}

ScaledData scaling_transform(const ModuliState& s, const EnergyMomentum& em, double k) {
    if (k == 0.0 || !std::isfinite(k)) throw DomainError("scaling factor must be finite and nonzero");
    const double c = std::cbrt(k);
    ScaledData out;
    out.state = {s.rho / (c * c), s.phi, s.theta, c * s.rho_dot, k * s.phi_dot, k * s.theta_dot};
    out.em = {c * c * em.h, em.omega / c};
    return out;
}

}  // namespace shapesphere
