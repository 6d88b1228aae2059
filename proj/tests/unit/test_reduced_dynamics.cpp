#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "shapesphere/errors.hpp"
#include "shapesphere/examples.hpp"
#include "shapesphere/reduced_dynamics.hpp"

using namespace shapesphere;
using std::numbers::pi;

namespace {

struct Henon {
    MassDistribution md = make_mass_distribution({1.0, 1.0, 1.0});
    PlanarConfig c0 = make_barycentric(henon2_config(), md);
    HopfProjection p0 = hopf_project(c0, md);
    double omega = kinematic_summary(c0, md).omega;
    double h = kinematic_summary(c0, md).energy_h;
    PotentialSource U = PotentialSource::newtonian(md);
};

double max_moduli_gap(const std::vector<ModuliState>& a, const std::vector<ModuliState>& b) {
    double e = 0.0;
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        e = std::max({e, std::abs(a[i].rho - b[i].rho), std::abs(a[i].phi - b[i].phi),
                      std::abs(oracle::angle_diff(a[i].theta, b[i].theta))});
    }
    return e;
}

}  // namespace

TEST_CASE("energy integral of the moduli state matches the full-space energy") {
    const Henon H;
    // The kinetic and potential parts are each about 85 here.
    CHECK(std::abs(energy_level(H.p0.state(), H.omega, H.U) - H.h) < 1e-12 * 85.0);
}

TEST_CASE("Coriolis terms are exactly the difference to the naive reduction") {
    const Henon H;
    const ModuliState s = H.p0.state();
    const EnergyMomentum em{H.h, H.omega};
    const ModuliAccel a = reduced_rhs(s, em, H.U);
    const ModuliAccel f = fake_rhs(s, H.h, H.U);
    const double sp = std::sin(s.phi), r2 = s.rho * s.rho;
    CHECK(a.rho_ddot == doctest::Approx(f.rho_ddot));
    CHECK(a.phi_ddot - f.phi_ddot == doctest::Approx(2 * H.omega * sp * s.theta_dot / r2));
    CHECK(a.theta_ddot - f.theta_ddot == doctest::Approx(-2 * H.omega * s.phi_dot / (r2 * sp)));

    const ModuliAccel z = reduced_rhs(s, {H.h, 0.0}, H.U);
    const ModuliAccel fz = fake_rhs(s, H.h, H.U);
    CHECK(z.phi_ddot == fz.phi_ddot);
    CHECK(z.theta_ddot == fz.theta_ddot);
    CHECK(z.rho_ddot == fz.rho_ddot);
}

TEST_CASE("energy integral is constant along the reduced flow") {
    const Henon H;
    const ReducedTrajectory tr = integrate_reduced(H.p0.state(), H.omega, H.U, {0.0, 1.0, 0.05});
    for (const auto& s : tr.states) {
        // Time derivative of the energy integral along the vector field, from
        // its analytic gradient. The field is evaluated on the level of s itself.
        const ModuliAccel a = reduced_rhs(s, {energy_level(s, H.omega, H.U), H.omega}, H.U);
        const PotentialJet j = H.U({s.phi, s.theta});
        const double sp = std::sin(s.phi), cp = std::cos(s.phi), r = s.rho;
        const double speed2 = s.phi_dot * s.phi_dot + sp * sp * s.theta_dot * s.theta_dot;
        const double e_rho = r / 4 * speed2 - H.omega * H.omega / (r * r * r) + j.u / (r * r);
        const double e_phi = r * r / 4 * sp * cp * s.theta_dot * s.theta_dot - j.u_phi / r;
        const double e_theta = -j.u_theta / r;
        const double terms[] = {e_rho * s.rho_dot, e_phi * s.phi_dot, e_theta * s.theta_dot,
                                s.rho_dot * a.rho_ddot, r * r / 4 * s.phi_dot * a.phi_ddot,
                                r * r * sp * sp / 4 * s.theta_dot * a.theta_ddot};
        double rate = 0.0, scale = 0.0;
        for (double x : terms) {
            rate += x;
            scale += std::abs(x);
        }
        CHECK(std::abs(rate) < 1e-12 * scale);
        CHECK(std::abs(energy_level(s, H.omega, H.U) - tr.em.h) < 1e-8 * std::abs(tr.em.h));
    }
}

TEST_CASE("Henon 2 reduced curve matches the projected full motion") {
    const Henon H;
    const TimeSpan span{0.0, 0.5, 0.01};
    const FullTrajectory full = integrate_full(H.c0, H.md, span);
    std::vector<HopfProjection> proj;
    for (const auto& c : full.samples) proj.push_back(hopf_project(c, H.md));
    make_continuous(proj);
    std::vector<ModuliState> oracle_states;
    for (const auto& p : proj) oracle_states.push_back(p.state());
    const ReducedTrajectory tr = integrate_reduced(H.p0.state(), H.omega, H.U, span);
    CHECK(max_moduli_gap(tr.states, oracle_states) < 1e-6);

    // Rotation angle and lift reproduce the configurations up to a fixed rotation.
    const auto alpha = reconstruct_rotation(tr, H.omega, proj[0].alpha);
    double worst = 0.0;
    for (std::size_t i = 0; i < tr.states.size(); ++i) {
        const auto pos = hopf_lift(alpha[i], {tr.states[i].rho, {tr.states[i].phi, tr.states[i].theta}}, H.md);
        for (int b = 0; b < 3; ++b) worst = std::max(worst, (pos[b] - full.samples[i].positions[b]).norm());
    }
    CHECK(worst < 1e-5);
}

TEST_CASE("dropping the Coriolis terms changes the Henon 2 motion") {
    const Henon H;
    const TimeSpan span{0.0, 1.0, 0.01};
    const ReducedTrajectory good = integrate_reduced(H.p0.state(), H.omega, H.U, span);
    const ReducedTrajectory fake =
        integrate_reduced(H.p0.state(), H.omega, H.U, span, {}, ReducedModel::fake, true);
    CHECK(max_moduli_gap(good.states, fake.states) > 1e-3);
}

TEST_CASE("time reversal retraces the reduced trajectory with omega reversed") {
    const Henon H;
    const ReducedTrajectory fwd = integrate_reduced(H.p0.state(), H.omega, H.U, {0.0, 0.5, 0.0});
    ModuliState end = fwd.states.back();
    end.rho_dot = -end.rho_dot;
    end.phi_dot = -end.phi_dot;
    end.theta_dot = -end.theta_dot;
    const ReducedTrajectory back = integrate_reduced(end, -H.omega, H.U, {0.0, 0.5, 0.0});
    const ModuliState s = back.states.back(), s0 = H.p0.state();
    CHECK(s.rho == doctest::Approx(s0.rho).epsilon(1e-8));
    CHECK(s.phi == doctest::Approx(s0.phi).epsilon(1e-8));
    CHECK(std::abs(oracle::angle_diff(s.theta, s0.theta)) < 1e-8);
    CHECK(-s.phi_dot == doctest::Approx(s0.phi_dot).epsilon(1e-7));
}

TEST_CASE("isosceles meridian is invariant for zero momentum") {
    const MassDistribution md = make_mass_distribution({1.3, 1.0, 1.0});
    const PotentialSource U = PotentialSource::newtonian(md);
    // The half meridian through the Euler point, away from the binary collision.
    const ModuliState s0{1.0, 0.6, wrap_two_pi(md.theta_collision[0] + pi), 0.0, 0.3, 0.0};
    const ReducedTrajectory tr = integrate_reduced(s0, 0.0, U, {0.0, 0.5, 0.05});
    for (const auto& s : tr.states) {
        CHECK(std::abs(oracle::angle_diff(s.theta, s0.theta)) < 1e-12);
        CHECK(std::abs(s.theta_dot) < 1e-12);
    }
}

TEST_CASE("reduced integration stops at the chart pole with the last valid state") {
    const PotentialSource U = PotentialSource::zero();
    // Geodesic through the north pole.
    const ModuliState s0{1.0, 0.5, 0.0, 0.0, -1.0, 0.0};
    CHECK_THROWS_AS(integrate_reduced(s0, 0.0, U, {0.0, 2.0, 0.01}), IntegrationHalted);
    const ReducedTrajectory tr = integrate_reduced(s0, 0.0, U, {0.0, 2.0, 0.01}, {}, ReducedModel::newton, true);
    CHECK(tr.termination != Termination::completed);
    CHECK(std::abs(std::sin(tr.states.back().phi)) > kPoleTolerance);
    CHECK_THROWS_AS(integrate_reduced({1.0, 0.0, 0.0, 0.0, 0.0, 0.0}, 0.0, U, {}), ChartError);
    CHECK_THROWS_AS(integrate_reduced({0.0, 1.0, 0.0, 0.0, 0.0, 0.0}, 0.0, U, {}), DomainError);
}

TEST_CASE("rotation angle in closed form") {
    ReducedTrajectory tr;
    const double rho = 1.7, omega = 0.4;
    for (int i = 0; i <= 10; ++i) {
        tr.t.push_back(0.1 * i);
        tr.states.push_back({rho, pi / 2, 1.0, 0.0, 0.2, 0.0});
    }
    const auto a = reconstruct_rotation(tr, omega, 0.3);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == doctest::Approx(0.3 + omega * tr.t[i] / (rho * rho)));
    const auto z = reconstruct_rotation(tr, 0.0, 0.3);
    for (double v : z) CHECK(v == doctest::Approx(0.3));
}

TEST_CASE("scaling transform") {
    const Henon H;
    const EnergyMomentum em{H.h, H.omega};
    const ScaledData same = scaling_transform(H.p0.state(), em, 1.0);
    CHECK(same.state.rho == doctest::Approx(H.p0.state().rho));
    CHECK(same.em.h == doctest::Approx(H.h));
    CHECK_THROWS_AS(scaling_transform(H.p0.state(), em, 0.0), DomainError);

    for (double k : {2.0, 0.5, -1.0, -3.0}) {
        const ScaledData sd = scaling_transform(H.p0.state(), em, k);
        CHECK(sd.em.H() == doctest::Approx(em.H()).epsilon(1e-14));
        CHECK(sd.em.h == doctest::Approx(energy_level(sd.state, sd.em.omega, H.U)).epsilon(1e-10));
    }

    // gamma_k(t) = k^{-2/3} gamma(k t) on a common grid.
    const double k = 1.7;
    const ScaledData sd = scaling_transform(H.p0.state(), em, k);
    const ReducedTrajectory base = integrate_reduced(H.p0.state(), H.omega, H.U, {0.0, k * 0.3, k * 0.01});
    const ReducedTrajectory scaled = integrate_reduced(sd.state, sd.em.omega, H.U, {0.0, 0.3, 0.01});
    REQUIRE(base.states.size() == scaled.states.size());
    const double c = std::pow(k, -2.0 / 3.0);
    for (std::size_t i = 0; i < base.states.size(); ++i) {
        CHECK(std::abs(scaled.states[i].rho - c * base.states[i].rho) < 1e-8);
        CHECK(std::abs(scaled.states[i].phi - base.states[i].phi) < 1e-8);
        CHECK(std::abs(scaled.states[i].theta - base.states[i].theta) < 1e-8);
    }
}

TEST_CASE("constant potential source") {
    const PotentialSource U = PotentialSource::constant(2.5);
    const PotentialJet j = U({1.0, 2.0});
    CHECK(j.u == 2.5);
    CHECK(j.u_phi == 0.0);
    CHECK_FALSE(U.masses().has_value());
}
