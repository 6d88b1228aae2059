#include "shapesphere/kinematics.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "shapesphere/errors.hpp"

namespace shapesphere {

namespace {

constexpr double kPi = std::numbers::pi;

double cross(const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
    return a.x() * b.y() - a.y() * b.x();
}

struct JacobiScales {
    double s1;   // x1 = s1 * (a1 - c23)
    double s2;   // x2 = s2 * (a3 - a2)
};

JacobiScales jacobi_scales(const MassDistribution& md) {
    const auto& m = md.masses;
    const double m23 = m[1] + m[2];
    return {std::sqrt(m[0] * m23 / md.mbar), std::sqrt(m[1] * m[2] / m23)};
}

Eigen::Matrix2d rotation(double a) {
    Eigen::Matrix2d p;
    p << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
    return p;
}

Eigen::Matrix2d q_matrix(double theta) {
    const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
    Eigen::Matrix2d q;
    q << c, s, -s, c;
    return q;
}

Eigen::Matrix2d r_matrix(double rho, double phi) {
    const double psi = 0.5 * phi + 0.25 * kPi;
    Eigen::Matrix2d r = Eigen::Matrix2d::Zero();
    r(0, 0) = rho * std::sin(psi);
    r(1, 1) = rho * std::cos(psi);
    return r;
}

// Pairwise accelerations without collision checks; used inside the integrator,
// where a collision shows up as a rejected non-finite step or a guard stop.
std::array<Eigen::Vector2d, 3> raw_accelerations(const std::array<Eigen::Vector2d, 3>& a,
                                                 const MassDistribution& md) {
    std::array<Eigen::Vector2d, 3> acc{Eigen::Vector2d::Zero(), Eigen::Vector2d::Zero(),
                                       Eigen::Vector2d::Zero()};
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            const Eigen::Vector2d d = a[j] - a[i];
            const double r2 = d.squaredNorm();
            const double inv_r3 = 1.0 / (r2 * std::sqrt(r2));
            acc[i] += md.masses[j] * inv_r3 * d;
            acc[j] -= md.masses[i] * inv_r3 * d;
        }
    }
    return acc;
}

double min_separation(const std::array<Eigen::Vector2d, 3>& a) {
    return std::min({(a[0] - a[1]).norm(), (a[1] - a[2]).norm(), (a[0] - a[2]).norm()});
}

}  // namespace

Eigen::Matrix2d jacobi_matrix(const std::array<Eigen::Vector2d, 3>& a, const MassDistribution& md) {
    const auto& m = md.masses;
    const auto [s1, s2] = jacobi_scales(md);
    const Eigen::Vector2d c23 = (m[1] * a[1] + m[2] * a[2]) / (m[1] + m[2]);
    Eigen::Matrix2d x;
    x.col(0) = s1 * (a[0] - c23);
    x.col(1) = s2 * (a[2] - a[1]);
    return x;
}

std::array<Eigen::Vector2d, 3> positions_from_jacobi(const Eigen::Matrix2d& x,
                                                     const MassDistribution& md) {
    const auto& m = md.masses;
    const auto [s1, s2] = jacobi_scales(md);
    const double m23 = m[1] + m[2];
    const Eigen::Vector2d r = x.col(0) / s1;   // a1 - c23
    const Eigen::Vector2d q = x.col(1) / s2;   // a3 - a2
    const Eigen::Vector2d a1 = (m23 / md.mbar) * r;
    const Eigen::Vector2d c23 = -(m[0] / md.mbar) * r;
    return {a1, c23 - (m[2] / m23) * q, c23 + (m[1] / m23) * q};
}

PlanarConfig make_barycentric(const PlanarConfig& c, const MassDistribution& md) {
    Eigen::Vector2d cp = Eigen::Vector2d::Zero(), cv = Eigen::Vector2d::Zero();
    for (int i = 0; i < 3; ++i) {
        cp += md.masses[i] * c.positions[i];
        cv += md.masses[i] * c.velocities[i];
    }
    cp /= md.mbar;
    cv /= md.mbar;
    PlanarConfig out = c;
    for (int i = 0; i < 3; ++i) {
        out.positions[i] -= cp;
        out.velocities[i] -= cv;
    }
    return out;
}

void validate_config(const PlanarConfig& c, const MassDistribution& md) {
    Eigen::Vector2d cp = Eigen::Vector2d::Zero(), cv = Eigen::Vector2d::Zero();
    double inertia = 0.0;
    for (int i = 0; i < 3; ++i) {
        cp += md.masses[i] * c.positions[i];
        cv += md.masses[i] * c.velocities[i];
        inertia += md.masses[i] * c.positions[i].squaredNorm();
    }
    const double rho = std::sqrt(inertia);
    if (!(rho > 0.0)) throw DomainError("configuration is a triple collision");
    if (cp.norm() > 1e-12 * rho) throw DomainError("positions are not barycentric");
    if (cv.norm() > 1e-12 * rho) throw DomainError("velocities are not barycentric");
}

KinematicSummary kinematic_summary(const PlanarConfig& c, const MassDistribution& md) {
    KinematicSummary k;
    for (int i = 0; i < 3; ++i) {
        const double m = md.masses[i];
        k.inertia_I += m * c.positions[i].squaredNorm();
        k.kinetic_T += 0.5 * m * c.velocities[i].squaredNorm();
        k.omega += m * cross(c.positions[i], c.velocities[i]);
        for (int j = i + 1; j < 3; ++j) {
            k.potential_U += m * md.masses[j] / (c.positions[i] - c.positions[j]).norm();
        }
    }
    k.rho = std::sqrt(k.inertia_I);
    k.energy_h = k.kinetic_T - k.potential_U;
    return k;
}

std::array<Eigen::Vector2d, 3> newton_rhs(const PlanarConfig& c, const MassDistribution& md) {
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3, k = (i + 2) % 3;
        if ((c.positions[j] - c.positions[k]).norm() == 0.0) {
            throw CollisionError("bodies " + std::to_string(j + 1) + " and " +
                                     std::to_string(k + 1) + " coincide",
                                 i);
        }
    }
    return raw_accelerations(c.positions, md);
}

std::vector<double> make_time_grid(const TimeSpan& span) {
    return make_time_grid(span.t0, span.t1, span.stride);
}

FullTrajectory integrate_full(const PlanarConfig& c0, const MassDistribution& md,
                              const TimeSpan& span, const OdeOptions& opt, bool allow_partial) {
    validate_config(c0, md);
    if (!(opt.rtol > 0.0) || !(opt.atol > 0.0)) throw DomainError("tolerances must be positive");

    using State = StateVector<12>;
    auto pack = [](const PlanarConfig& c) {
        State y{};
        for (int i = 0; i < 3; ++i) {
            y[2 * i] = c.positions[i].x();
            y[2 * i + 1] = c.positions[i].y();
            y[6 + 2 * i] = c.velocities[i].x();
            y[6 + 2 * i + 1] = c.velocities[i].y();
        }
        return y;
    };
    auto unpack = [](const State& y) {
        PlanarConfig c;
        for (int i = 0; i < 3; ++i) {
            c.positions[i] = {y[2 * i], y[2 * i + 1]};
            c.velocities[i] = {y[6 + 2 * i], y[6 + 2 * i + 1]};
        }
        return c;
    };
    auto rhs = [&](double, const State& y) {
        std::array<Eigen::Vector2d, 3> a{Eigen::Vector2d(y[0], y[1]), Eigen::Vector2d(y[2], y[3]),
                                         Eigen::Vector2d(y[4], y[5])};
        const auto acc = raw_accelerations(a, md);
        State dy{};
        for (int i = 0; i < 6; ++i) dy[i] = y[6 + i];
        for (int i = 0; i < 3; ++i) {
            dy[6 + 2 * i] = acc[i].x();
            dy[6 + 2 * i + 1] = acc[i].y();
        }
        return dy;
    };
    const double rho0 = kinematic_summary(c0, md).rho;
    auto guard = [&](double, const State& y) -> std::optional<Termination> {
        std::array<Eigen::Vector2d, 3> a{Eigen::Vector2d(y[0], y[1]), Eigen::Vector2d(y[2], y[3]),
                                         Eigen::Vector2d(y[4], y[5])};
        if (min_separation(a) < 1e-10 * rho0) return Termination::collision;
        return std::nullopt;
    };

    const auto grid = make_time_grid(span);
    const auto sol = integrate_dopri5<12>(rhs, pack(c0), grid, opt, guard);

    FullTrajectory out;
    out.t = sol.t;
    out.samples.reserve(sol.y.size());
    for (const auto& y : sol.y) out.samples.push_back(unpack(y));
    out.termination = sol.termination;
    out.reason = sol.reason;
    if (sol.termination != Termination::completed && !allow_partial) {
        throw IntegrationHalted("full integration halted: " + sol.reason, out.t.back());
    }
    return out;
}

HopfProjection hopf_project(const PlanarConfig& c, const MassDistribution& md) {
    const Eigen::Matrix2d x = jacobi_matrix(c.positions, md);
    const Eigen::Matrix2d xd = jacobi_matrix(c.velocities, md);
    const Eigen::Vector2d x1 = x.col(0), x2 = x.col(1);
    const Eigen::Vector2d v1 = xd.col(0), v2 = xd.col(1);

    const double rho2 = x.squaredNorm();
    const double rho = std::sqrt(rho2);
    if (!(rho > 0.0)) throw DomainError("hopf projection of a triple collision");

    const Eigen::Vector3d w(2.0 * x.determinant(), x1.squaredNorm() - x2.squaredNorm(),
                            2.0 * x1.dot(x2));
    const Eigen::Vector3d wd(2.0 * (cross(v1, x2) + cross(x1, v2)),
                             2.0 * (x1.dot(v1) - x2.dot(v2)), 2.0 * (v1.dot(x2) + x1.dot(v2)));

    const double sin_phi = std::hypot(w.y(), w.z()) / rho2;
    if (!(sin_phi > kPoleTolerance)) throw ChartError("configuration at a pole of the shape chart");

    HopfProjection hp;
    hp.point.rho = rho;
    hp.point.shape.phi = std::atan2(std::hypot(w.y(), w.z()), w.x());
    hp.point.shape.theta = wrap_two_pi(std::atan2(w.z(), w.y()));
    const double phi = hp.point.shape.phi, theta = hp.point.shape.theta;

    hp.rho_dot = (x.array() * xd.array()).sum() / rho;
    const Eigen::Vector3d n = w / rho2;
    const Eigen::Vector3d nd = (wd - 2.0 * rho * hp.rho_dot * n) / rho2;
    const Eigen::Vector3d e_phi(-std::sin(phi), std::cos(phi) * std::cos(theta),
                                std::cos(phi) * std::sin(theta));
    const Eigen::Vector3d e_theta(0.0, -std::sin(theta), std::cos(theta));
    hp.phi_dot = nd.dot(e_phi);
    hp.theta_dot = nd.dot(e_theta) / std::sin(phi);

    // X Q^T = P R, and the first diagonal entry of R is always positive.
    const Eigen::Matrix2d pr = x * q_matrix(theta).transpose();
    hp.alpha = std::atan2(pr(1, 0), pr(0, 0));

    const double omega = cross(x1, v1) + cross(x2, v2);
    hp.alpha_dot = omega / rho2 + 0.5 * std::cos(phi) * hp.theta_dot;
    return hp;
}

void make_continuous(std::vector<HopfProjection>& samples) {
    for (std::size_t i = 1; i < samples.size(); ++i) {
        const HopfProjection& prev = samples[i - 1];
        HopfProjection& cur = samples[i];
        const double turns = std::round((prev.point.shape.theta - cur.point.shape.theta) / (2.0 * kPi));
        cur.point.shape.theta += 2.0 * kPi * turns;
        cur.alpha += kPi * turns;
        cur.alpha += 2.0 * kPi * std::round((prev.alpha - cur.alpha) / (2.0 * kPi));
    }
}

std::array<Eigen::Vector2d, 3> hopf_lift(double alpha, const ModuliPoint& m,
                                         const MassDistribution& md) {
    const Eigen::Matrix2d x = rotation(alpha) * r_matrix(m.rho, m.shape.phi) * q_matrix(m.shape.theta);
    return positions_from_jacobi(x, md);
}

PlanarConfig hopf_lift_state(double alpha, const ModuliState& s, double omega,
                             const MassDistribution& md) {
    const double alpha_dot = omega / (s.rho * s.rho) + 0.5 * std::cos(s.phi) * s.theta_dot;

    const Eigen::Matrix2d p = rotation(alpha);
    const Eigen::Matrix2d r = r_matrix(s.rho, s.phi);
    const Eigen::Matrix2d q = q_matrix(s.theta);

    Eigen::Matrix2d j;
    j << 0.0, -1.0, 1.0, 0.0;
    const Eigen::Matrix2d pd = alpha_dot * p * j;

    const double psi = 0.5 * s.phi + 0.25 * kPi;
    Eigen::Matrix2d rd = Eigen::Matrix2d::Zero();
    rd(0, 0) = s.rho_dot * std::sin(psi) + 0.5 * s.rho * s.phi_dot * std::cos(psi);
    rd(1, 1) = s.rho_dot * std::cos(psi) - 0.5 * s.rho * s.phi_dot * std::sin(psi);

    const double ch = std::cos(0.5 * s.theta), sh = std::sin(0.5 * s.theta);
    Eigen::Matrix2d qd;
    qd << -sh, ch, -ch, -sh;
    qd *= 0.5 * s.theta_dot;

    const Eigen::Matrix2d x = p * r * q;
    const Eigen::Matrix2d xd = pd * r * q + p * rd * q + p * r * qd;

    PlanarConfig c;
    c.positions = positions_from_jacobi(x, md);
    c.velocities = positions_from_jacobi(xd, md);
    return c;
}

}  // namespace shapesphere
