#include "shapesphere/reconstruction.hpp"

#include <algorithm>
#include <cmath>

#include "shapesphere/errors.hpp"
#include "shapesphere/polynomial.hpp"

namespace shapesphere {

namespace {

double sign(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

double relative(double residual, std::initializer_list<double> terms) {
    double scale = 0.0;
    for (double t : terms) scale = std::max(scale, std::abs(t));
    return scale > 0.0 ? std::abs(residual) / scale : std::abs(residual);
}

}  // namespace

SiegelValue siegel_from_six(const BasicSixTuple& six) {
    if (six.K0 == 0.0) {
        SingularityKind kind;
        kind.geodesic = true;
        throw SingularPointError("K0 vanishes", kind);
    }
    return {six.w0 / six.K0, (six.K0 * six.w1 - six.K1 * six.w0) / (six.K0 * six.K0)};
}

JInvariants j_invariants(const BasicSixTuple& six, const SiegelValue& sg) {
    SingularityKind kind;
    kind.tangent_to_gradient = six.w0 == 0.0 || sg.s0 == 0.0;
    kind.geodesic = six.K0 == 0.0;
    if (kind.tangent_to_gradient || kind.geodesic) {
        throw SingularPointError("J-invariants need nonzero w0, K0 and S0", kind);
    }
    JInvariants j;
    j.j1 = 2.0 * six.u0 - sg.s0;
    j.j2 = (2.0 * six.u1 - sg.s1) / sg.s0;
    j.j3 = 2.0 * six.u1 / six.w0;
    j.j4 = -six.K1 / (2.0 * six.K0 * six.w0);
    j.j5 = j.j3 + 4.0 * sg.s0 * j.j4;
    j.j6 = -2.0 * j.j4 / six.K0;
    j.a = 4.0 * sg.s0 * j.j2;
    j.b = j.j5 - 2.0 * j.j2 / six.K0;
    j.c = j.j6;
    j.d = 4.0 * sg.s0;
    j.e = -2.0 / six.K0;
    return j;
}

std::array<double, 7> PolyCoefficients::coefficients() const {
    std::array<double, 7> c{};
    for (int k = 0; k < 5; ++k) c[k + 2] += beta[k];
    for (int k = 0; k < 3; ++k) c[k] += H * alpha[k];
    return c;
}

PolyCoefficients build_polynomial(const JInvariants& j, double H) {
    PolyCoefficients p;
    p.H = H;
    const double a = j.a, b = j.b, c = j.c, d = j.d, e = j.e;
    p.alpha = {-2.0 * d * d, -4.0 * d * e, -2.0 * e * e};
    p.beta = {a * a - j.j1 * d, d * e / 4.0 + 2.0 * a * b - j.j1 * e,
              1.0 + 2.0 * a * c + b * b + e * e / 4.0, 2.0 * b * c, c * c};
    return p;
}

RootReport solve_roots(const PolyCoefficients& p) {
    const auto coeffs = p.coefficients();
    RootReport report;
    report.degree = effective_degree(coeffs);
    for (const auto& y : polynomial_roots(coeffs)) {
        RootInfo info;
        info.Y = y;
        info.real = std::abs(y.imag()) < 1e-9 * (1.0 + std::abs(y.real()));
        if (info.real) info.Y = {y.real(), 0.0};
        report.roots.push_back(info);
    }
    return report;
}

std::vector<AdmissibleSolution> admissible_solutions(RootReport& report, double omega,
                                                     const BasicSixTuple& six, const JInvariants& j) {
    if (omega == 0.0) throw DomainError("admissible_solutions requires omega != 0");
    std::vector<AdmissibleSolution> out;
    const double sk = sign(six.K0);
    for (auto& r : report.roots) {
        if (!r.real) continue;
        const double Y = r.Y.real();
        if (!(sk * Y < sk * 2.0 * six.w0) || sign(Y) != sign(omega)) continue;

        const double y = Y / omega;
        const double x = j.d / (y * y) - 2.0 * omega / (six.K0 * y);
        const double den = j.d + j.e * Y;
        const double z = y * (j.a + j.b * Y + j.c * Y * Y) / den;
        const BasicTriple t{x, z, y / x};
        if (!(t.rho0 > 0.0) || !(t.v0 > 0.0)) continue;

        r.admissible = true;
        r.triple = t;
        r.ill_conditioned = std::abs(den) < 1e-8 * std::abs(j.d);
        out.push_back({Y, t, r.ill_conditioned});
    }
    return out;
}

std::optional<BasicTriple> solve_zero_momentum(const BasicSixTuple& six, const SiegelValue& sg,
                                               double h, std::optional<double> rho0) {
    const JInvariants j = j_invariants(six, sg);
    if (!(sg.s0 > 0.0)) return std::nullopt;
    double r0 = 0.0;
    if (h != 0.0) {
        r0 = (4.0 * j.j2 * j.j2 * sg.s0 - j.j1) / (2.0 * h);
    } else {
        if (!rho0) throw DomainError("h = omega = 0 leaves rho0 free; supply it");
        r0 = *rho0;
    }
    if (!(r0 > 0.0)) return std::nullopt;
    return BasicTriple{r0, 2.0 * j.j2 * std::sqrt(sg.s0 / r0), 2.0 * std::sqrt(sg.s0 / (r0 * r0 * r0))};
}

std::array<double, 3> basic_system_residual(const BasicTriple& t, const BasicSixTuple& six,
                                            const JInvariants& j, double h, double omega) {
    const double x = t.rho0, y = t.rho0 * t.v0, z = t.rho1;
    const double s0 = j.d / 4.0;

    const double e1a = x * y * y, e1b = 2.0 * omega * y / six.K0;
    const double eq1 = relative(e1a + e1b - 4.0 * s0, {e1a, e1b, 4.0 * s0});

    const double e2a = z / y, e2b = omega * j.j3 / (x * y), e2c = omega * j.j4 * y;
    const double eq2 = relative(e2a - e2b - e2c - j.j2, {e2a, e2b, e2c, j.j2});

    const double e3a = x * z * z, e3b = 2.0 * h * x, e3c = omega * omega / x,
                 e3d = omega * y / (2.0 * six.K0);
    const double eq3 = relative(e3a - e3b + e3c - e3d - j.j1, {e3a, e3b, e3c, e3d, j.j1});
    return {eq1, eq2, eq3};
}

ModuliState assemble_initial_data(const BasicTriple& t, const ShapePoint& p, const DirectionElement& d) {
    return {t.rho0, p.phi, p.theta, t.rho1, d.j_phi * t.v0, d.j_theta * t.v0};
}

PipelineResult reconstruct_pipeline(const ShapePoint& p, const DirectionElement& d,
                                    const BasicSixTuple& six, const SiegelValue& sg,
                                    const EnergyMomentum& em, const PotentialSource& U,
                                    const TimeSpan& span, const OdeOptions& opt,
                                    std::optional<double> rho0_free) {
    PipelineResult result;
    const JInvariants j = j_invariants(six, sg);

    std::vector<AdmissibleSolution> candidates;
    if (em.omega == 0.0) {
        if (auto t = solve_zero_momentum(six, sg, em.h, rho0_free)) candidates.push_back({0.0, *t, false});
    } else {
        result.report = solve_roots(build_polynomial(j, em.H()));
        candidates = admissible_solutions(result.report, em.omega, six, j);
    }
    if (candidates.empty()) {
        result.diagnostic = "no admissible solution of the basic system";
        return result;
    }

    for (const auto& c : candidates) {
        ReconstructedCurve curve;
        curve.Y = c.Y;
        curve.triple = c.triple;
        curve.ill_conditioned = c.ill_conditioned;
        curve.trajectory = integrate_reduced(assemble_initial_data(c.triple, p, d), em.omega, U, span,
                                             opt, ReducedModel::newton, true);
        if (curve.trajectory.termination != Termination::completed) {
            result.diagnostic += "candidate Y = " + std::to_string(c.Y) + " stopped early: " +
                                 curve.trajectory.reason + "\n";
        }
        result.curves.push_back(std::move(curve));
    }
    return result;
}

}  // namespace shapesphere
