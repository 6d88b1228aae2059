#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "shapesphere/invariants.hpp"
#include "shapesphere/reduced_dynamics.hpp"

namespace shapesphere {

struct JInvariants {
    double j1 = 0.0, j2 = 0.0, j3 = 0.0, j4 = 0.0, j5 = 0.0, j6 = 0.0;
    double a = 0.0, b = 0.0, c = 0.0, d = 0.0, e = 0.0;
};

struct PolyCoefficients {
    std::array<double, 3> alpha{};
    std::array<double, 5> beta{};
    double H = 0.0;
    /// Ascending coefficients of P(Y) = Y^2 sum beta_k Y^k + H sum alpha_k Y^k.
    std::array<double, 7> coefficients() const;
    /// Ascending coefficients of the quartic sum beta_k Y^k (P(Y) / Y^2 when H = 0).
    std::array<double, 5> quartic() const { return beta; }
};

struct RootInfo {
    std::complex<double> Y;
    bool real = false;
    bool admissible = false;
    std::optional<BasicTriple> triple;
    bool ill_conditioned = false;
};

struct RootReport {
    int degree = 0;
    std::vector<RootInfo> roots;
};

struct AdmissibleSolution {
    double Y = 0.0;
    BasicTriple triple;
    bool ill_conditioned = false;
};

/// Throws SingularPointError if w0, K0 or S0 vanishes.
JInvariants j_invariants(const BasicSixTuple& six, const SiegelValue& sg);

/// Siegel coefficients implied by a six-tuple.
SiegelValue siegel_from_six(const BasicSixTuple& six);

PolyCoefficients build_polynomial(const JInvariants& j, double H);

RootReport solve_roots(const PolyCoefficients& p);

/// Keeps the real roots with sign(K0) Y < sign(K0) 2 w0 and sign(Y) = sign(omega),
/// maps them to triples and records the outcome in `report`. Throws DomainError
/// for omega = 0.
std::vector<AdmissibleSolution> admissible_solutions(RootReport& report, double omega,
                                                     const BasicSixTuple& six, const JInvariants& j);

/// The omega = 0 system. For h = 0 the size is free and must be supplied.
std::optional<BasicTriple> solve_zero_momentum(const BasicSixTuple& six, const SiegelValue& sg,
                                               double h, std::optional<double> rho0 = std::nullopt);

/// Relative residuals of the three basic equations.
std::array<double, 3> basic_system_residual(const BasicTriple& t, const BasicSixTuple& six,
                                            const JInvariants& j, double h, double omega);

ModuliState assemble_initial_data(const BasicTriple& t, const ShapePoint& p, const DirectionElement& d);

struct ReconstructedCurve {
    double Y = 0.0;
    BasicTriple triple;
    bool ill_conditioned = false;
    ReducedTrajectory trajectory;
};

struct PipelineResult {
    RootReport report;
    std::vector<ReconstructedCurve> curves;
    std::string diagnostic;
};

/// Solves the basic system at (h, omega) and integrates each admissible
/// candidate. For omega = 0 the zero-momentum solution is used; `rho0_free`
/// fixes the size when h = 0 as well.
PipelineResult reconstruct_pipeline(const ShapePoint& p, const DirectionElement& d,
                                    const BasicSixTuple& six, const SiegelValue& sg,
                                    const EnergyMomentum& em, const PotentialSource& U,
                                    const TimeSpan& span, const OdeOptions& opt = {},
                                    std::optional<double> rho0_free = std::nullopt);

}  // namespace shapesphere
