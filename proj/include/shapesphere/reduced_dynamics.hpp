#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "shapesphere/kinematics.hpp"
#include "shapesphere/moduli.hpp"
#include "shapesphere/ode.hpp"
#include "shapesphere/shape_geometry.hpp"

namespace shapesphere {

struct EnergyMomentum {
    double h = 0.0;
    double omega = 0.0;
    double H() const { return h * omega * omega; }
};

/// Evaluator of a shape potential and its partials. The Newtonian source also
/// knows its collision longitudes, which the reduced integrator uses as a guard.
class PotentialSource {
public:
    using Evaluator = std::function<PotentialJet(const ShapePoint&)>;

    PotentialSource(Evaluator f, std::optional<MassDistribution> md = std::nullopt)
        : f_(std::move(f)), md_(std::move(md)) {}

    static PotentialSource newtonian(const MassDistribution& md);
    static PotentialSource constant(double value);
    static PotentialSource zero() { return constant(0.0); }

    PotentialJet operator()(const ShapePoint& p) const { return f_(p); }
    const std::optional<MassDistribution>& masses() const { return md_; }

private:
    Evaluator f_;
    std::optional<MassDistribution> md_;
};

/// Second derivatives from the reduced Newton equations on the moduli space,
/// including the Coriolis terms. Throws ChartError near the poles.
ModuliAccel reduced_rhs(const ModuliState& s, const EnergyMomentum& em, const PotentialSource& U);

/// The same system without the Coriolis terms (valid only for omega = 0).
ModuliAccel fake_rhs(const ModuliState& s, double h, const PotentialSource& U);

/// Energy integral of the reduced system.
double energy_level(const ModuliState& s, double omega, const PotentialSource& U);

enum class ReducedModel { newton, fake };

struct ReducedTrajectory {
    std::vector<double> t;
    std::vector<ModuliState> states;
    std::vector<double> alpha_increment;  // integral of the rotation rate from t[0]; empty if unknown
    EnergyMomentum em;
    Termination termination = Termination::completed;
    std::string reason;
};

/// Integrates the reduced system with h fixed from the initial state. Stops at
/// rho < 1e-8, sin(phi) < 1e-9 or at a binary collision; throws IntegrationHalted
/// in that case unless allow_partial is set.
ReducedTrajectory integrate_reduced(const ModuliState& s0, double omega, const PotentialSource& U,
                                    const TimeSpan& span, const OdeOptions& opt = {},
                                    ReducedModel model = ReducedModel::newton,
                                    bool allow_partial = false);

/// Rotation angle along a sampled trajectory. Uses the increment integrated with
/// the flow when it is stored and omega matches, the trapezoid rule otherwise.
std::vector<double> reconstruct_rotation(const ReducedTrajectory& traj, double omega, double alpha0);

struct ScaledData {
    ModuliState state;
    EnergyMomentum em;
};

/// Time-size scaling t -> k t, rho -> k^{-2/3} rho. Throws DomainError for k = 0.
ScaledData scaling_transform(const ModuliState& s, const EnergyMomentum& em, double k);

}  // namespace shapesphere
