#pragma once

#include <cstdint>
#include <random>

#include "shapesphere/kinematics.hpp"
#include "shapesphere/moduli.hpp"

namespace shapesphere {

/// Initial data for randomized property runs: moderate masses and velocities,
/// a shape well inside one hemisphere (away from collisions, poles and the
/// collinear equator) and, unless zero_momentum, |omega| in [0.2, 0.8].
struct RandomCase {
    MassDistribution md;
    ModuliState state;
    double omega = 0.0;
    double alpha = 0.0;

    PlanarConfig config() const { return hopf_lift_state(alpha, state, omega, md); }
};

RandomCase random_regular_case(std::mt19937_64& rng, bool zero_momentum = false);

}  // namespace shapesphere
