#pragma once

namespace shapesphere {

/// A point of the reduced phase space: hyperradius, colatitude and longitude on
/// the shape sphere, and their time derivatives.
struct ModuliState {
    double rho = 0.0;
    double phi = 0.0;
    double theta = 0.0;
    double rho_dot = 0.0;
    double phi_dot = 0.0;
    double theta_dot = 0.0;
};

/// Second time derivatives of a ModuliState.
struct ModuliAccel {
    double rho_ddot = 0.0;
    double phi_ddot = 0.0;
    double theta_ddot = 0.0;
};

}  // namespace shapesphere
