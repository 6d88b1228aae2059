#pragma once

#include <stdexcept>
#include <string>

namespace shapesphere {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument outside the mathematical domain of an operation
/// (non-positive mass, zero scaling factor, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// The (phi, theta) chart degenerates: sin(phi) is below the pole tolerance.
class ChartError : public Error {
public:
    using Error::Error;
};

/// Binary collision. On the shape sphere `index` is the collision longitude
/// theta_i (0-based); in configuration space it is the body opposite the
/// colliding pair, so both readings name the same binary.
class CollisionError : public Error {
public:
    CollisionError(const std::string& what, int index) : Error(what), index_(index) {}
    int index() const noexcept { return index_; }

private:
    int index_;
};

/// Vanishing shape speed.
class CuspError : public Error {
public:
    using Error::Error;
};

/// Which of the regularity quantities degenerated at a shape-curve point.
struct SingularityKind {
    bool cusp = false;          // v == 0
    bool tangent_to_gradient = false;  // U_nu == 0
    bool geodesic = false;      // K* == 0
};

/// A shape-curve point where v, U_nu or K* vanishes; reconstruction needs all three nonzero.
class SingularPointError : public Error {
public:
    SingularPointError(const std::string& what, SingularityKind kind) : Error(what), kind_(kind) {}
    const SingularityKind& kind() const noexcept { return kind_; }

private:
    SingularityKind kind_;
};

/// The input is too degenerate to proceed (zero polynomial, empty trajectory, ...).
class DegenerateInputError : public Error {
public:
    using Error::Error;
};

/// An integration stopped before reaching the requested end time.
class IntegrationHalted : public Error {
public:
    IntegrationHalted(const std::string& what, double last_time) : Error(what), last_time_(last_time) {}
    double last_time() const noexcept { return last_time_; }

private:
    double last_time_;
};

/// File or configuration problems; the message carries the path.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace shapesphere
