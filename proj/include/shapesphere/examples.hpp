#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "shapesphere/invariants.hpp"
#include "shapesphere/kinematics.hpp"

namespace shapesphere {

/// A computed value compared against a reference one. Informational checks are
/// reported but do not affect the verdict.
struct Check {
    std::string name;
    double computed = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    bool relative = false;
    bool pass = false;
    bool informational = false;
    std::string note;
};

struct ExampleReport {
    std::string id;
    std::vector<Check> checks;
    bool passed() const;
    nlohmann::json to_json() const;
    std::string summary() const;
};

const std::vector<std::string>& example_ids();

/// Throws DomainError for an unknown id.
ExampleReport run_example(const std::string& id);

/// Reference six-tuples of the synthetic examples.
BasicSixTuple example_six_tuple(const std::string& id);

/// Initial data of the periodic equal-mass orbit (unit masses).
PlanarConfig henon2_config();

}  // namespace shapesphere
