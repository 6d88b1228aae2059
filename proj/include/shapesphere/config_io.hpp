#pragma once

#include <array>
#include <optional>
#include <string>

#include <json.hpp>

#include "shapesphere/invariants.hpp"
#include "shapesphere/kinematics.hpp"

namespace shapesphere {

struct FullInput {
    std::array<double, 3> masses{1.0, 1.0, 1.0};
    PlanarConfig config;
};

struct ReducedInput {
    std::array<double, 3> masses{1.0, 1.0, 1.0};
    ModuliState state;
    double omega = 0.0;
};

struct ReconstructInput {
    std::array<double, 3> masses{1.0, 1.0, 1.0};
    BasicSixTuple six;
    ShapePoint point;
    DirectionElement direction;
    double h = 0.0;
    double omega = 0.0;
};

/// Reads and parses a JSON file; throws IoError naming the path.
nlohmann::json read_json(const std::string& path);
void write_json(const nlohmann::json& j, const std::string& path);

/// Field-level parsers; `where` prefixes error messages. Throw IoError.
FullInput parse_full_input(const nlohmann::json& j, const std::string& where);
ReducedInput parse_reduced_input(const nlohmann::json& j, const std::string& where);
ReconstructInput parse_reconstruct_input(const nlohmann::json& j, const std::string& where);

nlohmann::json to_json(const BasicSixTuple& six);
nlohmann::json to_json(const BasicTriple& t);
nlohmann::json to_json(const ReconstructInput& in);

}  // namespace shapesphere
