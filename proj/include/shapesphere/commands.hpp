#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace shapesphere {

enum ExitCode : int {
    kExitOk = 0,
    kExitMismatch = 2,
    kExitSingular = 3,
    kExitIo = 4,
};

enum class Command { simulate_full, simulate_reduced, invariants, reconstruct, example };

struct RunConfig {
    Command command = Command::example;
    std::string input;
    std::string output;
    double t0 = 0.0;
    double t1 = 1.0;
    double stride = 0.01;
    double rtol = 1e-10;
    double atol = 1e-12;
    std::optional<double> omega;
    std::optional<double> h;
    std::string example_id;
    std::uint64_t seed = 0;
};

/// Parses a command name; returns nullopt for unknown names.
std::optional<Command> parse_command(const std::string& name);

/// Runs one command and maps failures onto the exit-code contract.
int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace shapesphere
