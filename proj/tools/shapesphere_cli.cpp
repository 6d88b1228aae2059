#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "shapesphere/commands.hpp"

int main(int argc, char** argv) {
    using namespace shapesphere;

    CLI::App app{"Shape-sphere reduction of the planar three-body problem"};
    app.set_help_flag("--help", "print this help message and exit");
    RunConfig cfg;
    std::string command;
    std::vector<double> t_span;
    double omega = 0.0, h = 0.0;

    app.add_option("--command", command, "simulate-full | simulate-reduced | invariants | reconstruct | example")
        ->required();
    app.add_option("--input", cfg.input, "input JSON file");
    app.add_option("--output", cfg.output, "output file (stdout when omitted)");
    app.add_option("--t-span", t_span, "end time, or start and end time")->expected(1, 2);
    app.add_option("--stride", cfg.stride, "output sampling interval");
    app.add_option("--rtol", cfg.rtol, "relative integration tolerance");
    app.add_option("--atol", cfg.atol, "absolute integration tolerance");
    auto* omega_opt = app.add_option("--omega", omega, "angular momentum override");
    auto* h_opt = app.add_option("--h", h, "energy override");
    app.add_option("--example", cfg.example_id, "3.4.1 | 3.4.2 | 3.4.3 | henon2");
    app.add_option("--seed", cfg.seed, "seed for random initial data when no input is given");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitIo;
    }

    const auto cmd = parse_command(command);
    if (!cmd) {
        std::cerr << "error: unknown command '" << command << "'\n";
        return kExitIo;
    }
    cfg.command = *cmd;
    if (t_span.size() == 1) {
        cfg.t1 = t_span[0];
    } else if (t_span.size() == 2) {
        cfg.t0 = t_span[0];
        cfg.t1 = t_span[1];
    }
    if (*omega_opt) cfg.omega = omega;
    if (*h_opt) cfg.h = h;
    return run_command(cfg, std::cout, std::cerr);
}
