#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "shapesphere/commands.hpp"
#include "shapesphere/config_io.hpp"
#include "shapesphere/errors.hpp"
#include "shapesphere/examples.hpp"
#include "shapesphere/trajectory_io.hpp"

using namespace shapesphere;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "shapesphere_tests";
    fs::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_CASE("CSV header and round trip") {
    CHECK(csv_header() ==
          "t,rho,phi,theta,rho_dot,phi_dot,theta_dot,alpha,s,v,u_star,u_tau,u_nu,K_star,siegel,h_drift,omega_check");
    const MassDistribution md = make_mass_distribution({1.0, 1.0, 1.0});
    const PotentialSource U = PotentialSource::newtonian(md);
    const HopfProjection p = hopf_project(make_barycentric(henon2_config(), md), md);
    const double omega = kinematic_summary(make_barycentric(henon2_config(), md), md).omega;
    const ReducedTrajectory tr = integrate_reduced(p.state(), omega, U, {0.0, 1.0, 0.1});
    const auto rows = build_rows(tr.t, tr.states, reconstruct_rotation(tr, omega, 0.0), tr.em, U);
    for (const auto& r : rows) CHECK(std::abs(r.h_drift) < 1e-8);
    CHECK(rows.back().s > 0.0);

    const fs::path path = scratch("roundtrip.csv");
    write_csv(rows, path.string());
    const auto back = read_csv(path.string());
    REQUIRE(back.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) CHECK(back[i].values() == rows[i].values());
}

TEST_CASE("CSV errors carry the path") {
    const fs::path path = scratch("bad.csv");
    {
        std::ofstream os(path);
        os << csv_header() << "\n1,2,3\n";
    }
    try {
        read_csv(path.string());
        FAIL("expected an IO error");
    } catch (const IoError& e) {
        CHECK(std::string(e.what()).find(path.string()) != std::string::npos);
    }
    CHECK_THROWS_AS(read_csv(scratch("missing.csv").string()), IoError);
}

TEST_CASE("input parsing") {
    const nlohmann::json full = {{"masses", {1, 2, 3}},
                                 {"positions", {{1, 0}, {0, 1}, {-1, -1}}},
                                 {"velocities", {{0, 0.1}, {0.2, 0}, {0, 0}}}};
    const FullInput f = parse_full_input(full, "x");
    CHECK(f.masses[2] == 3.0);
    CHECK(f.config.positions[2].y() == -1.0);
    nlohmann::json nomass = full;
    nomass.erase("masses");
    CHECK(parse_full_input(nomass, "x").masses[0] == 1.0);
    nlohmann::json bad = full;
    bad["positions"] = {{1, 0}, {0, 1}};
    CHECK_THROWS_AS(parse_full_input(bad, "x"), IoError);

    const nlohmann::json red = {{"rho", 1.0}, {"phi", 1.2}, {"theta", 0.3}, {"rho_dot", 0.0},
                                {"phi_dot", 0.1}, {"theta_dot", 0.2}, {"omega", 0.5}};
    CHECK(parse_reduced_input(red, "x").omega == 0.5);
    nlohmann::json red_bad = red;
    red_bad.erase("phi");
    CHECK_THROWS_AS(parse_reduced_input(red_bad, "x"), IoError);

    ReconstructInput in;
    in.six = example_six_tuple("3.4.2");
    in.point = {1.0, 2.0};
    in.direction = {0.5, 0.3};
    in.h = -1.0;
    in.omega = 0.25;
    const ReconstructInput again = parse_reconstruct_input(to_json(in), "x");
    CHECK(again.six.K1 == in.six.K1);
    CHECK(again.direction.j_theta == in.direction.j_theta);
    CHECK(again.omega == in.omega);
    CHECK_THROWS_AS(read_json(scratch("missing.json").string()), IoError);
}

TEST_CASE("command layer exit codes") {
    std::ostringstream out, err;
    RunConfig cfg;
    cfg.command = Command::example;
    cfg.example_id = "3.4.1";
    CHECK(run_command(cfg, out, err) == kExitOk);
    cfg.example_id = "nope";
    CHECK(run_command(cfg, out, err) == kExitIo);

    cfg.command = Command::reconstruct;
    cfg.input = scratch("missing.json").string();
    CHECK(run_command(cfg, out, err) == kExitIo);

    // A singular reconstruction input (K0 = 0) maps to the singular exit code.
    ReconstructInput in;
    in.six = {1.0, 0.0, 0.5, 0.0, 0.0, 0.0};
    in.point = {1.0, 1.0};
    in.direction = {1.0, 0.0};
    in.omega = 0.3;
    const fs::path path = scratch("singular.json");
    write_json(to_json(in), path.string());
    cfg.input = path.string();
    CHECK(run_command(cfg, out, err) == kExitSingular);

    CHECK(parse_command("simulate-full") == Command::simulate_full);
    CHECK_FALSE(parse_command("simulate").has_value());
}

TEST_CASE("seeded runs are deterministic") {
    RunConfig cfg;
    cfg.command = Command::simulate_reduced;
    cfg.seed = 12;
    cfg.t1 = 0.2;
    cfg.stride = 0.05;
    std::ostringstream a, b, err;
    CHECK(run_command(cfg, a, err) == kExitOk);
    CHECK(run_command(cfg, b, err) == kExitOk);
    CHECK(a.str() == b.str());
    CHECK(a.str().rfind(csv_header(), 0) == 0);
}
