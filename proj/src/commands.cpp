#include "shapesphere/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <random>

#include <json.hpp>

#include "shapesphere/config_io.hpp"
#include "shapesphere/errors.hpp"
#include "shapesphere/examples.hpp"
#include "shapesphere/random_cases.hpp"
#include "shapesphere/reconstruction.hpp"
#include "shapesphere/trajectory_io.hpp"

namespace shapesphere {

using nlohmann::json;

namespace {

TimeSpan span_of(const RunConfig& cfg) { return {cfg.t0, cfg.t1, cfg.stride}; }
OdeOptions options_of(const RunConfig& cfg) {
    OdeOptions opt;
    opt.rtol = cfg.rtol;
    opt.atol = cfg.atol;
    return opt;
}

void emit_rows(const std::vector<TrajectoryRow>& rows, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        write_csv(rows, out);
    } else {
        write_csv(rows, path);
    }
}

void emit_json(const json& j, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << j.dump(2) << '\n';
    } else {
        write_json(j, path);
    }
}

FullInput full_input(const RunConfig& cfg, std::ostream& err) {
    if (cfg.input.empty()) {
        std::mt19937_64 rng(cfg.seed);
        const RandomCase rc = random_regular_case(rng);
        err << "no input given; using random initial data from seed " << cfg.seed << '\n';
        return {rc.md.masses, rc.config()};
    }
    return parse_full_input(read_json(cfg.input), cfg.input);
}

ReducedInput reduced_input(const RunConfig& cfg, std::ostream& err) {
    if (cfg.input.empty()) {
        std::mt19937_64 rng(cfg.seed);
        const RandomCase rc = random_regular_case(rng);
        err << "no input given; using random initial data from seed " << cfg.seed << '\n';
        return {rc.md.masses, rc.state, rc.omega};
    }
    return parse_reduced_input(read_json(cfg.input), cfg.input);
}

int simulate_full(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    FullInput in = full_input(cfg, err);
    const MassDistribution md = make_mass_distribution(in.masses);
    try {
        validate_config(in.config, md);
    } catch (const DomainError&) {
        err << "shifting initial data to the barycentric frame\n";
        in.config = make_barycentric(in.config, md);
        validate_config(in.config, md);
    }
    const FullTrajectory traj = integrate_full(in.config, md, span_of(cfg), options_of(cfg), true);
    const KinematicSummary k0 = kinematic_summary(in.config, md);

    std::vector<HopfProjection> proj;
    proj.reserve(traj.samples.size());
    for (const auto& c : traj.samples) proj.push_back(hopf_project(c, md));
    make_continuous(proj);

    std::vector<ModuliState> states;
    std::vector<double> alpha;
    for (const auto& p : proj) {
        states.push_back(p.state());
        alpha.push_back(p.alpha);
    }
    const PotentialSource U = PotentialSource::newtonian(md);
    emit_rows(build_rows(traj.t, states, alpha, {k0.energy_h, k0.omega}, U), cfg.output, out);
    if (traj.termination != Termination::completed) {
        err << "integration stopped early: " << traj.reason << '\n';
        return kExitSingular;
    }
    return kExitOk;
}

int simulate_reduced(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const ReducedInput in = reduced_input(cfg, err);
    const double omega = cfg.omega.value_or(in.omega);
    if (cfg.h) err << "--h is ignored by simulate-reduced; energy follows from the initial state\n";
    const MassDistribution md = make_mass_distribution(in.masses);
    const PotentialSource U = PotentialSource::newtonian(md);
    const ReducedTrajectory traj = integrate_reduced(in.state, omega, U, span_of(cfg), options_of(cfg),
                                                     ReducedModel::newton, true);
    const auto alpha = reconstruct_rotation(traj, omega, 0.0);
    emit_rows(build_rows(traj.t, traj.states, alpha, traj.em, U), cfg.output, out);
    if (traj.termination != Termination::completed) {
        err << "integration stopped early: " << traj.reason << '\n';
        return kExitSingular;
    }
    return kExitOk;
}

int invariants(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::array<double, 3> masses{1.0, 1.0, 1.0};
    ModuliState state;
    double omega = 0.0;
    json raw;
    if (!cfg.input.empty()) raw = read_json(cfg.input);
    if (raw.is_object() && raw.contains("positions")) {
        FullInput in = parse_full_input(raw, cfg.input);
        masses = in.masses;
        const MassDistribution md = make_mass_distribution(masses);
        const PlanarConfig c = make_barycentric(in.config, md);
        state = hopf_project(c, md).state();
        omega = kinematic_summary(c, md).omega;
    } else {
        const ReducedInput in = cfg.input.empty() ? reduced_input(cfg, err)
                                                  : parse_reduced_input(raw, cfg.input);
        masses = in.masses;
        state = in.state;
        omega = in.omega;
    }
    if (cfg.omega) omega = *cfg.omega;

    const MassDistribution md = make_mass_distribution(masses);
    const PotentialSource U = PotentialSource::newtonian(md);
    const SixTupleResult st = basic_six_tuple(state, omega, U);

    ReconstructInput rec;
    rec.masses = masses;
    rec.six = st.six;
    rec.point = st.jet.point;
    rec.direction = st.jet.direction;
    rec.h = energy_level(state, omega, U);
    rec.omega = omega;
    json j = to_json(rec);
    j["siegel"] = {{"s0", st.siegel.s0}, {"s1", st.siegel.s1}};
    j["triple"] = to_json(BasicTriple{state.rho, state.rho_dot, st.jet.v});
    j["tau1"] = st.tau1;
    j["K0_intrinsic"] = st.K0_intrinsic;
    emit_json(j, cfg.output, out);
    return kExitOk;
}

int reconstruct(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.input.empty()) throw IoError("reconstruct needs --input");
    ReconstructInput in = parse_reconstruct_input(read_json(cfg.input), cfg.input);
    if (cfg.h) in.h = *cfg.h;
    if (cfg.omega) in.omega = *cfg.omega;

    const MassDistribution md = make_mass_distribution(in.masses);
    const PotentialSource U = PotentialSource::newtonian(md);
    const SiegelValue sg = siegel_from_six(in.six);
    const JInvariants j = j_invariants(in.six, sg);
    const EnergyMomentum em{in.h, in.omega};
    const PipelineResult res = reconstruct_pipeline(in.point, in.direction, in.six, sg, em, U,
                                                    span_of(cfg), options_of(cfg));

    json report;
    report["H"] = em.H();
    report["degree"] = res.report.degree;
    const PolyCoefficients poly = build_polynomial(j, em.H());
    report["coefficients"] = poly.coefficients();
    json roots = json::array();
    for (const auto& r : res.report.roots) {
        json x = {{"re", r.Y.real()}, {"im", r.Y.imag()}, {"real", r.real}, {"admissible", r.admissible}};
        if (r.triple) {
            x["triple"] = to_json(*r.triple);
            x["residual"] = basic_system_residual(*r.triple, in.six, j, em.h, em.omega);
            x["ill_conditioned"] = r.ill_conditioned;
        }
        roots.push_back(x);
    }
    report["roots"] = roots;
    json curves = json::array();
    for (std::size_t k = 0; k < res.curves.size(); ++k) {
        const auto& c = res.curves[k];
        json x = {{"Y", c.Y}, {"triple", to_json(c.triple)}, {"ill_conditioned", c.ill_conditioned},
                  {"termination", to_string(c.trajectory.termination)}};
        if (!cfg.output.empty()) {
            std::filesystem::path p(cfg.output);
            p.replace_extension();
            const std::string csv = p.string() + "_candidate" + std::to_string(k + 1) + ".csv";
            const auto alpha = reconstruct_rotation(c.trajectory, em.omega, 0.0);
            write_csv(build_rows(c.trajectory.t, c.trajectory.states, alpha, c.trajectory.em, U), csv);
            x["trajectory"] = csv;
        }
        curves.push_back(x);
    }
    report["solutions"] = curves;
    if (!res.diagnostic.empty()) {
        report["diagnostic"] = res.diagnostic;
        err << res.diagnostic << '\n';
    }
    emit_json(report, cfg.output, out);
    return kExitOk;
}

int example(const RunConfig& cfg, std::ostream& out) {
    const ExampleReport rep = run_example(cfg.example_id);
    out << rep.summary();
    if (!cfg.output.empty()) write_json(rep.to_json(), cfg.output);
    return rep.passed() ? kExitOk : kExitMismatch;
}

}  // namespace

std::optional<Command> parse_command(const std::string& name) {
    if (name == "simulate-full") return Command::simulate_full;
    if (name == "simulate-reduced") return Command::simulate_reduced;
    if (name == "invariants") return Command::invariants;
    if (name == "reconstruct") return Command::reconstruct;
    if (name == "example") return Command::example;
    return std::nullopt;
}

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (!(cfg.rtol > 0.0) || !(cfg.atol > 0.0)) {
        err << "error: tolerances must be positive\n";
        return kExitIo;
    }
    if (cfg.command == Command::example) {
        const auto& ids = example_ids();
        if (std::find(ids.begin(), ids.end(), cfg.example_id) == ids.end()) {
            err << "error: unknown example id '" << cfg.example_id << "'\n";
            return kExitIo;
        }
    }
    try {
        switch (cfg.command) {
            case Command::simulate_full: return simulate_full(cfg, out, err);
            case Command::simulate_reduced: return simulate_reduced(cfg, out, err);
            case Command::invariants: return invariants(cfg, out, err);
            case Command::reconstruct: return reconstruct(cfg, out, err);
            case Command::example: return example(cfg, out);
        }
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitSingular;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitIo;
}

}  // namespace shapesphere
