#include "shapesphere/config_io.hpp"

#include <fstream>

#include "shapesphere/errors.hpp"

namespace shapesphere {

using nlohmann::json;

namespace {

double number(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key)) throw IoError(where + ": missing field \"" + key + "\"");
    const json& v = j.at(key);
    if (!v.is_number()) throw IoError(where + ": field \"" + key + "\" must be a number");
    return v.get<double>();
}

std::array<double, 3> masses_or_default(const json& j, const std::string& where) {
    std::array<double, 3> m{1.0, 1.0, 1.0};
    if (!j.contains("masses")) return m;
    const json& a = j.at("masses");
    if (!a.is_array() || a.size() != 3) throw IoError(where + ": \"masses\" must hold 3 numbers");
    for (int i = 0; i < 3; ++i) {
        if (!a[i].is_number()) throw IoError(where + ": \"masses\" must hold 3 numbers");
        m[i] = a[i].get<double>();
    }
    return m;
}

std::array<Eigen::Vector2d, 3> vectors(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key)) throw IoError(where + ": missing field \"" + key + "\"");
    const json& a = j.at(key);
    if (!a.is_array() || a.size() != 3) throw IoError(where + ": \"" + key + "\" must hold 3 [x,y] pairs");
    std::array<Eigen::Vector2d, 3> out;
    for (int i = 0; i < 3; ++i) {
        if (!a[i].is_array() || a[i].size() != 2 || !a[i][0].is_number() || !a[i][1].is_number()) {
            throw IoError(where + ": \"" + key + "\" must hold 3 [x,y] pairs");
        }
        out[i] = {a[i][0].get<double>(), a[i][1].get<double>()};
    }
    return out;
}

const json& object(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key) || !j.at(key).is_object()) {
        throw IoError(where + ": missing object \"" + key + "\"");
    }
    return j.at(key);
}

}  // namespace

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw IoError(path + ": invalid JSON: " + e.what());
    }
}

void write_json(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << j.dump(2) << '\n';
    if (!out) throw IoError("write failed for " + path);
}

FullInput parse_full_input(const json& j, const std::string& where) {
    if (!j.is_object()) throw IoError(where + ": expected a JSON object");
    FullInput in;
    in.masses = masses_or_default(j, where);
    in.config.positions = vectors(j, "positions", where);
    in.config.velocities = vectors(j, "velocities", where);
    return in;
}

ReducedInput parse_reduced_input(const json& j, const std::string& where) {
    if (!j.is_object()) throw IoError(where + ": expected a JSON object");
    ReducedInput in;
    in.masses = masses_or_default(j, where);
    in.state = {number(j, "rho", where),     number(j, "phi", where),
                number(j, "theta", where),   number(j, "rho_dot", where),
                number(j, "phi_dot", where), number(j, "theta_dot", where)};
    in.omega = number(j, "omega", where);
    return in;
}

ReconstructInput parse_reconstruct_input(const json& j, const std::string& where) {
    if (!j.is_object()) throw IoError(where + ": expected a JSON object");
    ReconstructInput in;
    in.masses = masses_or_default(j, where);
    const json& six = object(j, "six_tuple", where);
    in.six = {number(six, "u0", where), number(six, "u1", where), number(six, "w0", where),
              number(six, "w1", where), number(six, "K0", where), number(six, "K1", where)};
    const json& p = object(j, "point", where);
    in.point = {number(p, "phi", where), number(p, "theta", where)};
    const json& d = object(j, "direction", where);
    in.direction = {number(d, "j_phi", where), number(d, "j_theta", where)};
    in.h = number(j, "h", where);
    in.omega = number(j, "omega", where);
    return in;
}

json to_json(const BasicSixTuple& s) {
    return {{"u0", s.u0}, {"u1", s.u1}, {"w0", s.w0}, {"w1", s.w1}, {"K0", s.K0}, {"K1", s.K1}};
}

json to_json(const BasicTriple& t) { return {{"rho0", t.rho0}, {"rho1", t.rho1}, {"v0", t.v0}}; }

json to_json(const ReconstructInput& in) {
    return {{"masses", in.masses},
            {"six_tuple", to_json(in.six)},
            {"point", {{"phi", in.point.phi}, {"theta", in.point.theta}}},
            {"direction", {{"j_phi", in.direction.j_phi}, {"j_theta", in.direction.j_theta}}},
            {"h", in.h},
            {"omega", in.omega}};
}

}  // namespace shapesphere
