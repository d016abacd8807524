#include "blgv/config.hpp"

#include <fstream>

#include <json.hpp>

#include "blgv/errors.hpp"

namespace blgv {

namespace {

using nlohmann::json;

template <typename T>
void pull(const json& j, const char* key, T& target) {
    if (j.contains(key)) target = j.at(key).get<T>();
}

} // namespace

RunConfig RunConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ConfigError("config parse error in " + path + ": " + e.what());
    }

    RunConfig c;
    if (j.contains("grid")) {
        const auto& g = j.at("grid");
        pull(g, "L_x", c.grid.L_x);
        pull(g, "N_x", c.grid.N_x);
        pull(g, "Y_max", c.grid.Y_max);
        pull(g, "N_y", c.grid.N_y);
        pull(g, "stretch", c.grid.stretch);
    }
    if (j.contains("physics")) {
        const auto& p = j.at("physics");
        pull(p, "theta_E", c.physics.theta_E);
        pull(p, "nu", c.physics.nu);
        pull(p, "epsilon", c.physics.epsilon);
        pull(p, "delta", c.physics.delta);
        pull(p, "lambda", c.physics.lambda);
        pull(p, "u0_norm", c.physics.u0_norm);
        pull(p, "seed", c.physics.seed);
        pull(p, "modes", c.physics.modes);
    }
    if (j.contains("time")) {
        const auto& t = j.at("time");
        pull(t, "dt", c.time.dt);
        pull(t, "policy", c.time.policy);
        pull(t, "T_end", c.time.T_end);
        pull(t, "safety", c.time.safety);
    }
    if (j.contains("output")) {
        const auto& o = j.at("output");
        pull(o, "dir", c.output.dir);
        pull(o, "snapshot_every", c.output.snapshot_every);
        pull(o, "norm_every", c.output.norm_every);
    }
    if (j.contains("experiment")) {
        const auto& e = j.at("experiment");
        pull(e, "sigma", c.experiment.sigma);
        pull(e, "nus", c.experiment.nus);
        pull(e, "radius_tol_factor", c.experiment.radius_tol_factor);
    }
    c.validate();
    return c;
}

std::string RunConfig::to_json_string() const {
    json j;
    j["grid"] = {{"L_x", grid.L_x},
                 {"N_x", grid.N_x},
                 {"Y_max", grid.Y_max},
                 {"N_y", grid.N_y},
                 {"stretch", grid.stretch}};
    j["physics"] = {{"theta_E", physics.theta_E}, {"nu", physics.nu},
                    {"epsilon", physics.epsilon}, {"delta", physics.delta},
                    {"lambda", physics.lambda},   {"u0_norm", physics.u0_norm},
                    {"seed", physics.seed},       {"modes", physics.modes}};
    j["time"] = {{"dt", time.dt}, {"policy", time.policy}, {"T_end", time.T_end},
                 {"safety", time.safety}};
    j["output"] = {{"dir", output.dir},
                   {"snapshot_every", output.snapshot_every},
                   {"norm_every", output.norm_every}};
    j["experiment"] = {{"sigma", experiment.sigma},
                       {"nus", experiment.nus},
                       {"radius_tol_factor", experiment.radius_tol_factor}};
    return j.dump(2) + "\n";
}

void RunConfig::validate() const {
    if (!(grid.L_x > 0.0) || !(grid.Y_max > 0.0)) throw ConfigError("config: grid sizes must be positive");
    if (!(physics.theta_E > 0.0)) throw ConfigError("config: theta_E must be positive");
    if (!(physics.nu >= 0.0)) throw ConfigError("config: nu must be nonnegative");
    if (!(physics.epsilon >= 0.0) || physics.epsilon >= physics.theta_E)
        throw ConfigError("config: need 0 <= epsilon < theta_E");
    if (!(physics.delta > 0.0)) throw ConfigError("config: delta must be positive");
    if (!(physics.lambda > 0.0)) throw ConfigError("config: lambda must be positive");
    if (!(time.dt > 0.0) || !(time.T_end > 0.0)) throw ConfigError("config: dt and T_end must be positive");
    if (time.policy != "fixed" && time.policy != "adaptive")
        throw ConfigError("config: time.policy must be 'fixed' or 'adaptive'");
    if (output.norm_every < 1) throw ConfigError("config: norm_every must be >= 1");
    if (experiment.nus.size() < 2) throw ConfigError("config: nu sweep needs at least 2 values");
}

GridPtr RunConfig::make_grid() const {
    if (grid.stretch == 1.0) return Grid::uniform(grid.L_x, grid.N_x, grid.Y_max, grid.N_y);
    return Grid::stretched(grid.L_x, grid.N_x, grid.Y_max, grid.N_y, grid.stretch);
}

} // namespace blgv
