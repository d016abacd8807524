#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "blgv/grid.hpp"

namespace blgv {

struct GridConfig {
    double L_x = 6.283185307179586;
    int N_x = 64;
    double Y_max = 10.0;
    int N_y = 128;
    double stretch = 1.0;
};

struct PhysicsConfig {
    double theta_E = 1.0;
    double nu = 0.0;
    double epsilon = 0.1;
    double delta = 0.2;
    double lambda = 100.0;  // "sufficiently large" coupling; experiments override
    double u0_norm = 0.25;
    std::uint64_t seed = 2024;
    int modes = 8;
};

struct TimeConfig {
    double dt = 2e-4;
    std::string policy = "fixed";  // fixed | adaptive
    double T_end = 0.02;
    double safety = 0.4;
};

struct OutputConfig {
    std::string dir = "out";
    int snapshot_every = 0;  // 0 = final state only
    int norm_every = 5;
};

struct ExperimentConfig {
    double sigma = 1e-6;                          // uniqueness perturbation size
    std::vector<double> nus = {1e-2, 5e-3, 2.5e-3};
    double radius_tol_factor = 0.1;               // audit tolerance, fraction of delta
};

struct RunConfig {
    GridConfig grid;
    PhysicsConfig physics;
    TimeConfig time;
    OutputConfig output;
    ExperimentConfig experiment;

    static RunConfig from_file(const std::string& path);
    std::string to_json_string() const;
    void validate() const;
    GridPtr make_grid() const;
};

} // namespace blgv
