#pragma once

#include <vector>

#include "blgv/grid.hpp"

namespace blgv {

/// Gaussian weight Psi(t, y) = y^2 / (16 theta_E (1+t)) sampled on the normal
/// grid, together with e^{Psi} and the slope d_y Psi per row.
struct WeightProfile {
    GridPtr grid;
    double theta_e;
    double t;
    std::vector<double> e_psi;
    std::vector<double> e_2psi;
    std::vector<double> dy_psi;

    WeightProfile(GridPtr g, double theta_e_, double t_);

    static double psi(double theta_e, double t, double y) {
        return y * y / (16.0 * theta_e * (1.0 + t));
    }

    /// max over nodes of |d_t Psi + 4 theta_E (d_y Psi)^2|, the invariant the
    /// weight must satisfy identically.
    double identity_residual() const;
};

} // namespace blgv
