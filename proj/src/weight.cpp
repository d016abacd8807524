#include "blgv/weight.hpp"

#include <cmath>

#include "blgv/errors.hpp"

namespace blgv {

WeightProfile::WeightProfile(GridPtr g, double theta_e_, double t_)
    : grid(std::move(g)), theta_e(theta_e_), t(t_) {
    if (!(theta_e > 0.0)) throw ConfigError("weight: theta_E must be positive");
    if (!(t >= 0.0)) throw ConfigError("weight: t must be nonnegative");
    const int n_y = grid->n_y();
    e_psi.resize(n_y);
    e_2psi.resize(n_y);
    dy_psi.resize(n_y);
    const double ot = 1.0 + t;
    for (int j = 0; j < n_y; ++j) {
        const double y = grid->y()[j];
        const double p = psi(theta_e, t, y);
        e_psi[j] = std::exp(p);
        e_2psi[j] = std::exp(2.0 * p);
        dy_psi[j] = y / (8.0 * theta_e * ot);
    }
}

double WeightProfile::identity_residual() const {
    const double ot = 1.0 + t;
    double worst = 0.0;
    for (int j = 0; j < grid->n_y(); ++j) {
        const double y = grid->y()[j];
        const double dt_psi = -y * y / (16.0 * theta_e * ot * ot);
        const double r = dt_psi + 4.0 * theta_e * dy_psi[j] * dy_psi[j];
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

} // namespace blgv
