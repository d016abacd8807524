#include "blgv/phase.hpp"

#include <cmath>
#include <string>

#include "blgv/errors.hpp"

namespace blgv {

PhaseState::PhaseState(double delta_, double lambda_) : delta(delta_), lambda(lambda_) {
    if (!(delta > 0.0)) throw ConfigError("phase: delta must be positive");
    if (!(lambda > 0.0)) throw ConfigError("phase: lambda must be positive");
    history.push_back({0.0, 0.0, 0.0});
}

SpectralField apply_phase(const SpectralField& F, double radius) {
    if (!(radius >= 0.0)) throw ConfigError("apply_phase: radius must be nonnegative");
    const Grid& g = *F.grid;
    SpectralField out = F;
    for (int m = 0; m < g.n_x(); ++m) {
        const double amp = std::exp(radius * std::abs(g.xi(m)));
        for (int j = 0; j < g.n_y(); ++j) {
            auto z = amp * out.at(m, j);
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
                throw AnalyticityDeficit(
                    m, "analyticity deficit: amplified coefficient overflow at mode " +
                           std::to_string(m));
            out.at(m, j) = z;
        }
    }
    return out;
}

std::array<double, 6> mu_rhs_groups(const Field& u, const Field& theta, const WeightProfile& w,
                                    const PhaseState& phase, const DyadicPartition& P) {
    if (phase.t_star_reached) throw Error("mu_rhs: phase state already past T*");
    const double r = std::max(phase.radius(), 0.0);
    const auto Du = apply_phase(DerivSpectra::make(u, 3), r);
    const auto Dth = apply_phase(DerivSpectra::make(theta, 3), r);

    const BesovSpec b_half_0(0.5, 0), b_half_1(0.5, 1), b_half_2(0.5, 2), b_one_0(1.0, 0);

    const double a1 = besov_from_spectra(P, Du, 1, b_half_2, w);
    const double a2 = besov_from_spectra(P, Dth, 1, b_half_2, w);
    const double b1 = besov_from_spectra(P, Du, 0, b_one_0, w);
    const double b2 = besov_from_spectra(P, Dth, 0, b_half_0, w);
    const double c1 = besov_from_spectra(P, Du, 1, b_half_1, w);
    const double c2 = besov_from_spectra(P, Dth, 1, b_half_1, w);
    const double d1 = besov_from_spectra(P, Dth, 0, b_half_1, w);
    const double e1 = besov_from_spectra(P, Du, 3, b_half_0, w);
    const double e2 = besov_from_spectra(P, Dth, 3, b_half_0, w);
    const double f1 = besov_from_spectra(P, Du, 1, b_half_0, w);

    const double ot = 1.0 + u.t;
    return {std::pow(ot, 0.25) * (a1 + a2),
            std::sqrt(ot) * (b1 * b1 + b2 * b2 + (c1 + c2) * (c1 + c2)),
            c1 * c1 * c1 * c1,
            d1 * d1 * d1 * d1,
            e1 * (c1 + d1),
            e2 * f1};
}

double mu_rhs(const Field& u, const Field& theta, const WeightProfile& w,
              const PhaseState& phase, const DyadicPartition& P) {
    const auto g = mu_rhs_groups(u, theta, w, phase, P);
    double s = 0.0;
    for (double x : g) s += x;
    return s;
}

PhaseState advance_mu(PhaseState phase, double rhs, double dt) {
    if (!(dt > 0.0)) throw ConfigError("advance_mu: dt must be positive");
    if (!(rhs >= 0.0)) throw ConfigError("advance_mu: rhs must be nonnegative");
    phase.mu += dt * rhs;
    phase.mu_dot = rhs;
    phase.t += dt;
    if (phase.mu >= phase.delta / phase.lambda) phase.t_star_reached = true;
    phase.history.push_back({phase.t, phase.mu, phase.mu_dot});
    return phase;
}

bool convexity_check(const PhaseState& phase, double xi, double eta) {
    const double r = phase.radius();
    const double lhs = r * std::abs(xi);
    const double rhs = r * std::abs(xi - eta) + r * std::abs(eta);
    return lhs <= rhs + 1e-12 * (std::abs(lhs) + std::abs(rhs));
}

double measured_radius(const SpectralField& F) {
    const Grid& g = *F.grid;
    const int n_x = g.n_x(), n_y = g.n_y();
    constexpr double noise_floor = 1e-13;

    std::vector<double> xs, ys;
    for (int m = 0; m < n_x; ++m) {
        double amp = 0.0;
        for (int j = 0; j < n_y; ++j) amp += std::abs(F.at(m, j));
        if (amp <= noise_floor) continue;
        xs.push_back(std::abs(g.xi(m)));
        ys.push_back(-std::log(amp));
    }
    if (xs.size() < 6)
        throw SpectrumUnderresolved("measured_radius: fewer than 6 modes above the noise floor");

    const int n = static_cast<int>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < n; ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    const double denom = n * sxx - sx * sx;
    if (denom <= 0.0) throw SpectrumUnderresolved("measured_radius: degenerate mode set");
    return (n * sxy - sx * sy) / denom;
}

} // namespace blgv
