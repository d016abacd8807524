#pragma once

#include <array>
#include <vector>

#include "blgv/besov.hpp"

namespace blgv {

struct MuSample {
    double t;
    double mu;
    double mu_dot;
};

/// State of the shrinking-radius multiplier: the current radius is
/// delta - lambda * mu(t), and T* is the first time mu reaches delta/lambda.
struct PhaseState {
    double delta;
    double lambda;
    double t = 0.0;
    double mu = 0.0;
    double mu_dot = 0.0;
    bool t_star_reached = false;
    std::vector<MuSample> history;

    PhaseState(double delta_, double lambda_);
    double radius() const { return delta - lambda * mu; }
};

/// coeffs[m] <- e^{radius |xi_m|} coeffs[m]; throws AnalyticityDeficit naming
/// the first mode whose amplified coefficient leaves the finite range.
SpectralField apply_phase(const SpectralField& F, double radius);

/// The six additive groups of the radius-loss rate (weighted spaces, phase
/// radius delta - lambda mu, pair norms as sums):
///   [0] <t>^{1/4} ||(d_y u, d_y th)||_{B^{1/2,2}}
///   [1] <t>^{1/2} (||u||^2_{B^{1,0}} + ||th||^2_{B^{1/2,0}} + ||(d_y u, d_y th)||^2_{B^{1/2,1}})
///   [2] ||d_y u||^4_{B^{1/2,1}}
///   [3] ||th||^4_{B^{1/2,1}}
///   [4] ||d_y^3 u||_{B^{1/2,0}} (||d_y u||_{B^{1/2,1}} + ||th||_{B^{1/2,1}})
///   [5] ||d_y^3 th||_{B^{1/2,0}} ||d_y u||_{B^{1/2,0}}
std::array<double, 6> mu_rhs_groups(const Field& u, const Field& theta, const WeightProfile& w,
                                    const PhaseState& phase, const DyadicPartition& P);

/// Same groups from already-phased derivative spectra (orders 0..3).
std::array<double, 6> mu_rhs_groups_spectra(const DerivSpectra& Du, const DerivSpectra& Dth,
                                            double t, const WeightProfile& w,
                                            const DyadicPartition& P);

double mu_rhs(const Field& u, const Field& theta, const WeightProfile& w,
              const PhaseState& phase, const DyadicPartition& P);

/// Explicit Euler step of mu; flags T* once mu >= delta/lambda.
PhaseState advance_mu(PhaseState phase, double rhs, double dt);

/// Phi(t, xi) <= Phi(t, xi - eta) + Phi(t, eta) for the current radius.
bool convexity_check(const PhaseState& phase, double xi, double eta);

/// Empirical e^{-rho |xi|} decay rate: least-squares slope of
/// -log(row-summed |coeffs|) against |xi| over modes above the 1e-13 floor.
/// Throws SpectrumUnderresolved with fewer than 6 usable modes.
double measured_radius(const SpectralField& F);

} // namespace blgv
