#pragma once

#include <utility>
#include <vector>

#include "blgv/grid.hpp"
#include "blgv/lpaley.hpp"
#include "blgv/spectral.hpp"
#include "blgv/weight.hpp"

namespace blgv {

/// Index set of a weighted Besov norm: ell^1 over dyadic blocks of
/// 2^{ks} sum_{i<=j} || e^Psi Delta_k d_y^i u ||_{L^2_+}.
struct BesovSpec {
    double s;
    int j;
    bool weighted = true;

    BesovSpec(double s_, int j_, bool weighted_ = true);
};

/// Row spectra of d_y^i f for i = 0..max_order, the shared input of every
/// norm evaluation. Phase multipliers commute with d_y, so a phased copy is
/// just a per-mode rescale.
struct DerivSpectra {
    GridPtr grid;
    double t = 0.0;
    std::vector<SpectralField> d;

    static DerivSpectra make(const Field& f, int max_order);
    int max_order() const { return static_cast<int>(d.size()) - 1; }
};

/// e^{radius |xi|} amplification of every derivative spectrum; throws
/// AnalyticityDeficit naming the first overflowing mode.
DerivSpectra apply_phase(const DerivSpectra& D, double radius);

/// || e^Psi F_sym ||_{L^2_+} with the block symbol of Delta_k; exact Riemann
/// sum in x (Parseval), trapezoid in y.
double block_l2(const DyadicPartition& P, const SpectralField& F, int k,
                const WeightProfile& w, bool weighted);

/// Besov norm of derivative orders base..base+spec.j of D.
double besov_from_spectra(const DyadicPartition& P, const DerivSpectra& D, int base,
                          const BesovSpec& spec, const WeightProfile& w);

double besov_norm(const Field& f, const BesovSpec& spec, const WeightProfile& w,
                  const DyadicPartition& P);

/// Both sides of the weighted Hardy inequality:
/// lhs = int |d_y Psi f|^2 e^{2 Psi},  rhs = int |d_y f|^2 e^{2 Psi}.
std::pair<double, double> hardy_weight_check(const Field& f, const WeightProfile& w);

} // namespace blgv
