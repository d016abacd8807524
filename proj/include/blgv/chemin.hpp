#pragma once

#include <vector>

#include "blgv/besov.hpp"

namespace blgv {

enum class TimeExp { L2, Linf };

/// Step-indexed Chemin-Lerner norm: the time integral (p = 2, left-rectangle
/// rule, optional nonnegative density) or running sup (p = inf) is taken per
/// dyadic block and derivative order before the weighted block sum.
/// Accumulators never decrease in t.
class CheminLernerAccumulator {
public:
    CheminLernerAccumulator(BesovSpec spec, TimeExp p, PartitionPtr partition);

    const BesovSpec& spec() const { return spec_; }
    TimeExp p() const { return p_; }
    double t() const { return t_; }

    /// Current norm value: sum_k 2^{ks} sum_i (per-block accumulator)^{1/p}.
    double value() const;

    friend CheminLernerAccumulator chemin_lerner_update_spectra(CheminLernerAccumulator acc,
                                                                const DerivSpectra& D, int base,
                                                                const WeightProfile& w, double dt,
                                                                double density);

private:
    BesovSpec spec_;
    TimeExp p_;
    PartitionPtr partition_;
    double t_ = 0.0;
    std::vector<std::vector<double>> acc_;  // [k - k_min][i]
};

/// One time-step update from a Field sample at the accumulator's current time.
CheminLernerAccumulator chemin_lerner_update(CheminLernerAccumulator acc, const Field& f,
                                             const WeightProfile& w, double dt,
                                             double density = 1.0);

/// Fast path reusing precomputed derivative spectra (offset base).
CheminLernerAccumulator chemin_lerner_update_spectra(CheminLernerAccumulator acc,
                                                     const DerivSpectra& D, int base,
                                                     const WeightProfile& w, double dt,
                                                     double density);

} // namespace blgv
