#include "blgv/chemin.hpp"

#include <cmath>

#include "blgv/errors.hpp"

namespace blgv {

CheminLernerAccumulator::CheminLernerAccumulator(BesovSpec spec, TimeExp p, PartitionPtr partition)
    : spec_(spec), p_(p), partition_(std::move(partition)) {
    const int nk = partition_->k_max() - partition_->k_min() + 1;
    acc_.assign(nk, std::vector<double>(spec_.j + 1, 0.0));
}

double CheminLernerAccumulator::value() const {
    double norm = 0.0;
    for (int k = partition_->k_min(); k <= partition_->k_max(); ++k) {
        const auto& a = acc_[k - partition_->k_min()];
        double blocks = 0.0;
        for (double x : a) blocks += (p_ == TimeExp::L2) ? std::sqrt(x) : x;
        norm += partition_->pow2s(k, spec_.s) * blocks;
    }
    return norm;
}

CheminLernerAccumulator chemin_lerner_update_spectra(CheminLernerAccumulator acc,
                                                     const DerivSpectra& D, int base,
                                                     const WeightProfile& w, double dt,
                                                     double density) {
    if (!(dt > 0.0)) throw ConfigError("chemin-lerner: dt must be positive");
    if (!(density >= 0.0)) throw ConfigError("chemin-lerner: density must be nonnegative");
    const DyadicPartition& P = *acc.partition_;
    for (int k = P.k_min(); k <= P.k_max(); ++k) {
        auto& a = acc.acc_[k - P.k_min()];
        for (int i = 0; i <= acc.spec_.j; ++i) {
            const double b = block_l2(P, D.d[base + i], k, w, acc.spec_.weighted);
            if (acc.p_ == TimeExp::L2)
                a[i] += dt * density * b * b;
            else
                a[i] = std::max(a[i], b);
        }
    }
    acc.t_ += dt;
    return acc;
}

CheminLernerAccumulator chemin_lerner_update(CheminLernerAccumulator acc, const Field& f,
                                             const WeightProfile& w, double dt, double density) {
    const auto D = DerivSpectra::make(f, acc.spec().j);
    return chemin_lerner_update_spectra(std::move(acc), D, 0, w, dt, density);
}

} // namespace blgv
