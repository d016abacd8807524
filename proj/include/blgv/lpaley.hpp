#pragma once

#include <memory>
#include <vector>

#include "blgv/grid.hpp"
#include "blgv/spectral.hpp"

namespace blgv {

/// Dyadic partition of the tangential frequency line. chi is a smooth cutoff
/// equal to 1 for |xi| <= 3/4 and 0 for |xi| >= 4/3 (mollified-step profile);
/// phi(xi) = chi(xi/2) - chi(xi) lives on 3/4 <= |xi| <= 8/3. Scaling by
/// powers of two is exact in floating point, so
///   chi(xi) + sum_{k=0..k_max} phi(2^{-k} xi) = 1
/// telescopes to the last bit on every grid wavenumber.
class DyadicPartition {
public:
    explicit DyadicPartition(GridPtr grid);

    static double chi(double xi);
    static double phi(double xi);

    int k_min() const { return -1; }
    int k_max() const { return k_max_; }
    const Grid& grid() const { return *grid_; }
    GridPtr grid_ptr() const { return grid_; }

    /// Block symbol of Delta_k at FFT bin m (zero for k <= -2 or k > k_max).
    double block_symbol(int k, int m) const;
    /// Low-pass symbol of S_k at bin m. For k < 0 this is zero: the periodic
    /// mean mode belongs to Delta_{-1}, so S_k = sum_{k' <= k-1} Delta_{k'}.
    double low_pass_symbol(int k, int m) const;

    double pow2s(int k, double s) const;  // 2^{k s}

private:
    GridPtr grid_;
    int k_max_;
    std::vector<std::vector<double>> sym_;  // [k - k_min][m]
};

using PartitionPtr = std::shared_ptr<const DyadicPartition>;

/// Delta_k F: multiplies row spectra by the block symbol. Blocks with
/// k <= -2 vanish identically.
SpectralField dyadic_block(const DyadicPartition& P, const SpectralField& F, int k);

/// S_k F: low-frequency cut at scale 2^k; identity on band-limited data for
/// large k.
SpectralField low_pass(const DyadicPartition& P, const SpectralField& F, int k);

struct BonyParts {
    Field Tfg;  // sum_k S_{k-1} f * Delta_k g
    Field Tgf;
    Field Rfg;  // sum over |k-k'| <= 1
};

/// Paraproduct split of the pointwise product fg; the three parts sum back
/// to fg to round-off.
BonyParts bony_decompose(const DyadicPartition& P, const Field& f, const Field& g);

} // namespace blgv
