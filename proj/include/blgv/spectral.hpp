#pragma once

#include <complex>
#include <vector>

#include "blgv/grid.hpp"

namespace blgv {

/// Per-row complex tangential Fourier coefficients of a Field, m-major
/// storage, FFT bin order (bin m holds the signed wavenumber grid->xi(m)).
/// Normalized so that f(x_i) = sum_m coeffs[m] e^{i xi_m x_i}.
struct SpectralField {
    GridPtr grid;
    std::vector<std::complex<double>> c;  // c[m * n_y + j]
    double t = 0.0;

    std::complex<double>& at(int m, int j) {
        return c[static_cast<std::size_t>(m) * grid->n_y() + j];
    }
    std::complex<double> at(int m, int j) const {
        return c[static_cast<std::size_t>(m) * grid->n_y() + j];
    }

    static SpectralField zeros(GridPtr g, double t = 0.0);
};

/// Row-wise DFT in x; inverse_transform(forward_transform(f)) == f to 1e-12.
SpectralField forward_transform(const Field& f);

/// Exact inverse; rejects inputs whose conjugate symmetry defect exceeds
/// 1e-10 relative to the largest coefficient.
Field inverse_transform(const SpectralField& F);

/// Spectral tangential derivative (the sign-ambiguous Nyquist bin is zeroed).
Field d_dx(const Field& f);

/// 2/3-rule cutoff: modes with |signed m| > n_x/3 are dropped.
int dealias_cutoff(const Grid& g);
void dealias_in_place(SpectralField& F);
Field dealias(const Field& f);

} // namespace blgv
