#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "blgv/grid.hpp"
#include "blgv/spectral.hpp"

namespace blgv::testing {

// Random real field band-limited to |m| <= max_mode, Gaussian-decaying rows.
inline Field random_band_limited(GridPtr g, std::mt19937_64& rng, int max_mode,
                                 double y_width = 2.0) {
    std::uniform_real_distribution<double> amp(-1.0, 1.0);
    const int n_x = g->n_x(), n_y = g->n_y();
    std::vector<std::complex<double>> coef(max_mode + 1);
    Field f = Field::zeros(g);
    std::vector<std::vector<double>> profiles(max_mode + 1, std::vector<double>(n_y));
    for (int m = 0; m <= max_mode; ++m) {
        coef[m] = {amp(rng), m == 0 ? 0.0 : amp(rng)};
        const double w = y_width * (0.5 + 0.5 * std::abs(amp(rng)));
        for (int j = 0; j < n_y; ++j) {
            const double y = g->y()[j];
            profiles[m][j] = std::exp(-y * y / (w * w));
        }
    }
    for (int i = 0; i < n_x; ++i) {
        const double x = g->x(i);
        for (int j = 0; j < n_y; ++j) {
            double s = coef[0].real() * profiles[0][j];
            for (int m = 1; m <= max_mode; ++m) {
                const double ph = g->xi(m) * x;
                s += 2.0 * (coef[m].real() * std::cos(ph) - coef[m].imag() * std::sin(ph)) *
                     profiles[m][j];
            }
            f.at(i, j) = s;
        }
    }
    return f;
}

// Independent O(N^2) DFT oracle, same normalization as forward_transform.
inline std::vector<std::complex<double>> naive_dft_row(const Field& f, int j) {
    const auto& g = *f.grid;
    const int n = g.n_x();
    std::vector<std::complex<double>> out(n);
    for (int m = 0; m < n; ++m) {
        std::complex<double> acc = 0.0;
        for (int i = 0; i < n; ++i) {
            const double ph = -2.0 * M_PI * m * i / n;
            acc += f.at(i, j) * std::complex<double>(std::cos(ph), std::sin(ph));
        }
        out[m] = acc / double(n);
    }
    return out;
}

// Trapezoid quadrature of sampled values over the grid's y nodes.
inline double trapz_y(const Grid& g, const std::vector<double>& vals) {
    double acc = 0.0;
    for (int j = 0; j + 1 < g.n_y(); ++j)
        acc += 0.5 * (g.y()[j + 1] - g.y()[j]) * (vals[j] + vals[j + 1]);
    return acc;
}

inline double linf_diff(const Field& a, const Field& b) {
    double m = 0.0;
    for (std::size_t n = 0; n < a.v.size(); ++n) m = std::max(m, std::abs(a.v[n] - b.v[n]));
    return m;
}

// Least-squares slope of log(err) against log(h).
inline double loglog_slope(const std::vector<double>& h, const std::vector<double>& err) {
    const int n = static_cast<int>(h.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < n; ++i) {
        const double X = std::log(h[i]), Y = std::log(err[i]);
        sx += X;
        sy += Y;
        sxx += X * X;
        sxy += X * Y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace blgv::testing
