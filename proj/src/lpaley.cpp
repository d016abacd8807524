#include "blgv/lpaley.hpp"

#include <cmath>

#include "blgv/errors.hpp"

namespace blgv {

namespace {

// C-infinity step: 0 for s <= 0, 1 for s >= 1.
double smooth_step(double s) {
    if (s <= 0.0) return 0.0;
    if (s >= 1.0) return 1.0;
    const double a = std::exp(-1.0 / s);
    const double b = std::exp(-1.0 / (1.0 - s));
    return a / (a + b);
}

constexpr double kInner = 0.75;        // chi == 1 inside
constexpr double kOuter = 4.0 / 3.0;   // chi == 0 outside

} // namespace

double DyadicPartition::chi(double xi) {
    const double r = std::abs(xi);
    return smooth_step((kOuter - r) / (kOuter - kInner));
}

double DyadicPartition::phi(double xi) { return chi(0.5 * xi) - chi(xi); }

DyadicPartition::DyadicPartition(GridPtr grid) : grid_(std::move(grid)) {
    const double xi_max = grid_->xi_nyquist();
    k_max_ = std::max(0, static_cast<int>(std::ceil(std::log2(xi_max * 4.0 / 3.0))));
    const int n_x = grid_->n_x();
    sym_.assign(k_max_ + 2, std::vector<double>(n_x, 0.0));
    for (int m = 0; m < n_x; ++m) {
        const double axi = std::abs(grid_->xi(m));
        sym_[0][m] = chi(axi);
        for (int k = 0; k <= k_max_; ++k) sym_[k + 1][m] = phi(std::ldexp(axi, -k));
    }
}

double DyadicPartition::block_symbol(int k, int m) const {
    if (k < -1 || k > k_max_) return 0.0;
    return sym_[k + 1][m];
}

double DyadicPartition::low_pass_symbol(int k, int m) const {
    // On the periodic grid the mean mode lives in every chi(2^{-k} xi) but in
    // no block below Delta_{-1}; S_k must equal the partial block sum
    // sum_{k' <= k-1} Delta_{k'}, which vanishes for k < 0.
    if (k < 0) return 0.0;
    return chi(std::ldexp(std::abs(grid_->xi(m)), -k));
}

double DyadicPartition::pow2s(int k, double s) const { return std::pow(2.0, k * s); }

namespace {

SpectralField apply_symbol(const SpectralField& F, const DyadicPartition& P,
                           double (DyadicPartition::*sym)(int, int) const, int k) {
    SpectralField out = SpectralField::zeros(F.grid, F.t);
    const int n_x = F.grid->n_x(), n_y = F.grid->n_y();
    for (int m = 0; m < n_x; ++m) {
        const double s = (P.*sym)(k, m);
        if (s == 0.0) continue;
        for (int j = 0; j < n_y; ++j) out.at(m, j) = s * F.at(m, j);
    }
    return out;
}

} // namespace

SpectralField dyadic_block(const DyadicPartition& P, const SpectralField& F, int k) {
    if (k <= -2) return SpectralField::zeros(F.grid, F.t);
    return apply_symbol(F, P, &DyadicPartition::block_symbol, k);
}

SpectralField low_pass(const DyadicPartition& P, const SpectralField& F, int k) {
    return apply_symbol(F, P, &DyadicPartition::low_pass_symbol, k);
}

BonyParts bony_decompose(const DyadicPartition& P, const Field& f, const Field& g) {
    if (!same_grid(f, g)) throw ConfigError("bony_decompose: fields on different grids");
    const SpectralField F = forward_transform(f);
    const SpectralField G = forward_transform(g);

    const int k_lo = P.k_min(), k_hi = P.k_max();
    std::vector<Field> df, dg;   // Delta_k blocks in physical space
    df.reserve(k_hi - k_lo + 1);
    dg.reserve(k_hi - k_lo + 1);
    for (int k = k_lo; k <= k_hi; ++k) {
        df.push_back(inverse_transform(dyadic_block(P, F, k)));
        dg.push_back(inverse_transform(dyadic_block(P, G, k)));
    }
    auto block = [&](const std::vector<Field>& d, int k) -> const Field& { return d[k - k_lo]; };

    BonyParts parts{Field::zeros(f.grid, f.t), Field::zeros(f.grid, f.t),
                    Field::zeros(f.grid, f.t)};
    for (int k = k_lo; k <= k_hi; ++k) {
        const Field sf = inverse_transform(low_pass(P, F, k - 1));
        const Field sg = inverse_transform(low_pass(P, G, k - 1));
        for (std::size_t n = 0; n < parts.Tfg.v.size(); ++n) {
            parts.Tfg.v[n] += sf.v[n] * block(dg, k).v[n];
            parts.Tgf.v[n] += sg.v[n] * block(df, k).v[n];
        }
        for (int kp = std::max(k_lo, k - 1); kp <= std::min(k_hi, k + 1); ++kp)
            for (std::size_t n = 0; n < parts.Rfg.v.size(); ++n)
                parts.Rfg.v[n] += block(df, kp).v[n] * block(dg, k).v[n];
    }
    return parts;
}

} // namespace blgv
