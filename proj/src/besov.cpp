#include "blgv/besov.hpp"

#include <cmath>
#include <string>

#include "blgv/errors.hpp"

namespace blgv {

BesovSpec::BesovSpec(double s_, int j_, bool weighted_) : s(s_), j(j_), weighted(weighted_) {
    if (j < 0 || j > 2) throw ConfigError("besov: derivative count j must be 0, 1 or 2");
    if (!std::isfinite(s)) throw ConfigError("besov: s must be finite");
}

DerivSpectra DerivSpectra::make(const Field& f, int max_order) {
    if (max_order < 0 || max_order > 3) throw ConfigError("deriv spectra: order must be 0..3");
    DerivSpectra D;
    D.grid = f.grid;
    D.t = f.t;
    D.d.reserve(max_order + 1);
    D.d.push_back(forward_transform(f));
    for (int i = 1; i <= max_order; ++i) D.d.push_back(forward_transform(d_dy(f, i)));
    return D;
}

DerivSpectra apply_phase(const DerivSpectra& D, double radius) {
    if (!(radius >= 0.0)) throw ConfigError("apply_phase: radius must be nonnegative");
    DerivSpectra out = D;
    const int n_x = D.grid->n_x(), n_y = D.grid->n_y();
    for (int m = 0; m < n_x; ++m) {
        const double amp = std::exp(radius * std::abs(D.grid->xi(m)));
        for (auto& S : out.d) {
            for (int j = 0; j < n_y; ++j) {
                auto z = amp * S.at(m, j);
                if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
                    throw AnalyticityDeficit(
                        m, "analyticity deficit: amplified coefficient overflow at mode " +
                               std::to_string(m));
                S.at(m, j) = z;
            }
        }
    }
    return out;
}

double block_l2(const DyadicPartition& P, const SpectralField& F, int k, const WeightProfile& w,
                bool weighted) {
    const Grid& g = *F.grid;
    const int n_x = g.n_x(), n_y = g.n_y();
    double acc = 0.0;
    for (int j = 0; j < n_y; ++j) {
        double row = 0.0;
        for (int m = 0; m < n_x; ++m) {
            const double s = P.block_symbol(k, m);
            if (s == 0.0) continue;
            row += s * s * std::norm(F.at(m, j));
        }
        const double wj = weighted ? w.e_2psi[j] : 1.0;
        acc += g.trapz_w()[j] * wj * row;
    }
    acc *= g.L_x();
    if (!std::isfinite(acc)) throw InsufficientDecay("besov: weighted block norm overflow");
    return std::sqrt(acc);
}

double besov_from_spectra(const DyadicPartition& P, const DerivSpectra& D, int base,
                          const BesovSpec& spec, const WeightProfile& w) {
    if (base + spec.j > D.max_order())
        throw ConfigError("besov: derivative spectra do not reach the requested order");
    double norm = 0.0;
    for (int k = P.k_min(); k <= P.k_max(); ++k) {
        double blocks = 0.0;
        for (int i = 0; i <= spec.j; ++i)
            blocks += block_l2(P, D.d[base + i], k, w, spec.weighted);
        norm += P.pow2s(k, spec.s) * blocks;
    }
    return norm;
}

double besov_norm(const Field& f, const BesovSpec& spec, const WeightProfile& w,
                  const DyadicPartition& P) {
    return besov_from_spectra(P, DerivSpectra::make(f, spec.j), 0, spec, w);
}

std::pair<double, double> hardy_weight_check(const Field& f, const WeightProfile& w) {
    const Grid& g = *f.grid;
    const int n_x = g.n_x(), n_y = g.n_y();

    // decay gate: the top row must be weight-negligible or the truncated
    // integral does not represent the half-line one
    double top = 0.0, global = 0.0;
    for (int i = 0; i < n_x; ++i) {
        for (int j = 0; j < n_y; ++j) {
            const double a = std::abs(f.at(i, j)) * w.e_psi[j];
            global = std::max(global, a);
            if (j >= n_y - 2) top = std::max(top, a);
        }
    }
    if (top > 1e-6 * global)
        throw InsufficientDecay("hardy check: field does not decay at Y_max under the weight");

    const Field dyf = d_dy(f, 1);
    double lhs = 0.0, rhs = 0.0;
    for (int j = 0; j < n_y; ++j) {
        double rl = 0.0, rr = 0.0;
        for (int i = 0; i < n_x; ++i) {
            const double u = f.at(i, j);
            const double du = dyf.at(i, j);
            rl += w.dy_psi[j] * w.dy_psi[j] * u * u;
            rr += du * du;
        }
        lhs += g.trapz_w()[j] * w.e_2psi[j] * rl * g.dx();
        rhs += g.trapz_w()[j] * w.e_2psi[j] * rr * g.dx();
    }
    if (!std::isfinite(lhs) || !std::isfinite(rhs))
        throw InsufficientDecay("hardy check: weighted integral overflow");
    return {lhs, rhs};
}

} // namespace blgv
