#include "blgv/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <utility>

#include "blgv/errors.hpp"

namespace blgv {

namespace {

// Shared FFTW plans per (n_x, n_y). Plans are created once with
// FFTW_ESTIMATE | FFTW_UNALIGNED so they execute on any caller buffer and
// give bit-identical results across runs.
class Planner {
public:
    static Planner& instance() {
        static Planner p;
        return p;
    }

    struct Plans {
        fftw_plan forward;
        fftw_plan backward;
    };

    Plans get(int n_x, int n_y) {
        std::lock_guard<std::mutex> lock(mu_);
        auto key = std::make_pair(n_x, n_y);
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;

        const std::size_t n = static_cast<std::size_t>(n_x) * n_y;
        fftw_complex* in = fftw_alloc_complex(n);
        fftw_complex* out = fftw_alloc_complex(n);
        const int sz[1] = {n_x};
        // x-major layout: the transform runs over x with stride n_y, one
        // transform per y row (dist 1).
        Plans p;
        p.forward = fftw_plan_many_dft(1, sz, n_y, in, nullptr, n_y, 1, out, nullptr, n_y, 1,
                                       FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
        p.backward = fftw_plan_many_dft(1, sz, n_y, in, nullptr, n_y, 1, out, nullptr, n_y, 1,
                                        FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
        fftw_free(in);
        fftw_free(out);
        plans_.emplace(key, p);
        return p;
    }

private:
    std::mutex mu_;
    std::map<std::pair<int, int>, Plans> plans_;
};

fftw_complex* as_fftw(std::complex<double>* p) { return reinterpret_cast<fftw_complex*>(p); }

} // namespace

SpectralField SpectralField::zeros(GridPtr g, double t) {
    SpectralField F;
    F.grid = std::move(g);
    F.c.assign(static_cast<std::size_t>(F.grid->n_x()) * F.grid->n_y(), {0.0, 0.0});
    F.t = t;
    return F;
}

SpectralField forward_transform(const Field& f) {
    const Grid& g = *f.grid;
    SpectralField F = SpectralField::zeros(f.grid, f.t);
    std::vector<std::complex<double>> in(f.v.size());
    for (std::size_t n = 0; n < f.v.size(); ++n) in[n] = f.v[n];
    auto plans = Planner::instance().get(g.n_x(), g.n_y());
    fftw_execute_dft(plans.forward, as_fftw(in.data()), as_fftw(F.c.data()));
    const double scale = 1.0 / g.n_x();
    for (auto& z : F.c) z *= scale;
    return F;
}

Field inverse_transform(const SpectralField& F) {
    const Grid& g = *F.grid;
    const int n_x = g.n_x(), n_y = g.n_y();

    double max_c = 0.0, defect = 0.0;
    for (int m = 0; m < n_x; ++m) {
        const int mneg = (n_x - m) % n_x;
        for (int j = 0; j < n_y; ++j) {
            const auto a = F.at(m, j);
            max_c = std::max(max_c, std::abs(a));
            defect = std::max(defect, std::abs(a - std::conj(F.at(mneg, j))));
        }
    }
    if (defect > 1e-10 * std::max(max_c, 1e-300) && defect > 1e-300)
        throw Error("inverse_transform: conjugate symmetry violated");

    std::vector<std::complex<double>> out(F.c.size());
    auto plans = Planner::instance().get(n_x, n_y);
    std::vector<std::complex<double>> in(F.c);
    fftw_execute_dft(plans.backward, as_fftw(in.data()), as_fftw(out.data()));

    Field f = Field::zeros(F.grid, F.t);
    for (std::size_t n = 0; n < f.v.size(); ++n) f.v[n] = out[n].real();
    return f;
}

Field d_dx(const Field& f) {
    SpectralField F = forward_transform(f);
    const Grid& g = *f.grid;
    const int n_x = g.n_x(), n_y = g.n_y();
    for (int m = 0; m < n_x; ++m) {
        const std::complex<double> ixi(0.0, m == n_x / 2 ? 0.0 : g.xi(m));
        for (int j = 0; j < n_y; ++j) F.at(m, j) *= ixi;
    }
    return inverse_transform(F);
}

int dealias_cutoff(const Grid& g) { return g.n_x() / 3; }

void dealias_in_place(SpectralField& F) {
    const Grid& g = *F.grid;
    const int n_x = g.n_x(), n_y = g.n_y(), K = dealias_cutoff(g);
    for (int m = 0; m < n_x; ++m) {
        const int ms = (m <= n_x / 2 - 1) ? m : m - n_x;
        if (std::abs(ms) <= K) continue;
        for (int j = 0; j < n_y; ++j) F.at(m, j) = 0.0;
    }
}

Field dealias(const Field& f) {
    SpectralField F = forward_transform(f);
    dealias_in_place(F);
    return inverse_transform(F);
}

} // namespace blgv
