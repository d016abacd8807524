#include "blgv/solver.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <string>

#include "blgv/besov.hpp"
#include "blgv/errors.hpp"
#include "blgv/lpaley.hpp"
#include "blgv/spectral.hpp"
#include "blgv/weight.hpp"

namespace blgv {

namespace {

constexpr double kBlowUpLimit = 1e6;

Field shift(const Field& f, double c) {
    Field r = f;
    for (double& x : r.v) x += c;
    return r;
}

double min_value(const Field& f) {
    double m = f.v[0];
    for (double x : f.v) m = std::min(m, x);
    return m;
}

// Banded backward-Euler solve of (I - dt a(y) Dyy) out = rhs per column,
// with the requested boundary rows. Bandwidth follows the 7-point stencils.
class ColumnDiffusionSolver {
public:
    ColumnDiffusionSolver(const Grid& g, bool neumann_bottom)
        : g_(g), neumann_bottom_(neumann_bottom), n_(g.n_y()) {}

    // a: frozen diffusion coefficient along the column; rhs solved in place.
    void solve(const double* a, double dt, double* col) {
        const int kl = Grid::stencil_width - 1, ku = Grid::stencil_width - 1;
        const int ldab = 2 * kl + ku + 1;
        std::vector<double> ab(static_cast<std::size_t>(ldab) * n_, 0.0);
        auto entry = [&](int i, int j) -> double& {
            // LAPACK band storage, column-major: AB(kl+ku+i-j, j) (0-based)
            return ab[static_cast<std::size_t>(j) * ldab + (kl + ku + i - j)];
        };

        for (int i = 1; i + 1 < n_; ++i) {
            const Grid::Stencil& s = g_.stencil(2, i);
            entry(i, i) = 1.0;
            for (int p = 0; p < Grid::stencil_width; ++p)
                entry(i, s.start + p) -= dt * a[i] * s.w[p];
        }
        if (neumann_bottom_) {
            const Grid::Stencil& s = g_.stencil(1, 0);
            for (int p = 0; p < Grid::stencil_width; ++p) entry(0, s.start + p) = s.w[p];
        } else {
            entry(0, 0) = 1.0;
        }
        entry(n_ - 1, n_ - 1) = 1.0;
        col[0] = neumann_bottom_ ? 0.0 : 0.0;
        col[n_ - 1] = 0.0;

        std::vector<lapack_int> ipiv(n_);
        const lapack_int info = LAPACKE_dgbsv(LAPACK_COL_MAJOR, n_, kl, ku, 1, ab.data(), ldab,
                                              ipiv.data(), col, n_);
        if (info != 0) throw Error("implicit diffusion solve failed, dgbsv info=" +
                                   std::to_string(info));
    }

private:
    const Grid& g_;
    bool neumann_bottom_;
    int n_;
};

void check_health(const Field& u, const Field& theta, double t) {
    for (double x : u.v)
        if (!std::isfinite(x) || std::abs(x) > kBlowUpLimit)
            throw BlowUp(t, "blow-up suspected at t=" + std::to_string(t));
    for (double x : theta.v)
        if (!std::isfinite(x) || std::abs(x) > kBlowUpLimit)
            throw BlowUp(t, "blow-up suspected at t=" + std::to_string(t));
}

} // namespace

Field impose_u_rows(Field f) {
    const int n_y = f.grid->n_y();
    for (int i = 0; i < f.grid->n_x(); ++i) {
        f.at(i, 0) = 0.0;
        f.at(i, n_y - 1) = 0.0;
    }
    return f;
}

Field impose_theta_rows(Field f) {
    const Grid& g = *f.grid;
    const Grid::Stencil& st = g.stencil(1, 0);
    for (int i = 0; i < g.n_x(); ++i) {
        f.at(i, g.n_y() - 1) = 0.0;
        double acc = 0.0;
        for (int p = 1; p < Grid::stencil_width; ++p) acc += st.w[p] * f.at(i, st.start + p);
        f.at(i, 0) = -acc / st.w[0];
    }
    return f;
}

Field recover_v(const Field& u, const Field& theta) {
    if (!same_grid(u, theta)) throw ConfigError("recover_v: fields on different grids");
    const Field dyth = d_dy(theta, 1);
    double worst = 0.0;
    for (int i = 0; i < u.grid->n_x(); ++i) worst = std::max(worst, std::abs(dyth.at(i, 0)));
    if (worst > 1e-8)
        throw CompatibilityError("recover_v: d_y theta at y=0 is " + std::to_string(worst));

    const Field uy = d_dy(u, 1);
    Field v = cumulative_integral_y(dealias(multiply(uy, uy))) - cumulative_integral_y(d_dx(u));
    v = v + dyth;
    v.t = u.t;
    return v;
}

SolveState make_state(Field u0, Field theta0, double nu, double theta_e) {
    if (!(theta_e > 0.0)) throw ConfigError("solver: theta_E must be positive");
    if (!(nu >= 0.0)) throw ConfigError("solver: nu must be nonnegative");
    SolveState s;
    s.v = recover_v(u0, theta0);
    s.u = std::move(u0);
    s.theta = std::move(theta0);
    s.t = s.u.t;
    s.nu = nu;
    s.theta_e = theta_e;
    return s;
}

double choose_dt(const SolveState& s, const StepControl& ctl) {
    double dt = ctl.dt_cap;
    const double mu = max_abs(s.u), mv = max_abs(s.v);
    if (mu > 0.0) dt = std::min(dt, ctl.safety * s.u.grid->dx() / mu);
    if (mv > 0.0) dt = std::min(dt, ctl.safety * s.u.grid->min_dy() / mv);
    return dt;
}

SolveState step(const SolveState& s, const Forcing* forcing, const StepControl& ctl) {
    const Grid& g = *s.u.grid;
    const int n_x = g.n_x(), n_y = g.n_y();

    check_health(s.u, s.theta, s.t);
    const double floor = s.theta_e / 2.0;
    if (min_value(s.theta) + s.theta_e < floor)
        throw PositivityBreach(s.t, "temperature floor breached at t=" + std::to_string(s.t));

    const double dt = ctl.adaptive ? choose_dt(s, ctl) : ctl.dt_cap;
    if (!(dt > 0.0)) throw ConfigError("step: nonpositive dt");

    const Field v = recover_v(s.u, s.theta);
    const Field ux = d_dx(s.u), uy = d_dy(s.u, 1);
    const Field thx = d_dx(s.theta), thy = d_dy(s.theta, 1);
    const Field th_plus = shift(s.theta, s.theta_e);

    Field eu = Field::zeros(s.u.grid) - dealias(multiply(s.u, ux)) - dealias(multiply(v, uy));
    const Field uy2 = dealias(multiply(uy, uy));
    Field eth = dealias(multiply(th_plus, uy2)) - dealias(multiply(s.u, thx)) -
                dealias(multiply(v, thy));
    if (forcing) {
        eu = eu + dealias(forcing->f_u(s.u.grid, s.t));
        eth = eth + dealias(forcing->f_theta(s.u.grid, s.t));
    }

    Field u_star = s.u + dt * eu;
    Field th_star = s.theta + dt * eth;

    if (s.nu > 0.0) {
        auto damp = [&](Field& f) {
            SpectralField F = forward_transform(f);
            for (int m = 0; m < n_x; ++m) {
                const double xi = g.xi(m);
                const double fac = 1.0 / (1.0 + dt * s.nu * xi * xi);
                for (int j = 0; j < n_y; ++j) F.at(m, j) *= fac;
            }
            f = inverse_transform(F);
        };
        damp(u_star);
        damp(th_star);
    }

    // implicit y-diffusion with the coefficient frozen at step start
    ColumnDiffusionSolver dirichlet(g, false), neumann(g, true);
    for (int i = 0; i < n_x; ++i) {
        const double* a = &th_plus.v[static_cast<std::size_t>(i) * n_y];
        dirichlet.solve(a, dt, &u_star.v[static_cast<std::size_t>(i) * n_y]);
        neumann.solve(a, dt, &th_star.v[static_cast<std::size_t>(i) * n_y]);
    }

    {
        SpectralField U = forward_transform(u_star);
        SpectralField TH = forward_transform(th_star);
        dealias_in_place(U);
        dealias_in_place(TH);
        u_star = inverse_transform(U);
        th_star = inverse_transform(TH);
    }
    for (int i = 0; i < n_x; ++i) {
        u_star.at(i, 0) = 0.0;
        u_star.at(i, n_y - 1) = 0.0;
        th_star.at(i, n_y - 1) = 0.0;
    }

    SolveState out;
    out.t = s.t + dt;
    u_star.t = th_star.t = out.t;
    check_health(u_star, th_star, out.t);
    out.v = recover_v(u_star, th_star);
    out.u = std::move(u_star);
    out.theta = std::move(th_star);
    out.nu = s.nu;
    out.theta_e = s.theta_e;
    out.dt = dt;
    out.step_index = s.step_index + 1;
    return out;
}

InitialData make_initial_data(GridPtr g, double delta, double epsilon, double theta_e,
                              std::uint64_t seed, double u0_norm, int modes) {
    if (!(delta > 0.0)) throw ConfigError("initial data: delta must be positive");
    if (!(theta_e > 0.0)) throw ConfigError("initial data: theta_E must be positive");
    if (!(epsilon >= 0.0) || epsilon >= theta_e)
        throw ConfigError("initial data: epsilon must satisfy 0 <= epsilon < theta_E");
    if (!(u0_norm >= 0.0)) throw ConfigError("initial data: u0_norm must be nonnegative");

    const int n_x = g->n_x(), n_y = g->n_y();
    const int M = std::min(modes, dealias_cutoff(*g));
    const double gamma = 2.0 * theta_e;

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> mag(0.5, 1.0);
    std::uniform_real_distribution<double> arg(0.0, 2.0 * std::numbers::pi);

    auto build = [&](bool odd_profile) {
        std::vector<std::complex<double>> coef(M + 1);
        coef[0] = {mag(rng) * (arg(rng) < std::numbers::pi ? 1.0 : -1.0), 0.0};
        for (int m = 1; m <= M; ++m) {
            const double a = mag(rng) * std::exp(-2.0 * delta * std::abs(g->xi(m)));
            const double ph = arg(rng);
            coef[m] = {a * std::cos(ph), a * std::sin(ph)};
        }
        Field f = Field::zeros(g);
        for (int i = 0; i < n_x; ++i) {
            const double x = g->x(i);
            for (int j = 0; j < n_y; ++j) {
                const double y = g->y()[j];
                const double prof = (odd_profile ? y : 1.0) * std::exp(-y * y / gamma);
                double sum = coef[0].real();
                for (int m = 1; m <= M; ++m) {
                    const double ph = g->xi(m) * x;
                    sum += 2.0 * (coef[m].real() * std::cos(ph) - coef[m].imag() * std::sin(ph));
                }
                f.at(i, j) = sum * prof;
            }
        }
        return f;
    };

    Field u0 = impose_u_rows(build(true));
    Field th0 = impose_theta_rows(build(false));

    const DyadicPartition P(g);
    const WeightProfile w0(g, theta_e, 0.0);
    const BesovSpec b11(1.0, 1), b_half0(0.5, 0);

    auto amplified_norm = [&](const Field& f, const BesovSpec& spec, int base, int max_order) {
        const auto D = apply_phase(DerivSpectra::make(f, max_order), delta);
        return besov_from_spectra(P, D, base, spec, w0);
    };

    const double nu0 = amplified_norm(u0, b11, 0, 1);
    const double nth0 = amplified_norm(th0, b11, 0, 1);
    u0 = (nu0 > 0.0 ? u0_norm / nu0 : 0.0) * u0;
    th0 = (nth0 > 0.0 ? 0.5 * epsilon / nth0 : 0.0) * th0;

    // construction self-checks: compatibility rows and finiteness of the
    // amplified norms demanded of admissible data
    for (int i = 0; i < n_x; ++i) {
        if (u0.at(i, 0) != 0.0) throw CompatibilityError("initial data: u not zero at y=0");
        const Grid::Stencil& st = g->stencil(1, 0);
        double dy0 = 0.0;
        for (int p = 0; p < Grid::stencil_width; ++p) dy0 += st.w[p] * th0.at(i, st.start + p);
        if (std::abs(dy0) > 1e-10)
            throw CompatibilityError("initial data: d_y theta not zero at y=0");
    }
    const double check_th = amplified_norm(th0, b11, 0, 1);
    if (std::abs(check_th - 0.5 * epsilon) > 1e-10 * std::max(1.0, epsilon))
        throw Error("initial data: smallness normalization failed");
    if (!std::isfinite(amplified_norm(u0, b_half0, 2, 2)) ||
        !std::isfinite(amplified_norm(th0, b_half0, 2, 2)))
        throw Error("initial data: second-derivative amplified norm not finite");

    InitialData data;
    data.u0 = std::move(u0);
    data.theta0 = std::move(th0);
    data.delta = delta;
    data.epsilon = epsilon;
    return data;
}

} // namespace blgv
