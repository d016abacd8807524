#include "blgv/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "blgv/errors.hpp"

namespace blgv {

namespace {

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

// Fornberg weights: approximate derivatives 0..m at x0 from the given nodes.
// c is row-major [node][derivative order].
void fornberg_weights(double x0, const double* x, int n, int m, double* c) {
    const int cols = m + 1;
    std::fill(c, c + static_cast<std::size_t>(n) * cols, 0.0);
    double c1 = 1.0;
    double c4 = x[0] - x0;
    c[0] = 1.0;
    for (int i = 1; i < n; ++i) {
        const int mn = std::min(i, m);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = x[i] - x0;
        for (int j = 0; j < i; ++j) {
            const double c3 = x[i] - x[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k)
                    c[i * cols + k] = c1 * (k * c[(i - 1) * cols + k - 1] - c5 * c[(i - 1) * cols + k]) / c2;
                c[i * cols] = -c1 * c5 * c[(i - 1) * cols] / c2;
            }
            for (int k = mn; k >= 1; --k)
                c[j * cols + k] = (c4 * c[j * cols + k] - k * c[j * cols + k - 1]) / c3;
            c[j * cols] = c4 * c[j * cols] / c3;
        }
        c1 = c2;
    }
}

} // namespace

Grid::Grid(double L_x, int n_x, double y_max, std::vector<double> y)
    : L_x_(L_x), n_x_(n_x), y_max_(y_max), n_y_(static_cast<int>(y.size())),
      two_pi_over_L_(2.0 * std::numbers::pi / L_x), y_(std::move(y)) {
    if (n_x_ < 8 || !is_pow2(n_x_)) throw ConfigError("grid: N_x must be a power of two >= 8");
    if (n_y_ < 16) throw ConfigError("grid: N_y must be >= 16");
    if (!(L_x_ > 0.0) || !(y_max_ > 0.0)) throw ConfigError("grid: L_x and Y_max must be positive");
    if (y_.front() != 0.0 || y_.back() != y_max_)
        throw ConfigError("grid: y nodes must span [0, Y_max]");
    min_dy_ = y_max_;
    for (int j = 0; j + 1 < n_y_; ++j) {
        const double h = y_[j + 1] - y_[j];
        if (!(h > 0.0)) throw ConfigError("grid: y nodes must be strictly increasing");
        min_dy_ = std::min(min_dy_, h);
    }

    // 7-point Fornberg stencils, window clamped at the boundaries.
    std::array<double, static_cast<std::size_t>(stencil_width) * 4> c{};
    for (int order = 1; order <= 3; ++order) stencils_[order - 1].resize(n_y_);
    for (int j = 0; j < n_y_; ++j) {
        const int start = std::clamp(j - stencil_width / 2, 0, n_y_ - stencil_width);
        fornberg_weights(y_[j], y_.data() + start, stencil_width, 3, c.data());
        for (int order = 1; order <= 3; ++order) {
            Stencil s;
            s.start = start;
            double sum = 0.0;
            for (int p = 0; p < stencil_width; ++p) sum += (s.w[p] = c[p * 4 + order]);
            // consistency: derivative weights must annihilate constants exactly
            s.w[j - start] -= sum;
            stencils_[order - 1][j] = s;
        }
    }

    trapz_w_.assign(n_y_, 0.0);
    for (int j = 0; j + 1 < n_y_; ++j) {
        const double h = y_[j + 1] - y_[j];
        trapz_w_[j] += 0.5 * h;
        trapz_w_[j + 1] += 0.5 * h;
    }
}

std::shared_ptr<const Grid> Grid::uniform(double L_x, int n_x, double y_max, int n_y) {
    std::vector<double> y(n_y);
    for (int j = 0; j < n_y; ++j) y[j] = y_max * j / (n_y - 1);
    y.front() = 0.0;
    y.back() = y_max;
    return std::shared_ptr<const Grid>(new Grid(L_x, n_x, y_max, std::move(y)));
}

std::shared_ptr<const Grid> Grid::stretched(double L_x, int n_x, double y_max, int n_y,
                                            double ratio) {
    if (!(ratio > 0.0)) throw ConfigError("grid: stretch ratio must be positive");
    if (ratio == 1.0) return uniform(L_x, n_x, y_max, n_y);
    std::vector<double> y(n_y);
    // Geometric spacings normalized to reach y_max exactly.
    double sum = 0.0, h = 1.0;
    for (int j = 0; j + 1 < n_y; ++j, h *= ratio) sum += h;
    y[0] = 0.0;
    h = y_max / sum;
    for (int j = 1; j < n_y; ++j, h *= ratio) y[j] = y[j - 1] + h;
    y.back() = y_max;
    return std::shared_ptr<const Grid>(new Grid(L_x, n_x, y_max, std::move(y)));
}

Field Field::zeros(GridPtr g, double t) {
    Field f;
    f.grid = std::move(g);
    f.v.assign(static_cast<std::size_t>(f.grid->n_x()) * f.grid->n_y(), 0.0);
    f.t = t;
    return f;
}

Field Field::sample(GridPtr g, const std::function<double(double, double)>& fn, double t) {
    Field f = zeros(g, t);
    const auto& y = f.grid->y();
    for (int i = 0; i < f.grid->n_x(); ++i) {
        const double x = f.grid->x(i);
        for (int j = 0; j < f.grid->n_y(); ++j) f.at(i, j) = fn(x, y[j]);
    }
    f.validate_finite();
    return f;
}

Field Field::from_values(GridPtr g, std::vector<double> values, double t) {
    Field f;
    f.grid = std::move(g);
    if (values.size() != static_cast<std::size_t>(f.grid->n_x()) * f.grid->n_y())
        throw ConfigError("field: value count does not match grid");
    f.v = std::move(values);
    f.t = t;
    f.validate_finite();
    return f;
}

void Field::validate_finite() const {
    for (double x : v)
        if (!std::isfinite(x)) throw Error("field: non-finite entry");
}

bool same_grid(const Field& a, const Field& b) { return a.grid.get() == b.grid.get(); }

Field operator+(const Field& a, const Field& b) {
    Field r = a;
    for (std::size_t n = 0; n < r.v.size(); ++n) r.v[n] += b.v[n];
    return r;
}

Field operator-(const Field& a, const Field& b) {
    Field r = a;
    for (std::size_t n = 0; n < r.v.size(); ++n) r.v[n] -= b.v[n];
    return r;
}

Field operator*(double c, const Field& a) {
    Field r = a;
    for (double& x : r.v) x *= c;
    return r;
}

Field multiply(const Field& a, const Field& b) {
    Field r = a;
    for (std::size_t n = 0; n < r.v.size(); ++n) r.v[n] *= b.v[n];
    return r;
}

double max_abs(const Field& a) {
    double m = 0.0;
    for (double x : a.v) m = std::max(m, std::abs(x));
    return m;
}

Field d_dy(const Field& f, int order) {
    if (order < 1 || order > 3) throw ConfigError("d_dy: order must be 1, 2 or 3");
    const Grid& g = *f.grid;
    Field r = Field::zeros(f.grid, f.t);
    for (int i = 0; i < g.n_x(); ++i) {
        const double* col = &f.v[static_cast<std::size_t>(i) * g.n_y()];
        double* out = &r.v[static_cast<std::size_t>(i) * g.n_y()];
        for (int j = 0; j < g.n_y(); ++j) {
            const Grid::Stencil& s = g.stencil(order, j);
            double acc = 0.0;
            for (int p = 0; p < Grid::stencil_width; ++p) acc += s.w[p] * col[s.start + p];
            out[j] = acc;
        }
    }
    return r;
}

Field cumulative_integral_y(const Field& f) {
    const Grid& g = *f.grid;
    const auto& y = g.y();
    Field r = Field::zeros(f.grid, f.t);
    for (int i = 0; i < g.n_x(); ++i) {
        const double* col = &f.v[static_cast<std::size_t>(i) * g.n_y()];
        double* out = &r.v[static_cast<std::size_t>(i) * g.n_y()];
        double acc = 0.0;
        out[0] = 0.0;
        for (int j = 1; j < g.n_y(); ++j) {
            acc += 0.5 * (y[j] - y[j - 1]) * (col[j] + col[j - 1]);
            out[j] = acc;
        }
    }
    return r;
}

} // namespace blgv
