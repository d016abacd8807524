#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

namespace blgv {

/// Discretization of the half-plane: periodic tangential grid of n_x samples
/// over period L_x, and a truncated normal grid y[0..n_y-1] with y[0] = 0 and
/// y[n_y-1] = y_max. Finite-difference stencils (orders 1..3) are precomputed
/// per node from a 7-point window, so interior derivatives are at least
/// fourth order and boundary ones match.
class Grid {
public:
    static std::shared_ptr<const Grid> uniform(double L_x, int n_x, double y_max, int n_y);
    // Geometric spacing, h_{j+1} = ratio * h_j; ratio = 1 reproduces uniform.
    static std::shared_ptr<const Grid> stretched(double L_x, int n_x, double y_max, int n_y,
                                                 double ratio);

    double L_x() const { return L_x_; }
    int n_x() const { return n_x_; }
    double y_max() const { return y_max_; }
    int n_y() const { return n_y_; }
    const std::vector<double>& y() const { return y_; }

    double dx() const { return L_x_ / n_x_; }
    double x(int i) const { return i * dx(); }
    double min_dy() const { return min_dy_; }

    // Signed tangential wavenumber of FFT bin m in [0, n_x): xi = 2*pi*m'/L_x
    // with m' in [-n_x/2, n_x/2).
    double xi(int m) const {
        int ms = (m <= n_x_ / 2 - 1) ? m : m - n_x_;
        return two_pi_over_L_ * ms;
    }
    double xi_nyquist() const { return two_pi_over_L_ * (n_x_ / 2); }

    static constexpr int stencil_width = 7;
    struct Stencil {
        int start;                                  // first node of the window
        std::array<double, stencil_width> w;        // weights
    };
    const Stencil& stencil(int order, int node) const { return stencils_[order - 1][node]; }

    // Trapezoid weights for integrals over (0, y_max).
    const std::vector<double>& trapz_w() const { return trapz_w_; }

private:
    Grid(double L_x, int n_x, double y_max, std::vector<double> y);
    double L_x_;
    int n_x_;
    double y_max_;
    int n_y_;
    double two_pi_over_L_;
    double min_dy_;
    std::vector<double> y_;
    std::array<std::vector<Stencil>, 3> stencils_;  // [order-1][node]
    std::vector<double> trapz_w_;
};

using GridPtr = std::shared_ptr<const Grid>;

/// Real-valued sample on the (x, y) grid, x-major storage.
struct Field {
    GridPtr grid;
    std::vector<double> v;  // v[i * n_y + j]
    double t = 0.0;

    double& at(int i, int j) { return v[static_cast<std::size_t>(i) * grid->n_y() + j]; }
    double at(int i, int j) const { return v[static_cast<std::size_t>(i) * grid->n_y() + j]; }

    static Field zeros(GridPtr g, double t = 0.0);
    // Samples fn(x, y); rejects NaN/Inf.
    static Field sample(GridPtr g, const std::function<double(double, double)>& fn, double t = 0.0);
    // Wraps externally produced values; rejects NaN/Inf.
    static Field from_values(GridPtr g, std::vector<double> values, double t = 0.0);

    void validate_finite() const;
};

Field operator+(const Field& a, const Field& b);
Field operator-(const Field& a, const Field& b);
Field operator*(double c, const Field& a);
Field multiply(const Field& a, const Field& b);  // pointwise
double max_abs(const Field& a);
bool same_grid(const Field& a, const Field& b);

/// Normal derivative of order 1..3 by the grid's precomputed stencils.
Field d_dy(const Field& f, int order);

/// Trapezoid antiderivative in y with value 0 at y = 0; exact on
/// piecewise-linear integrands.
Field cumulative_integral_y(const Field& f);

} // namespace blgv
