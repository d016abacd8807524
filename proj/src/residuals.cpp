#include "blgv/residuals.hpp"

#include <cmath>

#include "blgv/errors.hpp"
#include "blgv/spectral.hpp"

namespace blgv {

namespace {

Field shift(const Field& f, double c) {
    Field r = f;
    for (double& x : r.v) x += c;
    return r;
}

} // namespace

ResidualValue derived_equation_residual(const SolveState& prev, const SolveState& next,
                                        DerivedEq which, const Forcing* forcing) {
    if (!same_grid(prev.u, next.u))
        throw ConfigError("derived residual: states on different grids");
    const double dt = next.t - prev.t;
    if (!(dt > 0.0)) throw ConfigError("derived residual: states not consecutive");
    const GridPtr g = prev.u.grid;
    const double tm = 0.5 * (prev.t + next.t);
    const double te = prev.theta_e;

    const Field u = 0.5 * (prev.u + next.u);
    const Field th = 0.5 * (prev.theta + next.theta);
    const Field th_plus = shift(th, te);

    const Field ubar = d_dy(u, 1);               // d_y u
    const Field w2 = d_dy(u, 2);                 // d_y^2 u
    const Field w3 = d_dy(u, 3);                 // d_y^3 u
    const Field thbar = d_dy(th, 1);             // d_y theta
    const Field s2 = d_dy(th, 2);                // d_y^2 theta
    const Field s3 = d_dy(th, 3);                // d_y^3 theta
    const Field ux = d_dx(u);
    const Field thx = d_dx(th);
    const Field int_ux = cumulative_integral_y(ux);
    const Field int_uy2 = cumulative_integral_y(multiply(ubar, ubar));

    Field res = Field::zeros(g);
    double boundary = 0.0;

    switch (which) {
        case DerivedEq::dy_u: {
            const Field dt_ubar = (1.0 / dt) * (d_dy(next.u, 1) - d_dy(prev.u, 1));
            res = dt_ubar + multiply(u, d_dx(ubar)) + multiply(ubar, s2) +
                  multiply(ubar, multiply(ubar, ubar)) - multiply(int_ux, w2) +
                  multiply(int_uy2, w2) - multiply(th_plus, w3);
            if (forcing) res = res - d_dy(forcing->f_u(g, tm), 1);
            break;
        }
        case DerivedEq::dy_theta: {
            const Field dt_thbar = (1.0 / dt) * (d_dy(next.theta, 1) - d_dy(prev.theta, 1));
            res = dt_thbar + multiply(ubar, thx) + multiply(u, d_dx(thbar)) -
                  multiply(thbar, ux) + multiply(thbar, s2) - multiply(int_ux, s2) +
                  multiply(int_uy2, s2) - multiply(th_plus, s3) -
                  2.0 * multiply(th_plus, multiply(ubar, w2));
            if (forcing) res = res - d_dy(forcing->f_theta(g, tm), 1);
            break;
        }
        case DerivedEq::dyy_u: {
            const Field dt_w = (1.0 / dt) * (d_dy(next.u, 2) - d_dy(prev.u, 2));
            const Field coeff_w =
                multiply(4.0 * ubar, ubar) + s2 - ux;  // -d_x u + 4 (d_y u)^2 + d_y^2 theta
            const Field transport = int_uy2 - int_ux - thbar;
            res = dt_w + multiply(u, d_dx(w2)) +
                  multiply(d_dx(ubar) + s3, ubar) + multiply(coeff_w, w2) +
                  multiply(transport, w3) - multiply(th_plus, d_dy(w2, 2));
            if (forcing) res = res - d_dy(forcing->f_u(g, tm), 2);
            break;
        }
        case DerivedEq::dyy_theta: {
            const Field dt_s = (1.0 / dt) * (d_dy(next.theta, 2) - d_dy(prev.theta, 2));
            const Field coeff_s = s2 + multiply(ubar, ubar) - 2.0 * ux;
            const Field transport = int_uy2 - int_ux + thbar;
            const Field flux = multiply(th_plus, s3) - multiply(ubar, thx);
            res = dt_s + multiply(ubar, d_dx(thbar)) - multiply(thbar, d_dx(ubar)) +
                  multiply(u, d_dx(s2)) + multiply(coeff_s, s2) + multiply(transport, s3) -
                  2.0 * multiply(thbar, multiply(ubar, w2)) -
                  2.0 * multiply(th_plus, multiply(w2, w2)) -
                  2.0 * multiply(th_plus, multiply(ubar, w3)) - d_dy(flux, 1);
            if (forcing) res = res - d_dy(forcing->f_theta(g, tm), 2);

            // wall identity: on solutions, d_y u d_x theta - (theta+theta_E) d_y S
            // closes with the vanishing d_y^2 u wall value (and the forcing slope)
            Field fth_y = Field::zeros(g);
            if (forcing) fth_y = d_dy(forcing->f_theta(g, tm), 1);
            for (int i = 0; i < g->n_x(); ++i) {
                const double r = ubar.at(i, 0) * thx.at(i, 0) -
                                 th_plus.at(i, 0) * s3.at(i, 0) -
                                 2.0 * th_plus.at(i, 0) * ubar.at(i, 0) * w2.at(i, 0) -
                                 fth_y.at(i, 0);
                boundary = std::max(boundary, std::abs(r));
            }
            break;
        }
    }
    return {max_abs(res), boundary};
}

} // namespace blgv
