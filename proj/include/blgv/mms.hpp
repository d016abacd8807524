#pragma once

#include "blgv/solver.hpp"

namespace blgv {

/// Manufactured solution
///   u*(t,x,y)     = A(t) sin(kx) p(y),   p(y) = y e^{-y^2/gamma}
///   theta*(t,x,y) = B(t) cos(kx) q(y),   q(y) = e^{-y^2/gamma}
/// with v* from the normal-velocity recovery formula (erf antiderivatives in
/// closed form) and the forcing that makes (u*, theta*, v*) solve the
/// regularized system exactly. Compatible: p(0) = p''(0) = q'(0) = 0.
struct ManufacturedSolution {
    double L_x;
    double theta_e = 1.0;
    double nu = 0.0;
    double gamma = 2.0;
    double a0 = 0.2;
    double b0 = 0.1;

    double kappa() const;

    double A(double t) const;
    double Adot(double t) const;
    double B(double t) const;
    double Bdot(double t) const;

    double p(double y) const;
    double dp(double y) const;
    double d2p(double y) const;
    double q(double y) const;
    double dq(double y) const;
    double d2q(double y) const;
    double P_int(double y) const;   // int_0^y p
    double Q_int(double y) const;   // int_0^y (p')^2

    double u(double t, double x, double y) const;
    double theta(double t, double x, double y) const;
    double v(double t, double x, double y) const;
    double f_u(double t, double x, double y) const;
    double f_theta(double t, double x, double y) const;

    Field sample_u(GridPtr g, double t) const;
    Field sample_theta(GridPtr g, double t) const;
    Field sample_v(GridPtr g, double t) const;
    Forcing forcing() const;
};

} // namespace blgv
