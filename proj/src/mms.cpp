#include "blgv/mms.hpp"

#include <cmath>
#include <numbers>

namespace blgv {

double ManufacturedSolution::kappa() const { return 2.0 * std::numbers::pi / L_x; }

double ManufacturedSolution::A(double t) const { return a0 * (1.0 + 0.5 * std::sin(t)); }
double ManufacturedSolution::Adot(double t) const { return 0.5 * a0 * std::cos(t); }
double ManufacturedSolution::B(double t) const { return b0 * (1.0 + 0.5 * std::cos(t)); }
double ManufacturedSolution::Bdot(double t) const { return -0.5 * b0 * std::sin(t); }

double ManufacturedSolution::p(double y) const { return y * std::exp(-y * y / gamma); }
double ManufacturedSolution::dp(double y) const {
    return (1.0 - 2.0 * y * y / gamma) * std::exp(-y * y / gamma);
}
double ManufacturedSolution::d2p(double y) const {
    return (-6.0 * y / gamma + 4.0 * y * y * y / (gamma * gamma)) * std::exp(-y * y / gamma);
}
double ManufacturedSolution::q(double y) const { return std::exp(-y * y / gamma); }
double ManufacturedSolution::dq(double y) const { return -(2.0 * y / gamma) * q(y); }
double ManufacturedSolution::d2q(double y) const {
    return (-2.0 / gamma + 4.0 * y * y / (gamma * gamma)) * q(y);
}

double ManufacturedSolution::P_int(double y) const {
    return 0.5 * gamma * (1.0 - std::exp(-y * y / gamma));
}

double ManufacturedSolution::Q_int(double y) const {
    // (p')^2 = (1 - 4 y^2/gamma + 4 y^4/gamma^2) e^{-a y^2},  a = 2/gamma
    const double a = 2.0 / gamma;
    const double sa = std::sqrt(a);
    const double spi = std::sqrt(std::numbers::pi);
    const double erfv = std::erf(sa * y);
    const double e = std::exp(-a * y * y);
    const double i0 = 0.5 * spi / sa * erfv;
    const double i2 = 0.25 * spi / (a * sa) * erfv - 0.5 * y * e / a;
    const double i4 = 0.375 * spi / (a * a * sa) * erfv - e * (0.75 * y / (a * a) + 0.5 * y * y * y / a);
    return i0 - 4.0 / gamma * i2 + 4.0 / (gamma * gamma) * i4;
}

double ManufacturedSolution::u(double t, double x, double y) const {
    return A(t) * std::sin(kappa() * x) * p(y);
}
double ManufacturedSolution::theta(double t, double x, double y) const {
    return B(t) * std::cos(kappa() * x) * q(y);
}
double ManufacturedSolution::v(double t, double x, double y) const {
    const double k = kappa(), s = std::sin(k * x), c = std::cos(k * x);
    return -A(t) * k * c * P_int(y) + A(t) * A(t) * s * s * Q_int(y) + B(t) * c * dq(y);
}

double ManufacturedSolution::f_u(double t, double x, double y) const {
    const double k = kappa(), s = std::sin(k * x), c = std::cos(k * x);
    const double At = A(t), Bt = B(t);
    const double ut = Adot(t) * s * p(y);
    const double uux = At * s * p(y) * At * k * c * p(y);
    const double vuy = v(t, x, y) * At * s * dp(y);
    const double diff = (Bt * c * q(y) + theta_e) * At * s * d2p(y);
    const double xdiff = -nu * k * k * At * s * p(y);
    return ut + uux + vuy - diff - xdiff;
}

double ManufacturedSolution::f_theta(double t, double x, double y) const {
    const double k = kappa(), s = std::sin(k * x), c = std::cos(k * x);
    const double At = A(t), Bt = B(t);
    const double tht = Bdot(t) * c * q(y);
    const double uthx = At * s * p(y) * (-Bt * k * s * q(y));
    const double vthy = v(t, x, y) * Bt * c * dq(y);
    const double tot = Bt * c * q(y) + theta_e;
    const double diff = tot * Bt * c * d2q(y);
    const double heat = tot * At * At * s * s * dp(y) * dp(y);
    const double xdiff = -nu * k * k * Bt * c * q(y);
    return tht + uthx + vthy - diff - heat - xdiff;
}

Field ManufacturedSolution::sample_u(GridPtr g, double t) const {
    return Field::sample(g, [&](double x, double y) { return u(t, x, y); }, t);
}
Field ManufacturedSolution::sample_theta(GridPtr g, double t) const {
    return Field::sample(g, [&](double x, double y) { return theta(t, x, y); }, t);
}
Field ManufacturedSolution::sample_v(GridPtr g, double t) const {
    return Field::sample(g, [&](double x, double y) { return v(t, x, y); }, t);
}

Forcing ManufacturedSolution::forcing() const {
    ManufacturedSolution self = *this;
    Forcing f;
    f.f_u = [self](GridPtr g, double t) {
        return Field::sample(g, [&](double x, double y) { return self.f_u(t, x, y); }, t);
    };
    f.f_theta = [self](GridPtr g, double t) {
        return Field::sample(g, [&](double x, double y) { return self.f_theta(t, x, y); }, t);
    };
    return f;
}

} // namespace blgv
