#pragma once

#include <cstdint>
#include <functional>

#include "blgv/grid.hpp"

namespace blgv {

struct Forcing {
    std::function<Field(GridPtr, double)> f_u;
    std::function<Field(GridPtr, double)> f_theta;
};

struct StepControl {
    double dt_cap;
    double safety = 0.4;
    bool adaptive = false;
};

struct SolveState {
    Field u;
    Field theta;
    Field v;  // derived each step, never time-stepped
    double t = 0.0;
    double nu = 0.0;
    double theta_e = 1.0;
    double dt = 0.0;  // dt used to produce this state
    long step_index = 0;
};

/// v = -int_0^y d_x u + int_0^y (d_y u)^2 + d_y theta; requires the discrete
/// Neumann row of theta to hold (|d_y theta| <= 1e-8 at y = 0).
Field recover_v(const Field& u, const Field& theta);

/// Wall-row conditioning for sampled data: smooth profiles satisfy the
/// boundary conditions analytically but only to stencil accuracy on the
/// grid, while runs need them exactly.
Field impose_u_rows(Field f);       // f(:,0) = f(:,Y_max) = 0
Field impose_theta_rows(Field f);   // discrete-Neumann wall row, f(:,Y_max) = 0

SolveState make_state(Field u0, Field theta0, double nu, double theta_e);

double choose_dt(const SolveState& s, const StepControl& ctl);

/// One IMEX step: explicit advection and viscous-heating source, implicit
/// nu d_x^2 (diagonal in Fourier) and (theta + theta_E) d_y^2 with the
/// coefficient frozen at step start (banded solve per x-column). Boundary
/// rows are re-imposed and v recomputed. Throws PositivityBreach when the
/// temperature floor fails and BlowUp on NaN or runaway amplitude.
SolveState step(const SolveState& s, const Forcing* forcing, const StepControl& ctl);

struct InitialData {
    Field u0;
    Field theta0;
    double delta;
    double epsilon;
};

/// Random band-limited data with coefficient decay e^{-2 delta |xi|},
/// Gaussian normal profiles, compatible boundary rows, theta scaled so the
/// e^{delta|D|}-amplified B^{1,1} norm equals epsilon/2 and u scaled to
/// u0_norm. Deterministic in the seed.
InitialData make_initial_data(GridPtr g, double delta, double epsilon, double theta_e,
                              std::uint64_t seed, double u0_norm = 0.25, int modes = 8);

} // namespace blgv
