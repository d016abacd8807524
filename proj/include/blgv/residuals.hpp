#pragma once

#include "blgv/solver.hpp"

namespace blgv {

enum class DerivedEq { dy_u, dy_theta, dyy_u, dyy_theta };

struct ResidualValue {
    double interior;  // grid max-norm of the derived-equation residual
    double boundary;  // wall-row identity residual (dyy_theta only, else 0)
};

/// Residual of the selected derived evolution equation, assembled from two
/// consecutive states (d_t by the centered difference at the midpoint, space
/// terms from the averaged fields). When the run was forced, pass the same
/// forcing so its derivative terms are subtracted and the residual measures
/// discretization error alone.
ResidualValue derived_equation_residual(const SolveState& prev, const SolveState& next,
                                        DerivedEq which, const Forcing* forcing = nullptr);

} // namespace blgv
