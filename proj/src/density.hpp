#pragma once

#include "types.hpp"

namespace stablehf {

// Standard symmetric stable density phi_beta at y with its partials.
// value > 0 always; d_y and d_beta_y are odd in y, the rest even.
struct DensityEval {
  double value = 0.0;
  double d_y = 0.0;       // d/dy phi
  double d_yy = 0.0;      // d^2/dy^2 phi
  double d_beta = 0.0;    // d/dbeta phi
  double d_beta_y = 0.0;  // d/dbeta d/dy phi
  double d_beta2 = 0.0;   // d^2/dbeta^2 phi
  double log_value = 0.0;
  double abs_err = 0.0;   // achieved error estimate on value
};

struct ScoreKernels {
  double f = 0.0;  // d_beta phi / phi, even
  double g = 0.0;  // d_y phi / phi, odd
};

// |y| at and beyond which the Bergstrom tail series is used.
double tail_switch(double beta);

DensityEval density(double beta, double y);
ScoreKernels score_kernels(double beta, double y);
double log_density(double beta, double y);

namespace detail {
// Branch-pinned evaluators, for cross-validation in tests.
DensityEval density_quadrature(double beta, double y);
DensityEval density_series(double beta, double y);
}  // namespace detail

}  // namespace stablehf
