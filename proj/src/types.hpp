#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace stablehf {

// Widest index range accepted anywhere.
inline constexpr double kBetaLo = 0.0;
inline constexpr double kBetaHi = 2.0;
// Range supported by the quadrature-backed density machinery; estimators clip
// to this window.
inline constexpr double kBetaQuadLo = 0.05;
inline constexpr double kBetaQuadHi = 1.95;

inline void check_stable_index(double beta) {
  if (!(beta > kBetaLo && beta < kBetaHi))
    throw domain_error("stable index must lie in (0,2)");
}

inline void check_stable_index_quad(double beta) {
  if (!(beta >= kBetaQuadLo && beta <= kBetaQuadHi))
    throw domain_error("stable index outside the supported range [0.05, 1.95]");
}

struct Theta {
  double beta = 1.0;
  double sigma = 1.0;
  double mu = 0.0;

  void validate() const {
    check_stable_index(beta);
    if (!(sigma > 0.0)) throw domain_error("scale must be positive");
  }
};

struct SamplingScheme {
  std::size_t n = 0;
  double h = 0.0;

  // Terminal time n*h must stay bounded away from zero; below 1 the
  // high-frequency asymptotics get shaky, which validate() reports via the
  // low_terminal_time flag rather than an error.
  bool low_terminal_time() const { return static_cast<double>(n) * h < 1.0; }

  void validate() const {
    if (n < 2) throw domain_error("need at least two increments");
    if (!(h > 0.0)) throw domain_error("stepsize must be positive");
    if (static_cast<double>(n) * h < 0.5)
      throw domain_error("terminal time n*h below 0.5");
  }
};

struct IncrementSeries {
  std::vector<double> deltas;
  SamplingScheme scheme;

  void validate() const {
    scheme.validate();
    if (deltas.size() != scheme.n)
      throw domain_error("increment count does not match the scheme");
  }
};

// Limit descriptors of the upper-left block of a norming family.
struct NormingLimits {
  double phi11 = 0.0;
  double phi12 = 0.0;
  double phi21 = 0.0;
  double phi22 = 0.0;

  double det() const { return phi11 * phi22 - phi12 * phi21; }
};

}  // namespace stablehf
