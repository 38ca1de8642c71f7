#include "density.hpp"

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/trigamma.hpp>
#include <cmath>

#include "quadrature.hpp"

namespace stablehf {

namespace {

constexpr double kPi = 3.14159265358979323846;
// exp(-u^beta) drops below ~1e-17 once u^beta exceeds this
constexpr double kExpCut = 39.0;
constexpr double kAbsTol = 1e-12;
constexpr double kRelTol = 1e-10;
// phase (in radians) up to which a plain adaptive pass beats cycle chunking
constexpr double kPhaseDirect = 40.0;

// Integrand vector shared by all six Fourier inversion integrals, evaluated
// at |y| (parity restores signs). Factors of 1/pi applied afterwards.
struct InversionIntegrand {
  double beta;
  double a;  // |y|
  void operator()(double u, std::array<double, 6>& out) const {
    const double lu = std::log(u);
    const double ub = std::exp(beta * lu);
    const double e = std::exp(-ub);
    const double c = std::cos(u * a);
    const double s = std::sin(u * a);
    out[0] = e * c;
    out[1] = -u * e * s;
    out[2] = -u * u * e * c;
    out[3] = -ub * lu * e * c;
    out[4] = u * ub * lu * e * s;
    out[5] = lu * lu * ub * (ub - 1.0) * e * c;
  }
};

// Same integrals under u = t^{1/beta}; non-oscillatory workhorse for small
// beta where the u-space cutoff is astronomically far out.
struct SubstitutedIntegrand {
  double beta;
  double a;
  void operator()(double t, std::array<double, 6>& out) const {
    const double lt = std::log(t);
    const double inv_b = 1.0 / beta;
    const double u = std::exp(inv_b * lt);
    const double jac = inv_b * std::exp((inv_b - 1.0) * lt);  // du/dt
    InversionIntegrand inner{beta, a};
    inner(u, out);
    const double w = jac * std::exp(t - u) * std::exp(-t);  // guard: u^beta == t
    (void)w;
    for (double& v : out) v *= jac;
  }
};

// Smallest u with envelope u^k (1+|log u|)^p e^{-u^beta} below e^{-kExpCut}.
double envelope_cutoff(double beta, double k, double p) {
  auto logenv = [&](double u) {
    const double lu = std::log(u);
    return k * lu + p * std::log1p(std::abs(lu)) - std::pow(u, beta);
  };
  double lo = 1.0, hi = 2.0;
  while (logenv(hi) > -kExpCut) {
    hi *= 2.0;
    if (hi > 1e30) return hi;
  }
  for (int i = 0; i < 200 && hi / lo > 1.0 + 1e-9; ++i) {
    const double mid = std::sqrt(lo * hi);
    (logenv(mid) > -kExpCut ? lo : hi) = mid;
  }
  return hi;
}

DensityEval finalize(double beta, double y, std::array<double, 6> raw,
                     std::array<double, 6> err, bool converged) {
  DensityEval d;
  const double sg = (y < 0.0) ? -1.0 : 1.0;
  d.value = raw[0] / kPi;
  d.d_y = sg * raw[1] / kPi;
  d.d_yy = raw[2] / kPi;
  d.d_beta = raw[3] / kPi;
  d.d_beta_y = sg * raw[4] / kPi;
  d.d_beta2 = raw[5] / kPi;
  d.abs_err = err[0] / kPi;
  if (!(d.value > 0.0) || !converged)
    throw numerical_error("stable density quadrature did not converge",
                          d.abs_err);
  d.log_value = std::log(d.value);
  return d;
}

}  // namespace

double tail_switch(double beta) {
  // series converges for every y when beta < 1, so the conservative
  // 10^{1/beta} cutoff is only kept where quadrature stays tractable
  if (beta < 0.5) return 10.0;
  return std::max(10.0, std::pow(10.0, 1.0 / beta));
}

namespace detail {

DensityEval density_quadrature(double beta, double y) {
  const double a = std::abs(y);
  // d_yy weight u^2, beta-derivative weights carry (log u)^2
  const double u_max = envelope_cutoff(beta, 2.0, 2.0);
  const double phase = a * u_max;
  if (phase <= kPhaseDirect) {
    if (beta >= 0.5) {
      InversionIntegrand f{beta, a};
      const double split = std::min(1.0, u_max);
      auto r1 = integrate_adaptive<6>(f, 0.0, split, kAbsTol * 0.5, kRelTol, 200);
      auto r2 = integrate_adaptive<6>(f, split, u_max, kAbsTol * 0.5, kRelTol, 500);
      std::array<double, 6> v{}, e{};
      for (int k = 0; k < 6; ++k) {
        v[k] = r1.value[k] + r2.value[k];
        e[k] = r1.error[k] + r2.error[k];
      }
      return finalize(beta, y, v, e, r1.converged && r2.converged);
    }
    // small beta: integrate in t = u^beta
    const double p = 3.0 / beta + 1.0;  // largest polynomial degree in t
    double t_max = p + 8.0 * std::sqrt(p) + 60.0;
    SubstitutedIntegrand f{beta, a};
    auto r1 = integrate_adaptive<6>(f, 0.0, 1.0, kAbsTol * 0.5, kRelTol, 300);
    auto r2 = integrate_adaptive<6>(f, 1.0, t_max, kAbsTol * 0.5, kRelTol, 500);
    std::array<double, 6> v{}, e{};
    for (int k = 0; k < 6; ++k) {
      v[k] = r1.value[k] + r2.value[k];
      e[k] = r1.error[k] + r2.error[k];
    }
    return finalize(beta, y, v, e, r1.converged && r2.converged);
  }
  // oscillatory: a few periods adaptively, then half-period cycles with
  // epsilon extrapolation
  InversionIntegrand f{beta, a};
  const double base_hi = std::min(4.0 * kPi / a, u_max);
  auto r = integrate_oscillatory<6>(f, a, base_hi, u_max, kAbsTol, kRelTol);
  return finalize(beta, y, r.value, r.error, r.converged);
}

DensityEval density_series(double beta, double y) {
  const double a = std::abs(y);
  const double la = std::log(a);
  double val = 0, dy = 0, dyy = 0, db = 0, dby = 0, db2 = 0;
  double lead = 0.0;
  double prev_env = std::numeric_limits<double>::infinity();
  double trunc = 0.0;
  for (int k = 1; k <= 200; ++k) {
    const double kb1 = k * beta + 1.0;
    const double A = std::exp(std::lgamma(kb1) - std::lgamma(k + 1.0));
    const double P = std::exp(-kb1 * la);
    const double env = A * P;
    trunc = env;
    if (env > prev_env) break;  // asymptotic divergence onset
    prev_env = env;
    const double psi0 = boost::math::digamma(kb1);
    const double psi1 = boost::math::trigamma(kb1);
    const double sk = std::sin(0.5 * k * kPi * beta);
    const double ck = std::cos(0.5 * k * kPi * beta);
    const double D = A * sk;
    const double Dp = A * k * psi0 * sk + A * (0.5 * k * kPi) * ck;
    const double Dpp = A * ((k * psi0) * (k * psi0) + k * k * psi1) * sk +
                       2.0 * (A * k * psi0) * (0.5 * k * kPi) * ck -
                       A * (0.5 * k * kPi) * (0.5 * k * kPi) * sk;
    const double sgn = (k % 2 == 1) ? 1.0 : -1.0;
    const double kla = k * la;
    val += sgn * D * P;
    dy += sgn * D * (-kb1) * P / a;
    dyy += sgn * D * kb1 * (kb1 + 1.0) * P / (a * a);
    db += sgn * (Dp - D * kla) * P;
    dby += sgn * (-kb1 * (Dp - D * kla) - k * D) * P / a;
    db2 += sgn * (Dpp - 2.0 * Dp * kla + D * kla * kla) * P;
    if (k >= 2 && env < 1e-12 * std::abs(val)) {
      trunc = env;
      break;
    }
  }
  DensityEval d;
  const double sg = (y < 0.0) ? -1.0 : 1.0;
  d.value = val / kPi;
  d.d_y = sg * dy / kPi;
  d.d_yy = dyy / kPi;
  d.d_beta = db / kPi;
  d.d_beta_y = sg * dby / kPi;
  d.d_beta2 = db2 / kPi;
  d.abs_err = trunc / kPi;
  // log density straight from the series: leading term is positive, the rest
  // enters through log1p so far-tail values never round to log(0)
  const double kb1 = beta + 1.0;
  lead = std::exp(std::lgamma(kb1) - kb1 * la) * std::sin(0.5 * kPi * beta);
  const double rest = val / lead - 1.0;
  d.log_value = std::lgamma(kb1) - kb1 * la +
                std::log(std::sin(0.5 * kPi * beta) / kPi) + std::log1p(rest);
  if (!(d.value > 0.0))
    throw numerical_error("tail series produced a non-positive density",
                          d.abs_err);
  return d;
}

}  // namespace detail

DensityEval density(double beta, double y) {
  check_stable_index_quad(beta);
  if (!std::isfinite(y)) throw domain_error("density argument must be finite");
  if (std::abs(y) >= tail_switch(beta)) return detail::density_series(beta, y);
  return detail::density_quadrature(beta, y);
}

ScoreKernels score_kernels(double beta, double y) {
  const DensityEval d = density(beta, y);
  return {d.d_beta / d.value, d.d_y / d.value};
}

double log_density(double beta, double y) { return density(beta, y).log_value; }

}  // namespace stablehf
