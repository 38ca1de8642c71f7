#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

namespace stablehf {

// Gauss-Kronrod 7-15 pair. Positive abscissae; node 0 listed first.
// Indices 0,2,4,6 carry the embedded Gauss-7 rule.
namespace gk {
inline constexpr std::array<double, 8> kAbscissae = {
    0.000000000000000000000000000000000e+00,
    2.077849550078984676006894037732449e-01,
    4.058451513773971669066064120769615e-01,
    5.860872354676911302941448382587296e-01,
    7.415311855993944398638647732807884e-01,
    8.648644233597690727897127886409262e-01,
    9.491079123427585245261896840478513e-01,
    9.914553711208126392068546975263285e-01};
inline constexpr std::array<double, 8> kKronrodWeights = {
    2.094821410847278280129991748917143e-01,
    2.044329400752988924141619992346491e-01,
    1.903505780647854099132564024210137e-01,
    1.690047266392679028265834265985503e-01,
    1.406532597155259187451895905102379e-01,
    1.047900103222501838398763225415180e-01,
    6.309209262997855329070066318920429e-02,
    2.293532201052922496373200805896959e-02};
inline constexpr std::array<double, 4> kGaussWeights = {
    4.179591836734693877551020408163265e-01,
    3.818300505051189449503697754889751e-01,
    2.797053914892766679014677714237796e-01,
    1.294849661688696932706114326790820e-01};
}  // namespace gk

// F has signature void(double u, std::array<double, N>& out).
template <int N, class F>
struct PanelResult {
  std::array<double, N> value{};
  std::array<double, N> error{};
};

template <int N, class F>
PanelResult<N, F> gk15_panel(F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double hw = 0.5 * (b - a);
  std::array<double, N> kr{}, gs{}, fx{};
  for (std::size_t i = 0; i < 8; ++i) {
    const double xi = gk::kAbscissae[i];
    const int reps = (xi == 0.0) ? 1 : 2;
    for (int s = 0; s < reps; ++s) {
      const double x = c + (s == 0 ? hw * xi : -hw * xi);
      f(x, fx);
      for (int k = 0; k < N; ++k) {
        kr[k] += gk::kKronrodWeights[i] * fx[k];
        if (i % 2 == 0) gs[k] += gk::kGaussWeights[i / 2] * fx[k];
      }
    }
  }
  PanelResult<N, F> r;
  for (int k = 0; k < N; ++k) {
    r.value[k] = kr[k] * hw;
    const double diff = std::abs((kr[k] - gs[k]) * hw);
    // QUADPACK-style sharpened estimate
    r.error[k] = diff > 0.0 ? std::min(diff, std::pow(200.0 * diff, 1.5)) : 0.0;
    if (!(r.error[k] > 0.0)) r.error[k] = diff;
  }
  return r;
}

template <int N>
struct QuadResult {
  std::array<double, N> value{};
  std::array<double, N> error{};
  bool converged = true;
  int panels = 0;
};

// Globally adaptive vector-valued quadrature on [a,b]; refines the panel with
// the worst component error until every component meets
// abs_tol + rel_tol*|estimate|.
template <int N, class F>
QuadResult<N> integrate_adaptive(F&& f, double a, double b, double abs_tol,
                                 double rel_tol, int max_panels = 600) {
  struct Panel {
    double a, b;
    std::array<double, N> value, error;
    double worst;
  };
  auto mk = [&](double lo, double hi) {
    auto pr = gk15_panel<N>(f, lo, hi);
    Panel p{lo, hi, pr.value, pr.error, 0.0};
    p.worst = *std::max_element(p.error.begin(), p.error.end());
    return p;
  };
  std::vector<Panel> panels;
  panels.reserve(64);
  panels.push_back(mk(a, b));
  QuadResult<N> out;
  for (;;) {
    std::array<double, N> tot{}, err{};
    for (const auto& p : panels)
      for (int k = 0; k < N; ++k) {
        tot[k] += p.value[k];
        err[k] += p.error[k];
      }
    bool ok = true;
    for (int k = 0; k < N; ++k)
      ok = ok && err[k] <= abs_tol + rel_tol * std::abs(tot[k]);
    out.value = tot;
    out.error = err;
    out.panels = static_cast<int>(panels.size());
    if (ok) return out;
    if (static_cast<int>(panels.size()) >= max_panels) {
      out.converged = false;
      return out;
    }
    auto worst =
        std::max_element(panels.begin(), panels.end(),
                         [](const Panel& x, const Panel& y) { return x.worst < y.worst; });
    const double lo = worst->a, hi = worst->b, mid = 0.5 * (lo + hi);
    *worst = mk(lo, mid);
    panels.push_back(mk(mid, hi));
  }
}

// Wynn epsilon table holding its backward diagonal; the classic shuffle keeps
// epsilon_{k+1}^{(n)} = epsilon_{k-1}^{(n+1)} + 1/(epsilon_k^{(n+1)} - epsilon_k^{(n)}).
class EpsilonTable {
 public:
  // Appends partial sum s; returns the current extrapolated limit.
  double append(double s) {
    if (diag_.size() >= 64) diag_.clear();  // restart a stale table
    diag_.push_back(s);
    const std::size_t m = diag_.size() - 1;
    double aux2 = 0.0;
    for (std::size_t j = m; j >= 1; --j) {
      const double aux1 = aux2;
      aux2 = diag_[j - 1];
      const double diff = diag_[j] - aux2;
      diag_[j - 1] = (std::abs(diff) < 1e-300) ? 1e300 : aux1 + 1.0 / diff;
    }
    double best = diag_[m % 2 == 0 ? 0 : (m >= 1 ? 1 : 0)];
    if (!std::isfinite(best)) best = s;
    last_change_ = std::abs(best - last_best_);
    last_best_ = best;
    return best;
  }
  double estimate() const { return last_best_; }
  double last_change() const { return last_change_; }

 private:
  std::vector<double> diag_;
  double last_best_ = 0.0;
  double last_change_ = std::numeric_limits<double>::infinity();
};

// Semi-infinite oscillatory integral of a vector of envelope-weighted trig
// integrands, in the style of cycle integration plus epsilon extrapolation:
// the caller supplies the full integrand f (components mixing cos/sin of
// omega*u), the base point b0 covering [0,b0] adaptively, and the half-period
// pi/omega used for the cycle panels.
template <int N, class F>
QuadResult<N> integrate_oscillatory(F&& f, double omega, double base_hi,
                                    double u_max, double abs_tol, double rel_tol,
                                    int max_cycles = 3000) {
  QuadResult<N> out;
  auto base = integrate_adaptive<N>(f, 0.0, std::min(base_hi, u_max), abs_tol * 0.5,
                                    rel_tol * 0.5, 400);
  out = base;
  if (base_hi >= u_max) return out;

  const double half = M_PI / omega;
  std::array<EpsilonTable, N> eps;
  std::array<double, N> partial = base.value;
  std::array<double, N> extrap{}, prev_extrap{};
  std::array<bool, N> settled{};
  double lo = base_hi;
  int cycle = 0;
  int stall = 0;
  for (; cycle < max_cycles && lo < u_max; ++cycle) {
    const double hi = std::min(lo + half, u_max);
    auto p = gk15_panel<N>(f, lo, hi);
    double chunk_mag = 0.0;
    for (int k = 0; k < N; ++k) {
      partial[k] += p.value[k];
      chunk_mag = std::max(chunk_mag, std::abs(p.value[k]));
      extrap[k] = eps[k].append(partial[k]);
    }
    lo = hi;
    if (cycle < 3) continue;
    bool all_ok = true;
    for (int k = 0; k < N; ++k) {
      const double tol_k = abs_tol + rel_tol * std::abs(extrap[k]);
      settled[k] = eps[k].last_change() < 0.1 * tol_k &&
                   std::abs(extrap[k] - prev_extrap[k]) < tol_k;
      all_ok = all_ok && settled[k];
    }
    prev_extrap = extrap;
    if (all_ok) ++stall; else stall = 0;
    if (stall >= 2) {
      for (int k = 0; k < N; ++k) {
        out.value[k] = extrap[k];
        out.error[k] += eps[k].last_change();
      }
      out.panels += cycle + 1;
      return out;
    }
    // envelope died out: the plain partial sum is already the answer
    if (chunk_mag < 0.01 * abs_tol) {
      for (int k = 0; k < N; ++k) {
        out.value[k] = partial[k];
        out.error[k] += chunk_mag;
      }
      out.panels += cycle + 1;
      return out;
    }
  }
  if (lo >= u_max) {  // swept the whole range without extrapolation exit
    out.value = partial;
    out.panels += cycle;
    return out;
  }
  for (int k = 0; k < N; ++k) {
    out.value[k] = extrap[k];
    out.error[k] += eps[k].last_change() + std::abs(extrap[k] - partial[k]) * 0.01;
  }
  out.converged = false;
  out.panels += cycle;
  return out;
}

// Deterministic pairwise sum, bit-stable regardless of how callers thread
// their outer loops.
inline double pairwise_sum(const double* x, std::size_t n) {
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(x, half) + pairwise_sum(x + half, n - half);
}

}  // namespace stablehf
