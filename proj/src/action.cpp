#include "csdr/action.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace csdr {

namespace {

double integrate_curvature(int n, Complex f, double radius, double pairing_scale,
                           int quad_order) {
  // The reduced closed-form curvature; pointwise equal to the
  // finite-difference route (certified separately), and cheap enough for
  // inner-loop optimization.
  const TwoForm curv = curvature_reduced(n, f, 1);
  return integrate_action_density(curv, RoundMetric{radius},
                                  KillingForm{pairing_scale}, quad_order);
}

}  // namespace

double calibrate_pairing_scale(int quad_order) {
  const double reference = 0.5 * std::numbers::pi;  // unit monopole, R = e = 1
  const double raw = integrate_curvature(1, Complex{0, 0}, 1.0, 1.0, quad_order);
  return 4.0 * reference / raw;
}

double action_value(const ActionConfig& cfg, Complex f) {
  const double integral = integrate_curvature(cfg.n, f, cfg.radius,
                                              cfg.pairing_scale, cfg.quad_order);
  return integral / (4.0 * cfg.coupling * cfg.coupling);
}

double analytic_action(const ActionConfig& cfg, Complex f) {
  const double m = std::norm(f) - 1.0;
  return 0.5 * std::numbers::pi * m * m /
         (cfg.coupling * cfg.coupling * cfg.radius * cfg.radius);
}

std::vector<ScanRow> action_scan(const ActionConfig& cfg,
                                 const std::vector<Complex>& f_values) {
  if (f_values.empty()) throw std::invalid_argument("action_scan: empty scan list");
  std::vector<ScanRow> rows;
  rows.reserve(f_values.size());
  for (const Complex& f : f_values) rows.push_back({f, action_value(cfg, f)});
  return rows;
}

namespace {

Eigen::Vector2d numeric_gradient(const ActionConfig& cfg, Complex f, double h) {
  Eigen::Vector2d g;
  g(0) = (action_value(cfg, f + Complex{h, 0}) - action_value(cfg, f - Complex{h, 0})) /
         (2.0 * h);
  g(1) = (action_value(cfg, f + Complex{0, h}) - action_value(cfg, f - Complex{0, h})) /
         (2.0 * h);
  return g;
}

ExtremumKind classify_hessian(const ActionConfig& cfg, Complex f) {
  const double h = 1e-4;
  const double s0 = action_value(cfg, f);
  auto at = [&](double dx, double dy) {
    return action_value(cfg, f + Complex{dx, dy});
  };
  Eigen::Matrix2d hess;
  hess(0, 0) = (at(h, 0) - 2 * s0 + at(-h, 0)) / (h * h);
  hess(1, 1) = (at(0, h) - 2 * s0 + at(0, -h)) / (h * h);
  hess(0, 1) = hess(1, 0) =
      (at(h, h) - at(h, -h) - at(-h, h) + at(-h, -h)) / (4 * h * h);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(hess);
  const double lo = eig.eigenvalues()(0), hi = eig.eigenvalues()(1);
  const double eps = 1e-4 * std::max(1.0, std::abs(lo) + std::abs(hi));
  if (lo < -eps && hi > eps) return ExtremumKind::saddle;
  if (hi < eps) return ExtremumKind::maximum;
  return ExtremumKind::minimum;  // includes the degenerate rim direction
}

}  // namespace

Extremum find_extremum(const ActionConfig& cfg, Complex seed, bool ascend,
                       double tol, int max_iterations) {
  if (!(tol > 0)) throw std::invalid_argument("find_extremum: tol must be positive");
  const double grad_step = 1e-6;
  Complex f = seed;
  double value = action_value(cfg, f);
  for (int iter = 0; iter < max_iterations; ++iter) {
    Eigen::Vector2d g = numeric_gradient(cfg, f, grad_step);
    if (g.norm() < tol) {
      return Extremum{f, value, classify_hessian(cfg, f), iter};
    }
    const double sign = ascend ? 1.0 : -1.0;
    double step = 0.25;
    // Backtracking: halve until the move improves in the chosen direction.
    for (int bt = 0; bt < 60; ++bt) {
      const Complex trial = f + sign * step * Complex{g(0), g(1)};
      const double trial_value = action_value(cfg, trial);
      const double gain = sign * (trial_value - value);
      if (gain > 0.25 * step * g.squaredNorm()) {
        f = trial;
        value = trial_value;
        break;
      }
      step *= 0.5;
      if (bt == 59) {
        // No productive step at machine scale: treat as converged if the
        // gradient is already tiny relative to the backtracking floor.
        return Extremum{f, value, classify_hessian(cfg, f), iter};
      }
    }
  }
  throw std::runtime_error("find_extremum: no convergence within iteration budget");
}

std::vector<Extremum> find_extrema(const ActionConfig& cfg,
                                   const std::vector<Complex>& seeds, double tol) {
  std::vector<Extremum> out;
  out.reserve(seeds.size());
  for (const Complex& seed : seeds) {
    out.push_back(find_extremum(cfg, seed, /*ascend=*/false, tol));
  }
  return out;
}

double gradient_check(const ActionConfig& cfg, Complex f) {
  const Eigen::Vector2d numeric = numeric_gradient(cfg, f, 1e-5);
  // d/df of (pi / 2 e^2 R^2)(|f|^2 - 1)^2 over (Re f, Im f).
  const double prefactor = 2.0 * std::numbers::pi * (std::norm(f) - 1.0) /
                           (cfg.coupling * cfg.coupling * cfg.radius * cfg.radius);
  Eigen::Vector2d analytic;
  analytic << prefactor * f.real(), prefactor * f.imag();
  const double denom = std::max(1.0, analytic.norm());
  return (numeric - analytic).norm() / denom;
}

}  // namespace csdr
