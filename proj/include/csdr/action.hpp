#ifndef CSDR_ACTION_HPP
#define CSDR_ACTION_HPP

#include <vector>

#include "csdr/connection.hpp"
#include "csdr/forms.hpp"

namespace csdr {

/// Parameters of a Yang-Mills action evaluation on the sphere.
struct ActionConfig {
  int n = 1;
  double radius = 1.0;
  double coupling = 1.0;  // gauge coupling e > 0
  int quad_order = 64;
  double pairing_scale = kCalibratedPairingScale;

  static constexpr double kCalibratedPairingScale = -0.25;
};

/// Recomputes the pairing normalization from scratch: the scale for which
/// the n = 1, f = 0 configuration at R = e = 1 has action pi/2. Done once
/// and frozen as ActionConfig::kCalibratedPairingScale; this routine exists
/// so tests can certify the frozen value.
double calibrate_pairing_scale(int quad_order = 64);

/// S = (1/4e^2) integral <F ^ *F> for the curvature of the assembled
/// invariant potential. For n with a zero intertwiner the f argument is
/// irrelevant and ignored.
double action_value(const ActionConfig& cfg, Complex f);

/// Closed-form action of the n = +-1 family: (pi / 2 e^2 R^2)(|f|^2 - 1)^2.
double analytic_action(const ActionConfig& cfg, Complex f);

struct ScanRow {
  Complex f;
  double action;
};

/// Action values for a list of parameters. Throws on an empty list.
std::vector<ScanRow> action_scan(const ActionConfig& cfg,
                                 const std::vector<Complex>& f_values);

enum class ExtremumKind { minimum, maximum, saddle };

struct Extremum {
  Complex f;
  double action;
  ExtremumKind kind;
  int iterations;
};

/// Gradient descent (or ascent) on S over (Re f, Im f) with a numeric
/// gradient and backtracking line search. Converges on the gradient norm;
/// the kind is classified by finite-difference Hessian eigenvalue signs.
/// Throws std::runtime_error after max_iterations without convergence.
Extremum find_extremum(const ActionConfig& cfg, Complex seed, bool ascend,
                       double tol = 1e-8, int max_iterations = 10000);

/// Runs descent from every seed.
std::vector<Extremum> find_extrema(const ActionConfig& cfg,
                                   const std::vector<Complex>& seeds,
                                   double tol = 1e-8);

/// Max relative deviation between the numeric gradient of the integrated
/// action and the analytic gradient of the closed form at f.
double gradient_check(const ActionConfig& cfg, Complex f);

}  // namespace csdr

#endif
