#ifndef CSDR_FORMS_HPP
#define CSDR_FORMS_HPP

#include <functional>
#include <vector>

#include "csdr/algebra.hpp"

namespace csdr {

/// Coefficient map (theta, phi) -> algebra element. Must be pure.
using CoeffFn = std::function<Mat2(double, double)>;

/// Lie-algebra-valued 1-form on a single chart, a = a_theta dtheta + a_phi dphi.
struct OneForm {
  int chart = 1;
  CoeffFn d_theta;
  CoeffFn d_phi;
};

/// Lie-algebra-valued 2-form; in two dimensions only the dtheta^dphi
/// component survives.
struct TwoForm {
  int chart = 1;
  CoeffFn coeff;
};

/// Round metric R^2 (dtheta^2 + sin^2 theta dphi^2) on the sphere.
struct RoundMetric {
  double radius = 1.0;
};

OneForm add(const OneForm& a, const OneForm& b);
OneForm scale(const OneForm& a, Complex s);
TwoForm add(const TwoForm& a, const TwoForm& b);
TwoForm scale(const TwoForm& a, Complex s);

/// Applies a pointwise linear map to both coefficients.
OneForm map_coefficients(const OneForm& a, std::function<Mat2(const Mat2&)> fn);

/// Graded bracket of two 1-forms: coefficient [a_theta, b_phi] - [a_phi, b_theta]
/// on dtheta^dphi, so that (1/2) wedge_bracket(A, A) has coefficient
/// [A_theta, A_phi]. Throws on chart mismatch.
TwoForm wedge_bracket(const OneForm& a, const OneForm& b);

/// Numeric exterior derivative, coefficient d_theta(a_phi) - d_phi(a_theta)
/// by central differences. Throws if the step underflows.
TwoForm exterior_derivative(const OneForm& a, double step = 1e-5);

/// Hodge dual of a 2-form for the round metric: *(c dtheta^dphi) = c/(R^2 sin theta)
/// as a 0-form. Evaluating at the poles (sin theta = 0) throws.
CoeffFn hodge_star_2form(const TwoForm& f, const RoundMetric& g);

/// Gauss-Legendre nodes and weights on [-1, 1].
struct Quadrature {
  std::vector<double> nodes;
  std::vector<double> weights;
};
Quadrature gauss_legendre(int order);

/// Integral over the sphere of <F, *F> for the given pairing:
/// Gauss-Legendre in u = cos theta times a uniform trapezoid rule in phi.
/// The 1/(4 e^2) prefactor of the action is the caller's business.
/// Throws on non-positive quadrature order.
double integrate_action_density(const TwoForm& f, const RoundMetric& g,
                                const KillingForm& pairing, int quad_order);

/// Writes sampled coefficients of a 1-form over an n x n chart-interior grid
/// as CSV rows: chart, theta, phi, then re/im of each matrix entry of the
/// dtheta and dphi coefficients.
void dump_one_form_csv(std::ostream& os, const OneForm& a, int grid_n);
void dump_two_form_csv(std::ostream& os, const TwoForm& f, int grid_n);

}  // namespace csdr

#endif
