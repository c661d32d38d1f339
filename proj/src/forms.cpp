#include "csdr/forms.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace csdr {

namespace {

void require_same_chart(int a, int b, const char* who) {
  if (a != b) throw std::invalid_argument(std::string(who) + ": chart mismatch");
}

}  // namespace

OneForm add(const OneForm& a, const OneForm& b) {
  require_same_chart(a.chart, b.chart, "add");
  auto at = a.d_theta, bt = b.d_theta, ap = a.d_phi, bp = b.d_phi;
  return OneForm{a.chart,
                 [at, bt](double t, double p) { return Mat2(at(t, p) + bt(t, p)); },
                 [ap, bp](double t, double p) { return Mat2(ap(t, p) + bp(t, p)); }};
}

OneForm scale(const OneForm& a, Complex s) {
  auto at = a.d_theta, ap = a.d_phi;
  return OneForm{a.chart, [at, s](double t, double p) { return Mat2(s * at(t, p)); },
                 [ap, s](double t, double p) { return Mat2(s * ap(t, p)); }};
}

TwoForm add(const TwoForm& a, const TwoForm& b) {
  require_same_chart(a.chart, b.chart, "add");
  auto ac = a.coeff, bc = b.coeff;
  return TwoForm{a.chart,
                 [ac, bc](double t, double p) { return Mat2(ac(t, p) + bc(t, p)); }};
}

TwoForm scale(const TwoForm& a, Complex s) {
  auto ac = a.coeff;
  return TwoForm{a.chart, [ac, s](double t, double p) { return Mat2(s * ac(t, p)); }};
}

OneForm map_coefficients(const OneForm& a, std::function<Mat2(const Mat2&)> fn) {
  auto at = a.d_theta, ap = a.d_phi;
  return OneForm{a.chart, [at, fn](double t, double p) { return fn(at(t, p)); },
                 [ap, fn](double t, double p) { return fn(ap(t, p)); }};
}

TwoForm wedge_bracket(const OneForm& a, const OneForm& b) {
  require_same_chart(a.chart, b.chart, "wedge_bracket");
  auto at = a.d_theta, ap = a.d_phi, bt = b.d_theta, bp = b.d_phi;
  return TwoForm{a.chart, [at, ap, bt, bp](double t, double p) {
                   return Mat2(bracket(at(t, p), bp(t, p)) -
                               bracket(ap(t, p), bt(t, p)));
                 }};
}

TwoForm exterior_derivative(const OneForm& a, double step) {
  if (!(step > 1e-12)) throw std::invalid_argument("exterior_derivative: step underflow");
  auto at = a.d_theta, ap = a.d_phi;
  return TwoForm{a.chart, [at, ap, step](double t, double p) {
                   const Mat2 dphi_dtheta =
                       (ap(t + step, p) - ap(t - step, p)) / (2.0 * step);
                   const Mat2 dtheta_dphi =
                       (at(t, p + step) - at(t, p - step)) / (2.0 * step);
                   return Mat2(dphi_dtheta - dtheta_dphi);
                 }};
}

CoeffFn hodge_star_2form(const TwoForm& f, const RoundMetric& g) {
  auto fc = f.coeff;
  const double r2 = g.radius * g.radius;
  return [fc, r2](double t, double p) {
    const double s = std::sin(t);
    if (!(s > 0.0)) throw std::domain_error("hodge_star_2form: pole evaluation");
    return Mat2(fc(t, p) / (r2 * s));
  };
}

Quadrature gauss_legendre(int order) {
  if (order <= 0) throw std::invalid_argument("gauss_legendre: order must be positive");
  // Golub-Welsch: eigenvalues of the symmetric tridiagonal Jacobi matrix.
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(order, order);
  for (int k = 1; k < order; ++k) {
    const double b = k / std::sqrt(4.0 * k * k - 1.0);
    jacobi(k, k - 1) = b;
    jacobi(k - 1, k) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(jacobi);
  Quadrature q;
  q.nodes.resize(order);
  q.weights.resize(order);
  for (int k = 0; k < order; ++k) {
    q.nodes[k] = eig.eigenvalues()(k);
    const double w0 = eig.eigenvectors()(0, k);
    q.weights[k] = 2.0 * w0 * w0;
  }
  return q;
}

double integrate_action_density(const TwoForm& f, const RoundMetric& g,
                                const KillingForm& pairing, int quad_order) {
  if (quad_order <= 0) {
    throw std::invalid_argument("integrate_action_density: non-positive quadrature order");
  }
  const Quadrature q = gauss_legendre(quad_order);
  const int n_phi = std::max(16, 2 * quad_order);
  const double dphi = 2.0 * std::numbers::pi / n_phi;
  const double r2 = g.radius * g.radius;

  // <F ^ *F> = pairing(c, c) / (R^2 sin theta) dtheta dphi; substituting
  // u = cos theta removes the sin from the measure and makes monopole
  // integrands polynomial in u.
  double total = 0.0;
  for (int k = 0; k < quad_order; ++k) {
    const double u = q.nodes[k];
    const double theta = std::acos(u);
    const double s2 = 1.0 - u * u;
    double ring = 0.0;
    for (int j = 0; j < n_phi; ++j) {
      const double phi = j * dphi;
      const Mat2 c = f.coeff(theta, phi);
      ring += pairing(c, c).real();
    }
    total += q.weights[k] * ring * dphi / (r2 * s2);
  }
  return total;
}

namespace {

void write_entries(std::ostream& os, const Mat2& m) {
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      os << ',' << m(r, c).real() << ',' << m(r, c).imag();
    }
  }
}

// Interior grid avoiding 1e-3 bands around the poles, where the dphi
// coefficients are ill-conditioned.
double grid_theta(int i, int n) {
  const double lo = 1e-3, hi = std::numbers::pi - 1e-3;
  return lo + (hi - lo) * i / (n - 1);
}

double grid_phi(int j, int n) { return 2.0 * std::numbers::pi * j / n; }

}  // namespace

void dump_one_form_csv(std::ostream& os, const OneForm& a, int grid_n) {
  os << std::setprecision(17);
  os << "chart,theta,phi"
     << ",dtheta_11_re,dtheta_11_im,dtheta_12_re,dtheta_12_im"
     << ",dtheta_21_re,dtheta_21_im,dtheta_22_re,dtheta_22_im"
     << ",dphi_11_re,dphi_11_im,dphi_12_re,dphi_12_im"
     << ",dphi_21_re,dphi_21_im,dphi_22_re,dphi_22_im\n";
  for (int i = 0; i < grid_n; ++i) {
    for (int j = 0; j < grid_n; ++j) {
      const double t = grid_theta(i, grid_n), p = grid_phi(j, grid_n);
      os << a.chart << ',' << t << ',' << p;
      write_entries(os, a.d_theta(t, p));
      write_entries(os, a.d_phi(t, p));
      os << '\n';
    }
  }
}

void dump_two_form_csv(std::ostream& os, const TwoForm& f, int grid_n) {
  os << std::setprecision(17);
  os << "chart,theta,phi"
     << ",coeff_11_re,coeff_11_im,coeff_12_re,coeff_12_im"
     << ",coeff_21_re,coeff_21_im,coeff_22_re,coeff_22_im\n";
  for (int i = 0; i < grid_n; ++i) {
    for (int j = 0; j < grid_n; ++j) {
      const double t = grid_theta(i, grid_n), p = grid_phi(j, grid_n);
      os << f.chart << ',' << t << ',' << p;
      write_entries(os, f.coeff(t, p));
      os << '\n';
    }
  }
}

}  // namespace csdr
