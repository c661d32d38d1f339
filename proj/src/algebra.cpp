#include "csdr/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace csdr {

namespace {
const Complex I{0.0, 1.0};
}

Mat2 sigma1() {
  Mat2 m;
  m << 0, 1, 1, 0;
  return m;
}

Mat2 sigma2() {
  Mat2 m;
  m << 0, -I, I, 0;
  return m;
}

Mat2 sigma3() {
  Mat2 m;
  m << 1, 0, 0, -1;
  return m;
}

Mat2 sigma_plus() {
  Mat2 m;
  m << 0, 1, 0, 0;
  return m;
}

Mat2 sigma_minus() {
  Mat2 m;
  m << 0, 0, 1, 0;
  return m;
}

RootBasis root_basis() { return RootBasis{sigma_plus(), sigma_minus(), sigma3()}; }

Mat2 bracket(const Mat2& x, const Mat2& y) { return x * y - y * x; }

Complex KillingForm::operator()(const Mat2& x, const Mat2& y) const {
  return scale * (x * y).trace();
}

Mat2 tau_group(int n, double alpha) {
  const double half = 0.5 * n * alpha;
  Mat2 m;
  m << std::exp(I * half), 0, 0, std::exp(-I * half);
  return m;
}

Mat2 tau_algebra(int n, const Mat2& h_multiple) {
  const Mat2 cartan = project_cartan(h_multiple);
  if ((h_multiple - cartan).norm() > 1e-12 * (1.0 + h_multiple.norm())) {
    throw std::invalid_argument("tau_algebra: argument is not on the Cartan line");
  }
  return double(n) * cartan;
}

Mat2 project_cartan(const Mat2& x) {
  return 0.5 * (x(0, 0) - x(1, 1)) * sigma3();
}

Mat2 project_root_plane(const Mat2& x) {
  Mat2 m = Mat2::Zero();
  m(0, 1) = x(0, 1);
  m(1, 0) = x(1, 0);
  return m;
}

namespace {

Eigen::Vector4cd vectorize(const Mat2& m) {
  Eigen::Vector4cd v;
  v << m(0, 0), m(0, 1), m(1, 0), m(1, 1);
  return v;
}

Mat2 unvectorize(const Eigen::Vector4cd& v) {
  Mat2 m;
  m << v(0), v(1), v(2), v(3);
  return m;
}

}  // namespace

std::vector<AdEigenPair> ad_eigen_decomposition(const Mat2& h,
                                                const std::vector<Mat2>& space,
                                                double tol) {
  const int dim = static_cast<int>(space.size());
  if (dim == 0) return {};

  Eigen::MatrixXcd basis(4, dim);
  for (int j = 0; j < dim; ++j) basis.col(j) = vectorize(space[j]);

  // Representation matrix of ad(h) in the given basis, obtained by
  // least squares; the residual certifies ad(h)-invariance of the span.
  Eigen::MatrixXcd image(4, dim);
  for (int j = 0; j < dim; ++j) image.col(j) = vectorize(bracket(h, space[j]));

  const auto solver = basis.colPivHouseholderQr();
  Eigen::MatrixXcd rep(dim, dim);
  for (int j = 0; j < dim; ++j) {
    const Eigen::VectorXcd coords = solver.solve(image.col(j));
    const double residual = (basis * coords - image.col(j)).norm();
    if (residual > tol * (1.0 + image.col(j).norm())) {
      throw std::invalid_argument(
          "ad_eigen_decomposition: span is not ad(h)-invariant");
    }
    rep.col(j) = coords;
  }

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> eig(rep);
  std::vector<AdEigenPair> out;
  out.reserve(dim);
  for (int k = 0; k < dim; ++k) {
    const Eigen::VectorXcd coords = eig.eigenvectors().col(k);
    out.push_back({eig.eigenvalues()(k), unvectorize(basis * coords)});
  }
  std::sort(out.begin(), out.end(), [](const AdEigenPair& a, const AdEigenPair& b) {
    return a.eigenvalue.real() > b.eigenvalue.real();
  });
  return out;
}

}  // namespace csdr
