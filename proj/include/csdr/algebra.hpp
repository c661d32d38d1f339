#ifndef CSDR_ALGEBRA_HPP
#define CSDR_ALGEBRA_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace csdr {

using Complex = std::complex<double>;

/// Element of su(2) or its complexification sl(2,C), stored as a dense
/// 2x2 complex matrix. Immutable value semantics throughout.
using Mat2 = Eigen::Matrix2cd;

// Pauli matrices and the standard rank-1 root basis built from them.
Mat2 sigma1();
Mat2 sigma2();
Mat2 sigma3();
Mat2 sigma_plus();   // (sigma1 + i sigma2)/2
Mat2 sigma_minus();  // (sigma1 - i sigma2)/2

/// Root basis of A1: raising/lowering vectors and the Cartan element,
/// satisfying [h, e_pm] = +-2 e_pm and [e_plus, e_minus] = h.
struct RootBasis {
  Mat2 e_plus;
  Mat2 e_minus;
  Mat2 h;
};

RootBasis root_basis();

/// Commutator XY - YX.
Mat2 bracket(const Mat2& x, const Mat2& y);

/// Invariant pairing <X,Y> = scale * tr(XY). The scale is fixed once by
/// calibrating the Yang-Mills action of the unit monopole (see action.hpp)
/// and is negative for anti-hermitian conventions.
struct KillingForm {
  double scale = 1.0;
  Complex operator()(const Mat2& x, const Mat2& y) const;
};

/// The U(1) -> SU(2) homomorphism family: exp(i sigma3 a/2) |-> exp(i n sigma3 a/2).
Mat2 tau_group(int n, double alpha);

/// Differential of tau_group on the Cartan line: any multiple of sigma3
/// maps to n times itself. Throws if the argument is not proportional to
/// sigma3 (the isotropy algebra is one-dimensional).
Mat2 tau_algebra(int n, const Mat2& h_multiple);

/// Component of X along sigma3 (traceless diagonal part).
Mat2 project_cartan(const Mat2& x);

/// Off-diagonal part of X, the complement of the Cartan line inside sl(2,C).
Mat2 project_root_plane(const Mat2& x);

struct AdEigenPair {
  Complex eigenvalue;
  Mat2 eigenvector;
};

/// Diagonalizes ad(h) = [h, .] restricted to the span of `space`.
/// The basis must span an ad(h)-invariant subspace; a residual above
/// `tol` in the invariance check raises std::invalid_argument.
/// Pairs are returned sorted by descending real part of the eigenvalue.
std::vector<AdEigenPair> ad_eigen_decomposition(const Mat2& h,
                                                const std::vector<Mat2>& space,
                                                double tol = 1e-9);

}  // namespace csdr

#endif
