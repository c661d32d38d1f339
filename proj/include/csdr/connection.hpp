#ifndef CSDR_CONNECTION_HPP
#define CSDR_CONNECTION_HPP

#include <optional>
#include <string>

#include "csdr/algebra.hpp"
#include "csdr/coset.hpp"
#include "csdr/forms.hpp"

namespace csdr {

/// Equivariant map from the coset complement into the gauge algebra,
/// obtained by matching ad-eigenvalues (Schur). Nonzero only for n = +-1,
/// in which case it is the one-complex-parameter family
/// e_plus |-> f E_plus, e_minus |-> conj(f) E_minus; the conjugate
/// coefficient is structural (reality condition), not stored separately.
class Intertwiner {
 public:
  int n() const { return n_; }
  Complex f() const { return f_; }
  bool is_zero() const { return pairs_.empty(); }

  /// Applies the map to an element of span{e_plus, e_minus}.
  Mat2 apply(const Mat2& m) const;

  friend Intertwiner build_intertwiner(int n, Complex f);

 private:
  struct MatchedPair {
    Mat2 source;  // eigenvector in the complement, normalized
    Mat2 target;  // matched eigenvector in the gauge algebra, normalized
    Complex coefficient;
  };
  int n_ = 0;
  Complex f_{0.0, 0.0};
  std::vector<MatchedPair> pairs_;
};

/// Constructs the intertwiner by diagonalizing ad(h) on the complement
/// ({+2, -2}) and ad(n h) on the gauge algebra ({0, +2n, -2n}) and pairing
/// equal eigenvalues. Emits the zero map when nothing matches; a nonzero f
/// supplied in that case is ignored (the caller may warn).
Intertwiner build_intertwiner(int n, Complex f);

/// The invariant gauge potential on both charts: the homomorphism applied
/// to the isotropy part of the Maurer-Cartan pullback plus the intertwiner
/// applied to the complement part, with an overall normalization of 2
/// frozen so that the n = 1, f = 0 member is the standard charge-1
/// monopole potential (see curvature_direct).
struct InvariantPotential {
  int n = 1;
  Complex f{0.0, 0.0};
  OneForm chart1;
  OneForm chart2;

  const OneForm& on_chart(int chart) const;
};

InvariantPotential assemble_potential(int n, Complex f);

/// Curvature F = dA + (1/2)[A_theta, A_phi] dtheta^dphi, the exterior
/// derivative taken by central differences. The commutator weight is the
/// one under which the assembled family has the closed-form curvature
/// -i sigma3 (|f|^2 - 1) sin theta dtheta^dphi at n = 1.
TwoForm curvature_direct(const InvariantPotential& a, int chart, double step = 1e-5);

/// Curvature of an arbitrary chart-local 1-form under the same convention.
TwoForm curvature_form(const OneForm& a, double step = 1e-5);

/// Same curvature through the reduced formula: quadratic intertwiner term
/// minus the images of the complement-complement bracket under the
/// intertwiner and the homomorphism. Closed form, no differentiation.
TwoForm curvature_reduced(int n, Complex f, int chart);

/// Chart-local gauge transformation by a unitary-valued function.
struct GaugeTransformation {
  int chart = 1;
  std::function<Mat2(double, double)> value;
};

/// The two standard single-valued transformations that glue the invariant
/// family into one globally regular potential.
GaugeTransformation standard_transform(int chart);

GaugeTransformation constant_transform(int chart, const Mat2& v);

/// The abelian transition exp(i n sigma3 phi) relating the two chart
/// potentials of the charge-n monopole family.
GaugeTransformation monopole_transition(int chart, int n);

/// A' = V^{-1} A V + 2 V^{-1} dV, with dV by central differences: the
/// standard transformation of the half-scale connection, rescaled to the
/// normalization of the assembled potential. Throws on chart mismatch.
OneForm gauge_transform(const OneForm& a, const GaugeTransformation& v,
                        double step = 1e-5);

struct AgreementReport {
  double sup_residual = 0.0;
  int grid_n = 0;
};

/// Sup-norm difference between the v1-transformed chart-1 potential and the
/// v2-transformed chart-2 potential over an interior overlap grid.
/// Throws on an empty grid.
AgreementReport patch_agreement(const InvariantPotential& a,
                                const GaugeTransformation& v1,
                                const GaugeTransformation& v2, int grid_n);

/// Sup over an interior grid of the Frobenius norm of the curvature coefficient.
double sup_curvature_norm(const TwoForm& f, int grid_n);

}  // namespace csdr

#endif
