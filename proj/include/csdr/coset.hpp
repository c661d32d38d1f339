#ifndef CSDR_COSET_HPP
#define CSDR_COSET_HPP

#include "csdr/algebra.hpp"
#include "csdr/forms.hpp"

namespace csdr {

// The sphere as SU(2)/U(1), covered by two charts in angle coordinates:
// chart 1 excludes the south pole (theta = pi), chart 2 the north pole
// (theta = 0). Only the (theta, phi) description is materialized; the
// stereographic maps themselves are never needed.

struct ChartPoint {
  int chart = 1;
  double theta = 0.0;
  double phi = 0.0;
};

/// Domain test: chart 1 admits 0 <= theta < pi, chart 2 admits 0 < theta <= pi.
bool in_chart_domain(int chart, double theta);

/// Local section U_j -> SU(2), the product of three one-parameter
/// exponentials. Unitary with determinant 1 everywhere on its chart.
/// Throws std::domain_error at the excluded pole or for an unknown chart.
Mat2 section_eval(int chart, double theta, double phi);

/// Maurer-Cartan pullback k^{-1} dk split into the isotropy (sigma3) part
/// and the complement (sigma1, sigma2) part, as closed-form coefficients.
struct MaurerCartanSplit {
  OneForm isotropy_part;    // proportional to sigma3
  OneForm complement_part;  // spans sigma1, sigma2
};

MaurerCartanSplit maurer_cartan_pullback(int chart);

/// One sampled coefficient pair of a 1-form.
struct OneFormSample {
  Mat2 d_theta;
  Mat2 d_phi;
};

/// Central-difference evaluation of k^{-1} dk at an interior point; the
/// independent oracle for the closed forms. Throws on step underflow or
/// outside the chart domain.
OneFormSample maurer_cartan_numeric(int chart, const ChartPoint& p, double step);

}  // namespace csdr

#endif
