#include "csdr/connection.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace csdr {

namespace {

const Complex I{0.0, 1.0};

// Scale an eigenvector to the sigma_plus / sigma_minus convention:
// unit entry in the position of its largest component.
Mat2 normalize_root_vector(const Mat2& v) {
  int r = 0, c = 1;
  if (std::abs(v(1, 0)) > std::abs(v(0, 1))) {
    r = 1;
    c = 0;
  }
  if (std::abs(v(r, c)) < 1e-14) {
    throw std::runtime_error("normalize_root_vector: vector has no root component");
  }
  return Mat2(v / v(r, c));
}

}  // namespace

Mat2 Intertwiner::apply(const Mat2& m) const {
  Mat2 out = Mat2::Zero();
  for (const auto& pair : pairs_) {
    // Coordinates with respect to the normalized root vectors: sources are
    // sigma_plus / sigma_minus, so the coordinate is the matching entry.
    const Complex coord = pair.source(0, 1) != 0.0 ? m(0, 1) : m(1, 0);
    out += pair.coefficient * coord * pair.target;
  }
  return out;
}

Intertwiner build_intertwiner(int n, Complex f) {
  const RootBasis roots = root_basis();
  const auto complement_pairs =
      ad_eigen_decomposition(roots.h, {roots.e_plus, roots.e_minus});
  const Mat2 image_cartan = tau_algebra(n, roots.h);
  const auto gauge_pairs = ad_eigen_decomposition(
      image_cartan, {roots.e_plus, roots.e_minus, roots.h});

  Intertwiner phi;
  phi.n_ = n;
  phi.f_ = f;
  for (const auto& src : complement_pairs) {
    for (const auto& dst : gauge_pairs) {
      if (std::abs(src.eigenvalue - dst.eigenvalue) > 1e-9) continue;
      // Schur: equal nonzero weights intertwine; the zero-weight Cartan
      // direction never matches the +-2 weights of the complement.
      const Mat2 source = normalize_root_vector(src.eigenvector);
      const Mat2 target = normalize_root_vector(dst.eigenvector);
      const Complex coeff = src.eigenvalue.real() > 0 ? f : std::conj(f);
      phi.pairs_.push_back({source, target, coeff});
    }
  }
  if (phi.pairs_.empty()) phi.f_ = Complex{0.0, 0.0};
  return phi;
}

const OneForm& InvariantPotential::on_chart(int chart) const {
  if (chart == 1) return chart1;
  if (chart == 2) return chart2;
  throw std::invalid_argument("InvariantPotential: unknown chart");
}

namespace {

// Overall normalization of the assembled potential. Frozen so that the
// n = 1, f = 0 member reproduces the standard charge-1 monopole potential
// i sigma3 (1 - cos theta) dphi on chart 1.
constexpr double kPotentialScale = 2.0;

OneForm assemble_on_chart(int chart, int n, const Intertwiner& phi) {
  const MaurerCartanSplit mc = maurer_cartan_pullback(chart);
  const OneForm tau_part = map_coefficients(
      mc.isotropy_part, [n](const Mat2& x) { return tau_algebra(n, x); });
  const OneForm phi_part = map_coefficients(
      mc.complement_part, [phi](const Mat2& x) { return phi.apply(x); });
  return scale(add(tau_part, phi_part), kPotentialScale);
}

}  // namespace

InvariantPotential assemble_potential(int n, Complex f) {
  const Intertwiner phi = build_intertwiner(n, f);
  InvariantPotential a;
  a.n = n;
  a.f = phi.f();
  a.chart1 = assemble_on_chart(1, n, phi);
  a.chart2 = assemble_on_chart(2, n, phi);
  return a;
}

TwoForm curvature_form(const OneForm& a, double step) {
  const TwoForm d = exterior_derivative(a, step);
  // Commutator weight 1/2 on [A_theta, A_phi]; fixed together with the
  // potential normalization by the closed-form curvature of the family.
  const TwoForm comm = scale(wedge_bracket(a, a), 0.25);
  return add(d, comm);
}

TwoForm curvature_direct(const InvariantPotential& a, int chart, double step) {
  return curvature_form(a.on_chart(chart), step);
}

TwoForm curvature_reduced(int n, Complex f, int chart) {
  const Intertwiner phi = build_intertwiner(n, f);
  const MaurerCartanSplit mc = maurer_cartan_pullback(chart);
  auto mt = mc.complement_part.d_theta;
  auto mp = mc.complement_part.d_phi;
  return TwoForm{chart, [n, phi, mt, mp](double t, double p) {
                   const Mat2 a = mt(t, p), b = mp(t, p);
                   const Mat2 quad = bracket(phi.apply(a), phi.apply(b));
                   const Mat2 cc = bracket(a, b);
                   const Mat2 via_phi = phi.apply(project_root_plane(cc));
                   const Mat2 via_tau = tau_algebra(n, project_cartan(cc));
                   return Mat2(kPotentialScale * (quad - via_phi - via_tau));
                 }};
}

GaugeTransformation standard_transform(int chart) {
  if (chart == 1) {
    return {1, [](double t, double p) {
              const double c = std::cos(0.5 * t), s = std::sin(0.5 * t);
              Mat2 v;
              v << c, std::exp(-I * p) * s, std::exp(I * p) * s, -c;
              return Mat2(I * v);
            }};
  }
  if (chart == 2) {
    return {2, [](double t, double p) {
              const double c = std::cos(0.5 * t), s = std::sin(0.5 * t);
              Mat2 v;
              v << std::exp(I * p) * c, s, s, -std::exp(-I * p) * c;
              return Mat2(I * v);
            }};
  }
  throw std::invalid_argument("standard_transform: unknown chart");
}

GaugeTransformation constant_transform(int chart, const Mat2& v) {
  return {chart, [v](double, double) { return v; }};
}

GaugeTransformation monopole_transition(int chart, int n) {
  return {chart, [n](double, double p) { return tau_group(n, 2.0 * p); }};
}

OneForm gauge_transform(const OneForm& a, const GaugeTransformation& v, double step) {
  if (a.chart != v.chart) throw std::invalid_argument("gauge_transform: chart mismatch");
  auto at = a.d_theta, ap = a.d_phi;
  auto vf = v.value;
  // Standard law B' = V^{-1} B V + V^{-1} dV applied at half scale and
  // doubled, matching the overall normalization of the assembled potential
  // (the same bookkeeping that puts the 1/4 weight into curvature_form).
  auto transform = [vf, step](const CoeffFn& coeff, bool along_theta) {
    return [vf, step, coeff, along_theta](double t, double p) {
      const Mat2 vv = vf(t, p);
      const Mat2 vinv = vv.inverse();
      const Mat2 dv = along_theta
                          ? Mat2((vf(t + step, p) - vf(t - step, p)) / (2.0 * step))
                          : Mat2((vf(t, p + step) - vf(t, p - step)) / (2.0 * step));
      return Mat2(vinv * coeff(t, p) * vv + 2.0 * vinv * dv);
    };
  };
  return OneForm{a.chart, transform(at, true), transform(ap, false)};
}

namespace {

double grid_theta(int i, int n) {
  const double lo = 1e-3, hi = std::numbers::pi - 1e-3;
  return lo + (hi - lo) * i / (n - 1);
}

double grid_phi(int j, int n) { return 2.0 * std::numbers::pi * j / n; }

}  // namespace

AgreementReport patch_agreement(const InvariantPotential& a,
                                const GaugeTransformation& v1,
                                const GaugeTransformation& v2, int grid_n) {
  if (grid_n < 2) throw std::invalid_argument("patch_agreement: empty grid");
  const OneForm t1 = gauge_transform(a.chart1, v1);
  const OneForm t2 = gauge_transform(a.chart2, v2);
  double sup = 0.0;
  for (int i = 0; i < grid_n; ++i) {
    for (int j = 0; j < grid_n; ++j) {
      const double t = grid_theta(i, grid_n), p = grid_phi(j, grid_n);
      sup = std::max(sup, (t1.d_theta(t, p) - t2.d_theta(t, p)).norm());
      sup = std::max(sup, (t1.d_phi(t, p) - t2.d_phi(t, p)).norm());
    }
  }
  return AgreementReport{sup, grid_n};
}

double sup_curvature_norm(const TwoForm& f, int grid_n) {
  double sup = 0.0;
  for (int i = 0; i < grid_n; ++i) {
    for (int j = 0; j < grid_n; ++j) {
      const double t = grid_theta(i, grid_n), p = grid_phi(j, grid_n);
      sup = std::max(sup, f.coeff(t, p).norm());
    }
  }
  return sup;
}

}  // namespace csdr
