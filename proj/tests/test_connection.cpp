#include <doctest.h>

#include <cmath>
#include <numbers>

#include "csdr/connection.hpp"

using namespace csdr;

namespace {
constexpr double kPi = std::numbers::pi;
const Complex I{0.0, 1.0};
}  // namespace

TEST_CASE("intertwiner is nonzero exactly for n = +-1") {
  for (int n : {-3, -2, 0, 2, 3}) {
    CHECK(build_intertwiner(n, Complex{1.0, 0.0}).is_zero());
  }
  CHECK(!build_intertwiner(1, Complex{1.0, 0.0}).is_zero());
  CHECK(!build_intertwiner(-1, Complex{1.0, 0.0}).is_zero());
}

TEST_CASE("intertwiner action for n = 1") {
  const Complex f{0.3, 0.4};
  const Intertwiner phi = build_intertwiner(1, f);
  CHECK((phi.apply(sigma_plus()) - Mat2(f * sigma_plus())).norm() < 1e-14);
  CHECK((phi.apply(sigma_minus()) - Mat2(std::conj(f) * sigma_minus())).norm() < 1e-14);
}

TEST_CASE("intertwiner action for n = -1 crosses the root vectors") {
  const Complex f{0.6, -0.2};
  const Intertwiner phi = build_intertwiner(-1, f);
  CHECK((phi.apply(sigma_plus()) - Mat2(f * sigma_minus())).norm() < 1e-14);
  CHECK((phi.apply(sigma_minus()) - Mat2(std::conj(f) * sigma_plus())).norm() < 1e-14);
}

TEST_CASE("intertwiner equivariance") {
  const RootBasis r = root_basis();
  for (int n : {1, -1}) {
    const Intertwiner phi = build_intertwiner(n, Complex{0.5, 0.7});
    for (const Mat2& x : {r.e_plus, r.e_minus}) {
      const Mat2 lhs = phi.apply(bracket(r.h, x));
      const Mat2 rhs = bracket(tau_algebra(n, r.h), phi.apply(x));
      CHECK((lhs - rhs).norm() < 1e-12);
    }
  }
}

TEST_CASE("assembled potential entries for n = 1") {
  const Complex f{0.3, 0.4};
  const InvariantPotential a = assemble_potential(1, f);
  for (double t : {0.6, 1.5, 2.3}) {
    for (double p : {0.0, 1.1, 4.0}) {
      const Mat2 at = a.chart1.d_theta(t, p);
      const Mat2 ap = a.chart1.d_phi(t, p);
      CHECK(std::abs(at(0, 1) - f * std::exp(-I * p)) < 1e-14);
      CHECK(std::abs(ap(0, 1) + I * f * std::sin(t) * std::exp(-I * p)) < 1e-14);
      // diagonal carries the monopole part i sigma3 (1 - cos theta) on dphi
      CHECK(std::abs(ap(0, 0) - I * (1.0 - std::cos(t))) < 1e-14);
      CHECK(std::abs(at(0, 0)) < 1e-15);
    }
  }
}

TEST_CASE("abelian members ignore f") {
  const InvariantPotential a0 = assemble_potential(3, Complex{0, 0});
  const InvariantPotential a1 = assemble_potential(3, Complex{0.8, 0.1});
  CHECK(a1.f == Complex{0.0, 0.0});
  for (double t : {0.5, 2.0}) {
    CHECK((a0.chart1.d_phi(t, 0.3) - a1.chart1.d_phi(t, 0.3)).norm() < 1e-15);
  }
}

TEST_CASE("curvature closed form for n = 1") {
  for (Complex f : {Complex{0, 0}, Complex{0.5, 0}, Complex{0.3, 0.4}}) {
    const InvariantPotential a = assemble_potential(1, f);
    const TwoForm curv = curvature_direct(a, 1);
    const double m = std::norm(f) - 1.0;
    for (double t : {0.4, 1.6, 2.7}) {
      for (double p : {0.2, 3.3}) {
        const Mat2 expected = -I * m * std::sin(t) * sigma3();
        CHECK((curv.coeff(t, p) - expected).norm() < 1e-7);
      }
    }
  }
}

TEST_CASE("unit-modulus members are flat") {
  for (int n : {1, -1}) {
    for (double arg : {0.0, 1.0, 2.5}) {
      const InvariantPotential a = assemble_potential(n, std::polar(1.0, arg));
      CHECK(sup_curvature_norm(curvature_direct(a, 1), 16) < 1e-8);
    }
  }
}

TEST_CASE("curvature for n = 2 is the charge-2 monopole") {
  const TwoForm curv = curvature_reduced(2, Complex{0, 0}, 1);
  for (double t : {0.5, 1.4, 2.6}) {
    CHECK((curv.coeff(t, 0.9) - Mat2(2.0 * I * std::sin(t) * sigma3())).norm() < 1e-13);
  }
}

TEST_CASE("two curvature routes agree") {
  for (int n : {-1, 0, 1, 2}) {
    for (Complex f : {Complex{0, 0}, Complex{1, 0}, Complex{0.5, 0.5}}) {
      const InvariantPotential a = assemble_potential(n, f);
      const TwoForm direct = curvature_direct(a, 1);
      const TwoForm reduced = curvature_reduced(n, f, 1);
      for (double t : {0.3, 1.2, 2.8}) {
        for (double p : {0.0, 2.2, 5.1}) {
          CHECK((direct.coeff(t, p) - reduced.coeff(t, p)).norm() < 1e-7);
        }
      }
    }
  }
}

TEST_CASE("gauge transformations are single-valued special unitaries") {
  for (int chart : {1, 2}) {
    const GaugeTransformation v = standard_transform(chart);
    for (double t : {0.4, 1.9}) {
      const Mat2 m = v.value(t, 0.8);
      CHECK((m * m.adjoint() - Mat2::Identity()).norm() < 1e-14);
      CHECK(std::abs(m.determinant() - Complex{1, 0}) < 1e-14);
      CHECK((v.value(t, 0.8) - v.value(t, 0.8 + 2.0 * kPi)).norm() < 1e-12);
    }
  }
}

TEST_CASE("transformed f = 0 potential is the known global monopole") {
  const InvariantPotential a = assemble_potential(1, Complex{0, 0});
  const OneForm ap = gauge_transform(a.chart1, standard_transform(1));
  for (double t : {0.5, 1.3, 2.4}) {
    for (double p : {0.0, 1.9, 4.7}) {
      Mat2 et, ep;
      et << 0.0, std::exp(-I * p), -std::exp(I * p), 0.0;
      ep << 0.5 * I * (1.0 - std::cos(2.0 * t)),
          -0.5 * I * std::exp(-I * p) * std::sin(2.0 * t),
          -0.5 * I * std::exp(I * p) * std::sin(2.0 * t),
          -0.5 * I * (1.0 - std::cos(2.0 * t));
      CHECK((ap.d_theta(t, p) - et).norm() < 1e-8);
      CHECK((ap.d_phi(t, p) - ep).norm() < 1e-8);
    }
  }
}

TEST_CASE("patch agreement for several parameters") {
  for (Complex f : {Complex{0, 0}, Complex{1, 0}, Complex{0.4, -0.3}}) {
    const InvariantPotential a = assemble_potential(1, f);
    const AgreementReport r =
        patch_agreement(a, standard_transform(1), standard_transform(2), 16);
    CHECK(r.sup_residual < 1e-8);
  }
  const InvariantPotential a = assemble_potential(1, Complex{0, 0});
  CHECK_THROWS_AS(
      (void)patch_agreement(a, standard_transform(1), standard_transform(2), 1),
      std::invalid_argument);
}

TEST_CASE("abelian transition function glues the monopole charts") {
  for (int n : {-2, 1, 3}) {
    const InvariantPotential a = assemble_potential(n, Complex{0.5, -0.5});
    const AgreementReport glued = patch_agreement(
        a, constant_transform(1, Mat2::Identity()), monopole_transition(2, n), 16);
    CHECK(glued.sup_residual < 1e-8);
    // Untransformed charts differ by the known -2 i n sigma3 dphi mismatch.
    const AgreementReport raw =
        patch_agreement(a, constant_transform(1, Mat2::Identity()),
                        constant_transform(2, Mat2::Identity()), 16);
    CHECK(raw.sup_residual > 0.1);
  }
}

TEST_CASE("gauge transform guards chart mismatch") {
  const InvariantPotential a = assemble_potential(1, Complex{0, 0});
  CHECK_THROWS_AS((void)gauge_transform(a.chart1, standard_transform(2)),
                  std::invalid_argument);
}

TEST_CASE("residual phase rotations move the parameter, not the orbit") {
  // Conjugating by the isotropy element rotates f by a phase.
  const double alpha = 1.3;
  const InvariantPotential a = assemble_potential(1, Complex{0.7, 0.2});
  const InvariantPotential b =
      assemble_potential(1, Complex{0.7, 0.2} * std::exp(-I * alpha));
  const Mat2 u = tau_group(1, alpha);
  const GaugeTransformation rot = constant_transform(1, u);
  const OneForm rotated = gauge_transform(a.chart1, rot);
  for (double t : {0.6, 2.1}) {
    for (double p : {0.5, 3.7}) {
      CHECK((rotated.d_theta(t, p) - b.chart1.d_theta(t, p)).norm() < 1e-10);
      CHECK((rotated.d_phi(t, p) - b.chart1.d_phi(t, p)).norm() < 1e-10);
    }
  }
}

TEST_CASE("sigma1 conjugation maps n to -n") {
  const Mat2 s = -I * sigma1();
  for (int n : {1, 2, 3}) {
    const InvariantPotential plus = assemble_potential(n, Complex{0.4, 0.1});
    const InvariantPotential minus = assemble_potential(-n, Complex{0.4, 0.1});
    for (double t : {0.7, 1.8}) {
      for (double p : {0.0, 2.9}) {
        const Mat2 conj_t = s.inverse() * plus.chart1.d_theta(t, p) * s;
        const Mat2 conj_p = s.inverse() * plus.chart1.d_phi(t, p) * s;
        CHECK((conj_t - minus.chart1.d_theta(t, p)).norm() < 1e-12);
        CHECK((conj_p - minus.chart1.d_phi(t, p)).norm() < 1e-12);
      }
    }
  }
}
