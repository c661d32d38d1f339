#include "csdr/coset.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace csdr {

namespace {

const Complex I{0.0, 1.0};

// exp(i a sigma3 / 2) and exp(i a sigma2 / 2) in closed form.
Mat2 exp_sigma3(double a) {
  Mat2 m;
  m << std::exp(I * (0.5 * a)), 0, 0, std::exp(-I * (0.5 * a));
  return m;
}

Mat2 exp_sigma2(double a) {
  const double c = std::cos(0.5 * a), s = std::sin(0.5 * a);
  Mat2 m;
  m << c, s, -s, c;
  return m;
}

}  // namespace

bool in_chart_domain(int chart, double theta) {
  if (chart == 1) return theta >= 0.0 && theta < std::numbers::pi;
  if (chart == 2) return theta > 0.0 && theta <= std::numbers::pi;
  return false;
}

Mat2 section_eval(int chart, double theta, double phi) {
  if (!in_chart_domain(chart, theta)) {
    throw std::domain_error("section_eval: point outside chart domain");
  }
  if (chart == 1) {
    return exp_sigma3(-phi) * exp_sigma2(theta) * exp_sigma3(phi);
  }
  return exp_sigma3(phi) * exp_sigma2(theta - std::numbers::pi) * exp_sigma3(-phi);
}

MaurerCartanSplit maurer_cartan_pullback(int chart) {
  if (chart != 1 && chart != 2) {
    throw std::invalid_argument("maurer_cartan_pullback: unknown chart");
  }
  const double sign = (chart == 1) ? 1.0 : -1.0;

  OneForm isotropy{chart,
                   [](double, double) { return Mat2(Mat2::Zero()); },
                   [sign](double t, double) {
                     return Mat2(sign * I * 0.5 * (1.0 - sign * std::cos(t)) * sigma3());
                   }};

  // Chart 1: i s1/2 (-sin phi dtheta - sin t cos phi dphi)
  //        + i s2/2 ( cos phi dtheta - sin t sin phi dphi);
  // chart 2 flips the signs of the sin phi dtheta and sin t sin phi dphi terms.
  OneForm complement{
      chart,
      [sign](double, double p) {
        return Mat2(I * 0.5 * (-sign * std::sin(p) * sigma1() + std::cos(p) * sigma2()));
      },
      [sign](double t, double p) {
        const double st = std::sin(t);
        return Mat2(I * 0.5 *
                    (-st * std::cos(p) * sigma1() - sign * st * std::sin(p) * sigma2()));
      }};

  return MaurerCartanSplit{std::move(isotropy), std::move(complement)};
}

OneFormSample maurer_cartan_numeric(int chart, const ChartPoint& p, double step) {
  if (!(step > 1e-12)) {
    throw std::invalid_argument("maurer_cartan_numeric: step underflow");
  }
  if (!in_chart_domain(chart, p.theta - step) || !in_chart_domain(chart, p.theta + step)) {
    throw std::domain_error("maurer_cartan_numeric: point too close to chart boundary");
  }
  const Mat2 kinv = section_eval(chart, p.theta, p.phi).inverse();
  const Mat2 dk_dtheta = (section_eval(chart, p.theta + step, p.phi) -
                          section_eval(chart, p.theta - step, p.phi)) /
                         (2.0 * step);
  const Mat2 dk_dphi = (section_eval(chart, p.theta, p.phi + step) -
                        section_eval(chart, p.theta, p.phi - step)) /
                       (2.0 * step);
  return OneFormSample{Mat2(kinv * dk_dtheta), Mat2(kinv * dk_dphi)};
}

}  // namespace csdr
