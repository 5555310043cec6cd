#include "mordell/quad.hpp"

#include <cmath>

#include "doctest.h"
#include "mordell/errors.hpp"
#include "mordell/specfun.hpp"

using namespace mordell;
namespace sf = mordell::specfun;

namespace {

quad::QuadResult gaussian_sin(double alpha, double z, const quad::QuadConfig& cfg) {
  return quad::integrate_gaussian(
      [alpha, z](double x) {
        return Complex(std::exp(-kPi * alpha * alpha * x * x) *
                           std::sin(kSqrtPi * alpha * x * z),
                       0.0);
      },
      kPi * alpha * alpha, quad::Domain::positive_axis, cfg);
}

}  // namespace

TEST_CASE("plain Gaussian integral") {
  quad::QuadConfig cfg;
  auto r = quad::integrate_gaussian(
      [](double x) { return Complex(std::exp(-kPi * x * x), 0.0); }, kPi,
      quad::Domain::positive_axis, cfg);
  CHECK(std::abs(r.value - 0.5) < 1e-13);
  CHECK(r.err_estimate <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(r.value)));
  auto full = quad::integrate_gaussian(
      [](double x) { return Complex(std::exp(-kPi * x * x), 0.0); }, kPi,
      quad::Domain::full_line, cfg);
  CHECK(std::abs(full.value - 1.0) < 1e-13);
  auto neg = quad::integrate_gaussian(
      [](double x) { return Complex(x < 0.0 ? std::exp(-kPi * x * x) : 0.0, 0.0); },
      kPi, quad::Domain::negative_axis, cfg);
  CHECK(std::abs(neg.value - 0.5) < 1e-13);
}

TEST_CASE("sine moment reduces to 1F1") {
  // Int_0^inf e^{-pi a^2 x^2} sin(sqrt(pi) a x z) dx = z/(2 sqrt(pi) a) 1F1(1;3/2;-z^2/4)
  quad::QuadConfig cfg;
  double alpha = 1.0, z = 1.0;
  auto r = gaussian_sin(alpha, z, cfg);
  double want = z / (2.0 * kSqrtPi * alpha) * 0.848872767004044592;
  CHECK(std::abs(r.value.real() - want) < 1e-13);
}

TEST_CASE("sine over x reduces to erf") {
  // Int_0^inf e^{-pi a^2 x^2} sin(sqrt(pi) a x z)/x dx = (pi/2) erf(z/2)
  quad::QuadConfig cfg;
  double alpha = 2.0, z = 1.5;
  double w = kSqrtPi * alpha * z;
  auto r = quad::integrate_gaussian(
      [alpha, w](double x) {
        double s = std::abs(w * x) < 1e-5 ? w * (1.0 - w * w * x * x / 6.0)
                                          : std::sin(w * x) / x;
        return Complex(std::exp(-kPi * alpha * alpha * x * x) * s, 0.0);
      },
      kPi * alpha * alpha, quad::Domain::positive_axis, cfg);
  double want = 0.5 * kPi * sf::erf({0.5 * z, 0.0}).real();
  CHECK(std::abs(r.value.real() - want) < 1e-12);
}

TEST_CASE("sine moment in erfi form") {
  // Int_0^inf e^{-pi a^2 x^2} sin(sqrt(pi) a x z) dx = e^{-z^2/4} erfi(z/2)/(2a)
  quad::QuadConfig cfg;
  double alpha = 1.3, z = 0.9;
  auto r = gaussian_sin(alpha, z, cfg);
  double want = std::exp(-z * z / 4.0) * sf::erfi({0.5 * z, 0.0}).real() / (2.0 * alpha);
  CHECK(std::abs(r.value.real() - want) < 1e-13);
}

TEST_CASE("xi-axis harness self-test") {
  quad::QuadConfig cfg;
  auto r = quad::integrate_xi_axis(
      [](double t) { return Complex(t * std::exp(-t), 0.0); }, cfg);
  CHECK(std::abs(r.value - 1.0) < 1e-12);
  CHECK(r.truncation_point >= 60.0);
}

TEST_CASE("xi-axis Gamma-damped integral matches the closed combination") {
  // Int_0^inf GG Xi(t/2) dt = 4 pi sqrt(pi) (1 - 4 pi Int_0^inf x e^{-pi x^2}/(e^{2pi x}-1) dx)
  quad::QuadConfig cfg;
  auto lhs = quad::integrate_xi_axis(
      [](double t) {
        Complex g = sf::gamma(Complex(-0.25, 0.25 * t));
        return g * std::conj(g) * sf::xi_capital(Complex(0.5 * t, 0.0));
      },
      cfg);
  auto bose = quad::integrate_gaussian(
      [](double x) {
        double b = x < 1e-4 ? 1.0 / (2.0 * kPi) * (1.0 - kPi * x)
                            : x / std::expm1(2.0 * kPi * x);
        return Complex(std::exp(-kPi * x * x) * b, 0.0);
      },
      kPi, quad::Domain::positive_axis, cfg, 2.0 * kPi, 1.0);
  double rhs = 4.0 * kPi * kSqrtPi * (1.0 - 4.0 * kPi * bose.value.real());
  CHECK(std::abs(lhs.value.real() - rhs) < 1e-10 * std::abs(rhs));
}

TEST_CASE("halving rel_tol never increases the true error") {
  double reference = 0.5;  // Int_0^inf e^{-pi x^2}
  double prev = 1.0;
  for (double rt : {1e-4, 5e-5, 2.5e-5, 1e-6, 1e-8, 1e-10}) {
    quad::QuadConfig cfg;
    cfg.rel_tol = rt;
    cfg.abs_tol = 1e-18;
    auto r = quad::integrate_gaussian(
        [](double x) { return Complex(std::exp(-kPi * x * x) * std::cos(3.0 * x), 0.0); },
        kPi, quad::Domain::positive_axis, cfg);
    // closed form: (1/2) e^{-9/(4pi)}
    double want = 0.5 * std::exp(-9.0 / (4.0 * kPi));
    double err = std::abs(r.value.real() - want);
    CHECK(err <= prev + 1e-16);
    CHECK(err <= r.err_estimate + 1e-16);  // estimate bounds the truth
    prev = err;
    (void)reference;
  }
}

TEST_CASE("error estimate bounds the true error on closed forms") {
  for (double rt : {1e-6, 1e-9, 1e-12}) {
    quad::QuadConfig cfg;
    cfg.rel_tol = rt;
    auto r = gaussian_sin(1.0, 1.0, cfg);
    double want = 1.0 / (2.0 * kSqrtPi) * 0.848872767004044592;
    CHECK(std::abs(r.value.real() - want) <= r.err_estimate + 1e-15);
  }
}

TEST_CASE("config validation and integrand failures") {
  quad::QuadConfig bad;
  bad.rel_tol = -1.0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad = quad::QuadConfig{};
  bad.max_refinements = 0;
  CHECK_THROWS_AS(bad.validate(), DomainError);

  quad::QuadConfig cfg;
  CHECK_THROWS_AS(quad::integrate_gaussian(
                      [](double) { return Complex(0.0, 0.0); }, 0.0,
                      quad::Domain::positive_axis, cfg),
                  DomainError);
  CHECK_THROWS_AS(quad::integrate_gaussian(
                      [](double x) {
                        return Complex(x > 2.0 ? std::nan("") : 1.0, 0.0) *
                               std::exp(-x * x);
                      },
                      1.0, quad::Domain::positive_axis, cfg),
                  SingularityError);
}

TEST_CASE("tolerances below the rounding floor fail honestly") {
  // heavy oscillatory cancellation puts the achievable accuracy well above
  // an absolute demand of 1e-18
  quad::QuadConfig cfg;
  cfg.rel_tol = 1e-16;
  cfg.abs_tol = 1e-19;
  cfg.max_refinements = 20;
  CHECK_THROWS_AS(quad::integrate_gaussian(
                      [](double x) {
                        return Complex(std::exp(-0.05 * x * x) * std::cos(1.3 * x), 0.0);
                      },
                      0.05, quad::Domain::full_line, cfg),
                  ConvergenceError);
}

TEST_CASE("finite-interval building block") {
  quad::QuadConfig cfg;
  auto r = quad::integrate_finite(
      [](double x) { return Complex(std::sin(x), 0.0); }, 0.0, kPi, cfg);
  CHECK(std::abs(r.value - 2.0) < 1e-13);
}
