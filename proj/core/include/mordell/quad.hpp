#pragma once

#include <functional>

#include "mordell/types.hpp"

namespace mordell::quad {

struct QuadConfig {
  double rel_tol = 1e-12;
  double abs_tol = 1e-15;
  double truncation_safety = 40.0;  // e-foldings of envelope decay kept past the max
  int max_refinements = 12;         // adaptive subdivision rounds

  void validate() const;
};

struct QuadResult {
  Complex value{};
  double err_estimate = 0.0;
  int panels = 0;
  double truncation_point = 0.0;
};

enum class Domain { positive_axis, negative_axis, full_line };

using Integrand = std::function<Complex(double)>;

// Integral of f over the chosen half-line / line for integrands bounded by
// C exp(-decay_rate x^2 - linear_rate x) x^poly_degree (linear_rate may be
// negative for growing trig factors). Truncation solves the envelope budget
// analytically; then adaptive Gauss-Kronrod panels to tolerance.
// negative_axis integrates f(-x) on [0, T]; full_line integrates f(x)+f(-x).
QuadResult integrate_gaussian(const Integrand& f, double decay_rate,
                              Domain domain, const QuadConfig& cfg,
                              double linear_rate = 0.0,
                              double poly_degree = 0.0);

// Integral over t in [0, inf) of a Gamma-damped Xi-axis integrand
// (|g| <= C e^{-pi t/4} poly(t)); truncation at max(60, 4*safety/pi).
QuadResult integrate_xi_axis(const Integrand& g, const QuadConfig& cfg);

// Adaptive Gauss-Kronrod on a finite interval (building block of the above).
QuadResult integrate_finite(const Integrand& f, double a, double b,
                            const QuadConfig& cfg);

}  // namespace mordell::quad
