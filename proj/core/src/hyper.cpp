#include "mordell/hyper.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "mordell/errors.hpp"

namespace mordell::hyper {

namespace {

// plain Taylor sum; terminates on its own when a is a non-positive integer
Complex kummer_series(Complex a, Complex c, Complex w) {
  CompensatedSum<Complex> sum;
  Complex term = 1.0;
  int quiet = 0;
  for (int m = 0; m < 10000; ++m) {
    sum.add(term);
    if (is_nonpositive_integer(a) && m >= static_cast<int>(-a.real())) return sum.value();
    term *= (a + static_cast<double>(m)) /
            ((c + static_cast<double>(m)) * static_cast<double>(m + 1)) * w;
    double mag = std::abs(term);
    if (mag <= 0.25e-14 * std::abs(sum.value())) {
      if (++quiet >= 2) {
        sum.add(term);
        return sum.value();
      }
    } else {
      quiet = 0;
    }
  }
  throw ConvergenceError("kummer_1f1: tail bound not met within 10^4 terms");
}

}  // namespace

namespace {

HypergeometricPolynomial build_terminating_poly(int k2, const Rational& c) {
  HypergeometricPolynomial poly;
  poly.degree = k2;
  poly.coefficients.resize(static_cast<std::size_t>(k2) + 1);
  Rational coeff = 1;  // (-k2)_m / ((c)_m m!), exact
  for (int m = 0; m <= k2; ++m) {
    poly.coefficients[static_cast<std::size_t>(m)] = static_cast<double>(coeff);
    coeff *= Rational(m - k2) / ((c + m) * Rational(m + 1));
  }
  return poly;
}

}  // namespace

Complex kummer_1f1(Complex a, Complex c, Complex w) {
  if (is_nonpositive_integer(c))
    throw DomainError("kummer_1f1: c must not be a non-positive integer");
  if (std::abs(w) > 100.0)
    throw DomainError("kummer_1f1: |w| > 100 exceeds the convergence budget");
  if (is_nonpositive_integer(a)) {
    // the terminating sums cancel heavily at large |w|; with real c the exact
    // rational coefficients plus compensated Horner keep full precision
    if (c.imag() == 0.0) {
      int k2 = static_cast<int>(std::lround(-a.real()));
      if (k2 <= 64) {
        HypergeometricPolynomial poly = build_terminating_poly(k2, Rational(c.real()));
        if (w.imag() == 0.0) return Complex(poly.eval(w.real()), 0.0);
        return poly.eval(w);
      }
    }
    return kummer_series(a, c, w);
  }
  if (w.real() < 0.0) return std::exp(w) * kummer_series(c - a, c, -w);
  return kummer_series(a, c, w);
}

double HypergeometricPolynomial::eval(double w) const {
  if (coefficients.empty()) return 0.0;
  // compensated Horner; the high-degree polynomials cancel by ~1e9 near the
  // turning point of the argument, which plain Horner turns into 1e-7
  // relative noise
  std::size_t n = coefficients.size();
  double s = coefficients[n - 1];
  double comp = 0.0;
  for (std::size_t i = n - 1; i-- > 0;) {
    double p = s * w;
    double e_prod = std::fma(s, w, -p);
    double t = p + coefficients[i];
    double bv = t - p;
    double e_sum = (p - (t - bv)) + (coefficients[i] - bv);
    comp = comp * w + (e_prod + e_sum);
    s = t;
  }
  return s + comp;
}

Complex HypergeometricPolynomial::eval(Complex w) const {
  Complex acc = 0.0;
  for (std::size_t i = coefficients.size(); i-- > 0;)
    acc = acc * w + coefficients[i];
  return acc;
}

const HypergeometricPolynomial& terminating_1f1_poly(int k2) {
  if (k2 < 0 || k2 > 64)
    throw DomainError("terminating_1f1: degree outside supported range");
  static std::map<int, HypergeometricPolynomial> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(k2);
  if (it != cache.end()) return it->second;
  return cache.emplace(k2, build_terminating_poly(k2, Rational(3, 2)))
      .first->second;
}

double terminating_1f1(int k2, double w) {
  return terminating_1f1_poly(k2).eval(w);
}

Complex terminating_1f1(int k2, Complex w) {
  return terminating_1f1_poly(k2).eval(w);
}

Rational gauss_2f1_spec_exact(int n) {
  if (n < 0) throw DomainError("gauss_2f1_spec: requires n >= 0");
  // sum_m (-n)_m (1)_m / ((3/2)_m m!) 2^m; term ratio 4(m-n)/(3+2m)
  Rational term = 1;
  Rational sum = 1;
  for (int m = 0; m < n; ++m) {
    term *= Rational(4 * (m - n), 3 + 2 * m);
    sum += term;
  }
  return sum;
}

double gauss_2f1_spec(int n) {
  return static_cast<double>(gauss_2f1_spec_exact(n));
}

}  // namespace mordell::hyper
