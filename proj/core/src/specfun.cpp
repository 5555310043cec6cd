#include "mordell/specfun.hpp"

#include <array>
#include <cmath>
#include <mutex>
#include <vector>

#include "mordell/errors.hpp"

namespace mordell::specfun {

namespace {

// Lanczos g = 7, n = 9 coefficient set.
constexpr int kLanczosG = 7;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

Complex lanczos_sum(Complex zm1) {
  Complex x = kLanczos[0];
  for (int i = 1; i < static_cast<int>(kLanczos.size()); ++i)
    x += kLanczos[i] / (zm1 + static_cast<double>(i));
  return x;
}

// log Gamma on Re s >= 1/2 via the Lanczos product in log form.
Complex log_gamma_right(Complex s) {
  Complex zm1 = s - 1.0;
  Complex t = zm1 + (kLanczosG + 0.5);
  return 0.5 * kLog2Pi + (zm1 + 0.5) * std::log(t) - t + std::log(lanczos_sum(zm1));
}

void check_gamma_pole(Complex s) {
  if (is_nonpositive_integer(s))
    throw PoleError("gamma: pole at non-positive integer s");
}

// ---------------------------------------------------------------------------
// Euler-Maclaurin zeta engine

int em_cutoff(Complex s) {
  double t = std::abs(s.imag());
  int n = static_cast<int>(std::ceil(1.3 * t));
  return std::max(20, n);
}

constexpr int kEmCorrections = 12;

// zeta(s, a) for a > 0 by Euler-Maclaurin; caller handles s = 1.
Complex hurwitz_em(Complex s, double a) {
  int n_em = em_cutoff(s);
  CompensatedSum<Complex> sum;
  for (int n = 0; n < n_em; ++n) sum.add(pow_real_base(n + a, -s));
  double base = n_em + a;
  Complex tail = pow_real_base(base, 1.0 - s) / (s - 1.0);
  Complex half = 0.5 * pow_real_base(base, -s);
  Complex result = sum.value() + tail + half;

  // correction k uses B_{2k}/(2k)! (s)_{2k-1} (N+a)^{-s-2k+1}
  Complex poch = s;                       // (s)_1
  Complex power = pow_real_base(base, -s - 1.0);
  double inv_base2 = 1.0 / (base * base);
  for (int k = 1; k <= kEmCorrections; ++k) {
    double b2k = static_cast<double>(bernoulli(2 * k)) /
                 std::tgamma(2.0 * k + 1.0);
    result += b2k * poch * power;
    poch *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
    power *= inv_base2;
  }
  return result;
}

}  // namespace

Complex log_gamma(Complex s) {
  check_gamma_pole(s);
  if (s.real() >= 0.5) return log_gamma_right(s);
  // shift into the right half-plane; principal logs keep exp-consistency
  int n = static_cast<int>(std::ceil(0.5 - s.real()));
  Complex acc = 0.0;
  for (int k = 0; k < n; ++k) acc += std::log(s + static_cast<double>(k));
  return log_gamma_right(s + static_cast<double>(n)) - acc;
}

Complex gamma(Complex s) {
  check_gamma_pole(s);
  Complex g;
  if (s.real() >= 0.5) {
    Complex zm1 = s - 1.0;
    Complex t = zm1 + (kLanczosG + 0.5);
    g = std::sqrt(2.0 * kPi) * std::pow(t, zm1 + 0.5) * std::exp(-t) *
        lanczos_sum(zm1);
  } else {
    g = std::exp(log_gamma(s));
  }
  if (!is_finite(g))
    throw OverflowError("gamma: |Gamma(s)| exceeds double range; use log_gamma");
  return g;
}

// ---------------------------------------------------------------------------
// Error functions.
//
// Two Maclaurin rearrangements cover |z| <= 7: the plain series is stable when
// Re z^2 <= 0 (imaginary-dominant), the e^{-z^2}-scaled series when
// Re z^2 > 0 (real-dominant). Beyond that the large-|z| asymptotic series for
// erfc converges to full precision.

namespace {

Complex erf_series_plain(Complex z) {
  Complex z2 = z * z;
  CompensatedSum<Complex> sum;
  Complex term = z;
  for (int n = 0; n < 300; ++n) {
    sum.add(term);
    term *= -z2 / static_cast<double>(n + 1);
    term *= (2.0 * n + 1.0) / (2.0 * n + 3.0);
    if (std::abs(term) < 1e-18 * (std::abs(sum.value()) + 1e-300)) break;
  }
  return 2.0 / kSqrtPi * sum.value();
}

// erf(z) = (2/sqrt(pi)) e^{-z^2} sum_n 2^n z^{2n+1} / (2n+1)!!
Complex erf_series_scaled(Complex z) {
  Complex z2 = z * z;
  CompensatedSum<Complex> sum;
  Complex term = z;
  for (int n = 0; n < 400; ++n) {
    sum.add(term);
    term *= 2.0 * z2 / (2.0 * n + 3.0);
    if (std::abs(term) < 1e-18 * (std::abs(sum.value()) + 1e-300)) break;
  }
  return 2.0 / kSqrtPi * std::exp(-z2) * sum.value();
}

// erfc(z) ~ e^{-z^2}/(z sqrt(pi)) sum_m (-1)^m (2m-1)!!/(2z^2)^m, Re z >= 0,
// optimally truncated; full double precision once |z| >= 7.
Complex erfc_asymptotic(Complex z) {
  Complex z2 = z * z;
  Complex inv2z2 = 0.5 / z2;
  Complex term = 1.0;
  CompensatedSum<Complex> sum;
  double prev = std::abs(term);
  for (int m = 0; m < 200; ++m) {
    sum.add(term);
    term *= -(2.0 * m + 1.0) * inv2z2;
    double mag = std::abs(term);
    if (mag >= prev) break;  // divergence point of the asymptotic series
    prev = mag;
    if (mag < 1e-18) break;
  }
  return std::exp(-z2) / (z * kSqrtPi) * sum.value();
}

}  // namespace

Complex erf(Complex z) {
  double az = std::abs(z);
  if (az > 12.0)
    throw DomainError("erf: |z| > 12 exceeds the double-precision domain");
  if (az <= 7.0) {
    Complex z2 = z * z;
    return z2.real() > 0.0 ? erf_series_scaled(z) : erf_series_plain(z);
  }
  if (z.real() < 0.0) return -erf(-z);
  return 1.0 - erfc_asymptotic(z);
}

Complex erfi(Complex z) {
  // erf(iz) = i erfi(z), so erfi(z) := -i erf(iz) holds by construction.
  Complex e = erf(Complex(-z.imag(), z.real()));
  return Complex(e.imag(), -e.real());
}

// ---------------------------------------------------------------------------

Complex zeta(Complex s) {
  if (s == Complex(1.0, 0.0)) throw PoleError("zeta: pole at s = 1");
  if (s.real() < 0.0) {
    // zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)
    Complex chi = pow_real_base(2.0, s) * pow_real_base(kPi, s - 1.0) *
                  std::sin(0.5 * kPi * s) * gamma(1.0 - s);
    return chi * hurwitz_em(1.0 - s, 1.0);
  }
  return hurwitz_em(s, 1.0);
}

Complex hurwitz_zeta(Complex s, double a) {
  if (!(a > 0.0) || a > 1.0)
    throw DomainError("hurwitz_zeta: a must lie in (0, 1]");
  if (s == Complex(1.0, 0.0)) throw PoleError("hurwitz_zeta: pole at s = 1");
  return hurwitz_em(s, a);
}

Complex xi_completed(Complex s) {
  return 0.5 * s * (s - 1.0) * std::exp(-0.5 * s * std::log(kPi)) *
         gamma(0.5 * s) * zeta(s);
}

Complex xi_capital(Complex t) {
  Complex s = Complex(0.5, 0.0) + Complex(0.0, 1.0) * t;
  Complex v = xi_completed(s);
  if (t.imag() == 0.0) return Complex(v.real(), 0.0);
  return v;
}

double digamma(double x) {
  if (!(x > 0.0)) throw DomainError("digamma: requires x > 0");
  double acc = 0.0;
  while (x < 10.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  double inv2 = 1.0 / (x * x);
  // psi(x) ~ ln x - 1/(2x) - sum B_{2k}/(2k x^{2k})
  double series = 0.0;
  double p = inv2;
  static const double kCoeff[] = {1.0 / 12, -1.0 / 120, 1.0 / 252, -1.0 / 240,
                                  1.0 / 132, -691.0 / 32760, 1.0 / 12};
  for (double c : kCoeff) {
    series += c * p;
    p *= inv2;
  }
  return acc + std::log(x) - 0.5 / x - series;
}

// ---------------------------------------------------------------------------

namespace {

constexpr int kBernoulliBound = 64;

std::vector<Rational> build_bernoulli() {
  // B_m = -1/(m+1) sum_{j<m} C(m+1, j) B_j, exact in rationals
  std::vector<Rational> b(kBernoulliBound + 1);
  b[0] = 1;
  for (int m = 1; m <= kBernoulliBound; ++m) {
    Rational acc = 0;
    BigInt binom = 1;  // C(m+1, 0)
    for (int j = 0; j < m; ++j) {
      acc += Rational(binom) * b[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    b[m] = -acc / Rational(m + 1);
  }
  return b;
}

const std::vector<Rational>& bernoulli_cache() {
  static const std::vector<Rational> cache = build_bernoulli();
  return cache;
}

}  // namespace

const Rational& bernoulli(int n) {
  if (n < 0 || n > kBernoulliBound)
    throw DomainError("bernoulli: index outside cache bound");
  return bernoulli_cache()[static_cast<std::size_t>(n)];
}

int bernoulli_cache_bound() { return kBernoulliBound; }

double zeta_even(int m) {
  if (m < 1 || 2 * m > kBernoulliBound)
    throw DomainError("zeta_even: index outside cache bound");
  // (-1)^{m-1} 2^{2m-1} pi^{2m} B_{2m}/(2m)! ; fold (2 pi)^{2m} against the
  // rational ratio to stay in range
  Rational ratio = bernoulli(2 * m);
  for (int j = 1; j <= 2 * m; ++j) ratio /= j;
  double r = static_cast<double>(ratio);
  double scale = 0.5 * std::pow(2.0 * kPi, 2.0 * m);
  double sign = (m % 2 == 1) ? 1.0 : -1.0;
  return sign * scale * r;
}

Complex divisor_sigma(std::int64_t n, Complex z) {
  if (n < 1) throw DomainError("divisor_sigma: requires n >= 1");
  CompensatedSum<Complex> sum;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    sum.add(pow_real_base(static_cast<double>(d), -z));
    std::int64_t e = n / d;
    if (e != d) sum.add(pow_real_base(static_cast<double>(e), -z));
  }
  return sum.value();
}

}  // namespace mordell::specfun
