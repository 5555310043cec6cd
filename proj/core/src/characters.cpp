#include "mordell/characters.hpp"

#include <cmath>
#include <numeric>

#include "mordell/errors.hpp"
#include "mordell/specfun.hpp"

namespace mordell::characters {

int kronecker_symbol(std::int64_t d, std::int64_t n) {
  if (n < 0) throw DomainError("kronecker_symbol: requires n >= 0");
  if (n == 0) return (d == 1 || d == -1) ? 1 : 0;
  int sign = 1;
  // strip factors of two from n via (d|2)
  int two = ((d & 7) == 1 || (d & 7) == 7) ? 1 : (((d & 7) == 3 || (d & 7) == 5) ? -1 : 0);
  while ((n & 1) == 0) {
    if (d % 2 == 0) return 0;
    sign *= two;
    n >>= 1;
  }
  // n is odd now; the Jacobi symbol is periodic in its top argument, which
  // absorbs negative d
  std::int64_t a = d % n;
  if (a < 0) a += n;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      std::int64_t r = n & 7;
      if (r == 3 || r == 5) sign = -sign;
    }
    std::swap(a, n);
    if ((a & 3) == 3 && (n & 3) == 3) sign = -sign;
    a %= n;
  }
  return n == 1 ? sign : 0;
}

namespace {

CharacterTable build_table(int q) {
  // fundamental discriminant with |d| = q; negative for the odd characters
  std::int64_t d;
  switch (q) {
    case 3: d = -3; break;
    case 4: d = -4; break;
    case 5: d = 5; break;
    case 8: d = 8; break;
    case 12: d = 12; break;
    default:
      throw UnsupportedModulusError("character: modulus must be one of {3,4,5,8,12}");
  }
  CharacterTable chi;
  chi.q = q;
  chi.values.resize(static_cast<std::size_t>(q));
  for (int r = 0; r < q; ++r)
    chi.values[static_cast<std::size_t>(r)] = kronecker_symbol(d, r);
  chi.parity = chi.values[static_cast<std::size_t>(q - 1)] == 1 ? 0 : 1;

  // validate the axioms before letting the table out
  if (chi.values[0] != 0) throw Error("character: chi(0) must be 0");
  for (int r = 0; r < q; ++r) {
    bool unit = std::gcd(r, q) == 1;
    int v = chi.values[static_cast<std::size_t>(r)];
    if (unit && v * v != 1) throw Error("character: unit without unit value");
    if (!unit && v != 0) throw Error("character: non-unit with nonzero value");
  }
  for (int m = 1; m < q; ++m)
    for (int n = 1; n < q; ++n)
      if (chi(static_cast<std::int64_t>(m) * n) != chi(m) * chi(n))
        throw Error("character: multiplicativity failed");
  return chi;
}

}  // namespace

const CharacterTable& character(int q) {
  switch (q) {
    case 3: { static const CharacterTable t = build_table(3); return t; }
    case 4: { static const CharacterTable t = build_table(4); return t; }
    case 5: { static const CharacterTable t = build_table(5); return t; }
    case 8: { static const CharacterTable t = build_table(8); return t; }
    case 12: { static const CharacterTable t = build_table(12); return t; }
    default:
      throw UnsupportedModulusError("character: modulus must be one of {3,4,5,8,12}");
  }
}

Complex gauss_sum(const CharacterTable& chi) {
  CompensatedSum<Complex> sum;
  for (int m = 1; m <= chi.q; ++m) {
    int v = chi(m);
    if (v == 0) continue;
    double theta = 2.0 * kPi * m / chi.q;
    sum.add(static_cast<double>(v) * Complex(std::cos(theta), std::sin(theta)));
  }
  return sum.value();
}

Complex dirichlet_l(Complex s, const CharacterTable& chi) {
  if (s == Complex(1.0, 0.0)) {
    // sum chi(r)/(s-1) cancels; the digamma term of zeta(s, a) survives
    double acc = 0.0;
    for (int r = 1; r < chi.q; ++r) {
      int v = chi(r);
      if (v != 0)
        acc -= v * specfun::digamma(static_cast<double>(r) / chi.q);
    }
    return Complex(acc / chi.q, 0.0);
  }
  CompensatedSum<Complex> sum;
  for (int r = 1; r < chi.q; ++r) {
    int v = chi(r);
    if (v == 0) continue;
    sum.add(static_cast<double>(v) *
            specfun::hurwitz_zeta(s, static_cast<double>(r) / chi.q));
  }
  return pow_real_base(static_cast<double>(chi.q), -s) * sum.value();
}

Complex xi_chi_completed(Complex s, const CharacterTable& chi) {
  double a = chi.parity;
  Complex half = 0.5 * (s + a);
  return pow_real_base(kPi / chi.q, -half) * specfun::gamma(half) *
         dirichlet_l(s, chi);
}

Complex xi_chi(Complex t, const CharacterTable& chi) {
  Complex s = Complex(0.5, 0.0) + Complex(0.0, 1.0) * t;
  Complex v = xi_chi_completed(s, chi);
  if (t.imag() == 0.0) return Complex(v.real(), 0.0);
  return v;
}

double char_exp_sum(double x, const CharacterTable& chi) {
  if (!(x > 0.0)) throw DomainError("char_exp_sum: requires x > 0");
  int q = chi.q;
  if (x < 1e-4) {
    // numerator and denominator both vanish; divide their Taylor polynomials
    double u = 2.0 * kPi * x;
    double num = 0.0;  // sum chi(r) e^{-ur/q} with the constant term dropping out
    double p1 = 0, p2 = 0, p3 = 0, p4 = 0, p5 = 0;
    for (int r = 1; r < q; ++r) {
      int v = chi(r);
      if (v == 0) continue;
      double rr = static_cast<double>(r) / q;
      p1 += v * rr;
      p2 += v * rr * rr;
      p3 += v * rr * rr * rr;
      p4 += v * rr * rr * rr * rr;
      p5 += v * rr * rr * rr * rr * rr;
    }
    num = -p1 + u * (p2 / 2 + u * (-p3 / 6 + u * (p4 / 24 - u * p5 / 120)));
    double den = 1.0 + u * (-0.5 + u * (1.0 / 6 + u * (-1.0 / 24 + u / 120)));
    return num / den;
  }
  double den = -std::expm1(-2.0 * kPi * x);
  double num = 0.0;
  for (int r = 1; r < q; ++r) {
    int v = chi(r);
    if (v == 0) continue;
    num += v * std::exp(-2.0 * kPi * r * x / q);
  }
  return num / den;
}

}  // namespace mordell::characters
