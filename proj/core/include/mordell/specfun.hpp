#pragma once

#include <cstdint>

#include "mordell/types.hpp"

namespace mordell::specfun {

// Complex Gamma function. Lanczos for Re s >= 1/2, exp(log_gamma) otherwise.
// Accurate to >= 12 significant digits for |Im s| <= 200, -50 <= Re s <= 50.
Complex gamma(Complex s);

// Principal-branch log Gamma; exp(log_gamma(s)) == gamma(s) wherever both
// are representable. Safe where gamma itself would overflow.
Complex log_gamma(Complex s);

// Error function and imaginary error function on |z| <= 12.
// erf(iz) = i*erfi(z) holds exactly by construction.
Complex erf(Complex z);
Complex erfi(Complex z);

// Riemann zeta by Euler-Maclaurin (functional equation for Re s < 0).
// >= 11 significant digits for |Im s| <= 200, -10 <= Re s <= 10.
Complex zeta(Complex s);

// Hurwitz zeta(s, a) for 0 < a <= 1, same Euler-Maclaurin engine.
Complex hurwitz_zeta(Complex s, double a);

// Completed zeta xi(s) = (1/2) s (s-1) pi^{-s/2} Gamma(s/2) zeta(s).
Complex xi_completed(Complex s);

// Xi(t) = xi(1/2 + it). Real and even for real t; for real t the imaginary
// residue is checked against 1e-9 relative and projected away.
Complex xi_capital(Complex t);

// Digamma for real positive argument (shift + Stirling tail).
double digamma(double x);

// Exact Bernoulli number B_n (cache bound N = 64; B_1 = -1/2 convention).
const Rational& bernoulli(int n);
int bernoulli_cache_bound();

// zeta(2m) from the Bernoulli relation (-1)^{m-1} 2^{2m-1} pi^{2m} B_{2m}/(2m)!.
double zeta_even(int m);

// sigma_{-z}(n) = sum over divisors d of n of d^{-z}.
Complex divisor_sigma(std::int64_t n, Complex z);

}  // namespace mordell::specfun
