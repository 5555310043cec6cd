#pragma once

#include <functional>
#include <span>
#include <vector>

#include "mordell/quad.hpp"
#include "mordell/types.hpp"

namespace mordell::asympt {

using quad::QuadConfig;

enum class SeriesOrigin { i_series, k_series, theta_series, oloa_general, oloa_z0 };

// One term coefficient * log(alpha)^log_power * alpha^exponent. Exponents are
// exact quarter-integers for the I/K/theta families; log_power is only ever 1
// for the leading Oloa z=0 term.
struct ExpansionTerm {
  Complex coefficient{};
  double exponent = 0.0;
  int log_power = 0;

  Complex at(double alpha) const;
};

struct AsymptoticExpansion {
  std::vector<ExpansionTerm> terms;
  SeriesOrigin origin = SeriesOrigin::i_series;
  int truncation_index = 0;              // number of terms kept
  double first_omitted_magnitude = 0.0;  // |next term| at the evaluation point; NaN if unknown

  Complex evaluate(double alpha) const;
};

// Small-alpha expansion of I(z, alpha) (the gen_identity_value quantity):
// partial sum of -(2/sqrt(pi)) a^{-1/4} e^{z^2/8} sum_m (-a/pi^2)^m zeta(2m)
// Gamma(m+1/2) 1F1(m+1/2; 3/2; -z^2/4), with zeta(0) = -1/2.
AsymptoticExpansion i_series(Complex z, double alpha, int M);

// Termwise negation of i_series (the complementary transformation's side).
AsymptoticExpansion k_series(Complex z, double alpha, int M);

// Expansion of the full-line theta-analogue integral; term m carries
// prefactor -z e^{z^2/4}/sqrt(pi) and exponent m - 1/2.
AsymptoticExpansion theta_series(Complex z, double alpha, int M);

// Omega(t, z) of the Koshliakov-type transformation: the four-term closed form
//   -Gamma(z) zeta(z)/(2 pi sqrt(t))^z + t^{z/2-1} zeta(z)/(2 pi)
//   - t^{z/2} zeta(z+1)/2 + (t^{z/2+1}/pi) sum_n sigma_{-z}(n)/(n^2+t^2).
// The n-series is evaluated in divisor space with a certified remainder below
// the working precision; n_cutoff bounds the divisor sum (default regime 1e5).
Complex omega_prop61(double t, Complex z, int n_cutoff = 100000);

// sum_{n>=1} sigma_{-z}(n)/(n^2 + t^2) (the series inside Omega).
Complex sigma_resolvent_sum(double t, Complex z, int n_cutoff = 100000);

// g(t,z) = t^{z/2} (Omega(t,z) - zeta(z) t^{z/2-1}/(2 pi)) and
// h(t,z) = g + Gamma(z)zeta(z)/(2pi)^z + t^z zeta(z+1)/2 = t^{z+1}/pi * resolvent sum.
Complex g_kernel(double t, Complex z, int n_cutoff = 100000);
Complex h_kernel(double t, Complex z, int n_cutoff = 100000);

// Large-alpha expansion of the Xi Xi integral (boundary terms + M series terms).
// Real z in (-1, 1) \ {0}; the z = 0 case is a separate expansion below.
AsymptoticExpansion oloa_general(Complex z, double alpha, int M);

// Sum of only the series terms (no boundary terms); the comparison against the
// Laplace-transform quadrature cancels the boundary terms algebraically, which
// is what keeps the gap measurable in double precision.
double oloa_series_part(double z, double alpha, int M);
double oloa_series_term(double z, double alpha, int m);

// Oloa's alpha -> infinity expansion at z = 0: (1/2) log(a)/sqrt(a)
// + (log 2pi - gamma)/(2 sqrt(a)) + pi^2/(72 a^{3/2}) - pi^4/(10800 a^{7/2}).
// M <= 4 selects a prefix; no further terms are available, so at M = 4 the
// first omitted magnitude is unknown (NaN).
AsymptoticExpansion oloa_z0(double alpha, int M);

// 2F1(-2k,1;3/2;2) (1/a + 1/b + 2/(3 2F1))^{1/4} with b = pi^2/a; Ramanujan's
// "nearly" approximant to both sides of the H_k transform.
double near_approximant(int k, double alpha);

// ---------------------------------------------------------------------------
// Quadrature references (the other route of each dual-route check)

Complex i_reference(Complex z, double alpha, const QuadConfig& cfg);
Complex k_reference(Complex z, double alpha, const QuadConfig& cfg);
Complex theta_reference(Complex z, double alpha, const QuadConfig& cfg);
// Direct Xi^2-axis quadrature of the z = 0 Oloa integral.
double oloa_z0_reference(double alpha, const QuadConfig& cfg);
// 2 pi a^{(z+1)/2} Int_0^inf e^{-2 pi a t} h(t, z) dt via the u = sqrt(t)
// substitution; equals the series part of oloa_general asymptotically.
double oloa_series_reference(double z, double alpha, const QuadConfig& cfg);
// Full integral value 2 pi a^{(z+1)/2} Laplace(g) (boundary terms included).
double oloa_reference(double z, double alpha, const QuadConfig& cfg);

// ---------------------------------------------------------------------------
// Optimal truncation

using TermGenerator = std::function<ExpansionTerm(int)>;

// Truncates immediately before the smallest-magnitude term at alpha; errors
// out when the first term dwarfs the second by 1e6x (regime misuse).
AsymptoticExpansion truncate_optimal(const TermGenerator& gen, double alpha,
                                     int max_terms, SeriesOrigin origin);
AsymptoticExpansion i_series_optimal(Complex z, double alpha, int max_terms = 40);
AsymptoticExpansion theta_series_optimal(Complex z, double alpha, int max_terms = 40);

// ---------------------------------------------------------------------------
// Table 1

struct Table1Cell {
  int k = 0;
  double alpha = 0.0;
  double lhs = 0.0;  // quadrature of the full-line integral, / alpha^{3/4}
  double rhs = 0.0;  // near_approximant / (2 alpha^{3/4})
};

std::vector<Table1Cell> table1(std::span<const int> ks,
                               std::span<const double> alphas,
                               const QuadConfig& cfg, int parallelism = 1);

// The golden reference table (100 printed values), embedded as a resource.
struct Table1Golden {
  int k;
  double alpha;
  double lhs;
  double rhs;
};
std::span<const Table1Golden> table1_golden();

// tolerance "5 units in the 6th significant digit" of the printed value
double print_tolerance_6sig(double printed);

}  // namespace mordell::asympt
