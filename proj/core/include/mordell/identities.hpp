#pragma once

#include <string>
#include <vector>

#include "mordell/quad.hpp"
#include "mordell/types.hpp"

namespace mordell::identities {

using quad::Domain;
using quad::QuadConfig;
using quad::QuadResult;

// ---------------------------------------------------------------------------
// Kernels

// omega(x,z,s) = x^{1/2-s} e^{-z^2/8} 1F1(1 - s/2; 3/2; z^2/4)
Complex omega_kernel(double x, Complex z, Complex s);
// Delta(x,z,s) = omega(x,z,s) + omega(x,z,1-s); Delta(a,z,.) = Delta(1/a,iz,.)
Complex delta_kernel(double x, Complex z, Complex s);
// rho(x,z,s) = x^{1/2-s} e^{-z^2/8} 1F1((1-s)/2; 1/2; z^2/4)
Complex rho_kernel(double x, Complex z, Complex s);
// nabla(x,z,s) = rho(x,z,s) + rho(x,z,1-s)
Complex nabla_kernel(double x, Complex z, Complex s);

// ---------------------------------------------------------------------------
// Integral sides

enum class TrigKind { sin, sinh_kind, cos, cosh_kind };

// integral over the chosen domain of e^{-pi a^2 x^2} trig(sqrt(pi) a x z) / (e^{2 pi x} - 1) dx.
// cos/cosh kinds are rejected: without a vanishing factor the integrand has a
// non-removable 1/x singularity at 0.
QuadResult partial_theta_integral(double alpha, Complex z, Domain domain,
                                  TrigKind kind, const QuadConfig& cfg);

struct Evaluated {
  Complex value{};
  double err = 0.0;
};

// Members of the first error-function transformation, alpha*beta = 1:
//   alpha side: sqrt(a) e^{z^2/8} (erf(z/2) - 4 I_sin(a, z))
//   beta  side: sqrt(b) e^{-z^2/8} (erfi(z/2) - 4 I_sinh(b, z)),  b = 1/a
//   xi    side: z/(8 pi^2) Int_0^inf GG Xi(t/2) Delta(a, z, (1+it)/2) dt
// The beta member equals -i * [alpha member at (1/a, iz)]; evaluating it
// directly keeps real inputs on a real path.
Evaluated erf1_side(double alpha, Complex z, const QuadConfig& cfg);
Evaluated erf1_beta_side(double alpha, Complex z, const QuadConfig& cfg);
Evaluated xi_side_erf1(double alpha, Complex z, const QuadConfig& cfg);

// Members of the complementary transformation (negative-axis integrals).
Evaluated erf2_side(double alpha, Complex z, const QuadConfig& cfg);
Evaluated erf2_beta_side(double alpha, Complex z, const QuadConfig& cfg);

// Two sides of Ramanujan's theta-analogue transformation (full-line integrals):
//   sqrt(a) e^{z^2/8} Int_R e^{-pi a^2 x^2} sin(sqrt(pi) a x z)/(e^{2pi x}-1) dx
//   sqrt(b) e^{-z^2/8} Int_R ... sinh ...,  b = 1/a
Evaluated ram_theta_sin_side(double alpha, Complex z, const QuadConfig& cfg);
Evaluated ram_theta_sinh_side(double alpha, Complex z, const QuadConfig& cfg);

// z -> 0 members: a^{1/2} - 4 pi a^{3/2} Int_0^inf x e^{-pi a^2 x^2}/(e^{2pi x}-1) dx
// and (1/(4 pi sqrt(pi))) Int_0^inf GG Xi(t/2) cos((t/2) log a) dt.
Evaluated mrram_side(double alpha, const QuadConfig& cfg);
Evaluated mrram_xi_side(double alpha, const QuadConfig& cfg);

// Members of the character transformations, alpha*beta = 1.
enum class CharMember { integral_alpha, integral_beta, xi_integral };
Evaluated char_side(int q, double alpha, Complex z, CharMember which,
                    const QuadConfig& cfg);

// Hypergeometric-moment transforms, alpha*beta = pi^2.
//   positive: a^{-1/4} 2F1 + 4 a^{3/4} Int_0^inf x e^{-a x^2}/(e^{2pi x}-1) 1F1(-2k;3/2;2a x^2) dx
//   negative: a^{-1/4} 2F1 - 4 a^{3/4} Int_{-inf}^0 ...
//   full:     a^{3/4} Int_R ...   (the 2F1 boundary term drops)
Evaluated h_k(double alpha, int k, Domain domain, const QuadConfig& cfg);
// Odd-parameter analogue with 1F1(-2k-1;...) and 2F1(-2k-1,...).
Evaluated j_k(double alpha, int k, Domain domain, const QuadConfig& cfg);

// Bare integrals of the exact evaluations (alpha = pi):
//   exact_cor:  Int_0^inf  x e^{-pi x^2}/(e^{2pi x}-1) 1F1(-2k-1; 3/2; 2pi x^2) dx
//   exact_neg:  Int_-inf^0 same integrand
//   exact_full: Int_R      same integrand
Evaluated laguerre_bose_integral(int k2, double alpha, Domain domain,
                            const QuadConfig& cfg);

// ---------------------------------------------------------------------------
// Verification jobs

enum class Identity {
  erf1,
  erf2,
  ram_theta,
  char_even,
  char_odd,
  mrram_limit,
  h_transform,
  j_transform,
  exact_cor,
  exact_neg,
  exact_full,
  ramtran_i,
  ramtran_iii,
};

const char* identity_name(Identity id);
bool identity_from_name(const std::string& name, Identity& out);

struct IdentityCase {
  Identity id = Identity::erf1;
  double alpha = 1.0;
  Complex z{};
  int k = 0;
  int q = 0;
  QuadConfig cfg{};
  // residual pass tolerances; <= 0 means "use the identity's default"
  double rel_tol = 0.0;
  double abs_tol = 0.0;

  // throws DomainError with a usable message when parameters are invalid
  void validate() const;
};

struct SideValue {
  std::string label;
  Complex value{};
  double err = 0.0;
  std::string error;  // non-empty when evaluation of this side failed
};

struct VerificationRecord {
  IdentityCase kase;
  std::vector<SideValue> sides;
  std::vector<double> residuals;   // pairwise |side_i - side_j|, (0,1),(0,2),(1,2)
  std::vector<double> tolerances;  // per-pair pass thresholds actually used
  bool passed = false;
  double wall_ms = 0.0;
};

// Evaluates every member of the identity's equality chain; a side that throws
// is recorded and the remaining sides still run.
VerificationRecord verify(const IdentityCase& kase);

// The /z-normalized transform value G(z, a) for alpha*beta = pi^2 (z = 0
// takes the analytic limit); the half-line transforms are its z-derivatives
// at 0, and asympt::i_series expands exactly this quantity.
Evaluated gen_identity_value(Complex z, double alpha, const QuadConfig& cfg);

}  // namespace mordell::identities
