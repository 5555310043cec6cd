#pragma once

#include <cstdint>
#include <vector>

#include "mordell/types.hpp"

namespace mordell::characters {

// The real primitive Dirichlet character of modulus q in {3, 4, 5, 8, 12},
// built from the Kronecker symbol of the fundamental discriminant with
// |d| = q and validated against the character axioms at construction.
struct CharacterTable {
  int q = 0;
  int parity = 0;              // 0 even, 1 odd (chi(-1) = (-1)^parity)
  std::vector<int> values;     // chi(0..q-1), entries in {-1, 0, 1}

  int operator()(std::int64_t n) const {
    std::int64_t r = n % q;
    if (r < 0) r += q;
    return values[static_cast<std::size_t>(r)];
  }
  bool odd() const { return parity == 1; }
};

const CharacterTable& character(int q);

// Kronecker symbol (d | n) for n >= 0.
int kronecker_symbol(std::int64_t d, std::int64_t n);

// G(chi) = sum_{m=1}^{q} chi(m) e^{2 pi i m / q}; sqrt(q) for even real chi,
// i sqrt(q) for odd.
Complex gauss_sum(const CharacterTable& chi);

// L(s, chi) = q^{-s} sum_r chi(r) zeta(s, r/q); entire for these characters
// (s = 1 is served by the digamma limit).
Complex dirichlet_l(Complex s, const CharacterTable& chi);

// Completed xi(s, chi) = (pi/q)^{-(s+a)/2} Gamma((s+a)/2) L(s, chi).
Complex xi_chi_completed(Complex s, const CharacterTable& chi);

// Xi(t, chi) = xi(1/2 + it, chi); real for real t, imaginary residue projected.
Complex xi_chi(Complex t, const CharacterTable& chi);

// sum_{n>=1} chi(n) e^{-2 pi n x / q} in closed geometric-block form
// sum_{r=1}^{q-1} chi(r) e^{-2 pi r x / q} / (1 - e^{-2 pi x}), with a series
// patch near x = 0 where numerator and denominator both vanish.
double char_exp_sum(double x, const CharacterTable& chi);

}  // namespace mordell::characters
