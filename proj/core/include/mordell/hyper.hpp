#pragma once

#include <vector>

#include "mordell/types.hpp"

namespace mordell::hyper {

// Kummer's confluent 1F1(a; c; w) with complex parameters, |w| <= 100.
// Kummer's first transformation 1F1(a;c;w) = e^w 1F1(c-a;c;-w) is applied for
// Re w < 0 to avoid cancellation; terminating parameters short-circuit it.
Complex kummer_1f1(Complex a, Complex c, Complex w);

// Terminating 1F1(-k2; 3/2; w) as a fixed polynomial. Coefficient m is
// (-k2)_m / ((3/2)_m m!), accumulated exactly in rationals before conversion.
struct HypergeometricPolynomial {
  int degree = 0;
  std::vector<double> coefficients;  // ascending powers of the argument

  double eval(double w) const;
  Complex eval(Complex w) const;
};

const HypergeometricPolynomial& terminating_1f1_poly(int k2);
double terminating_1f1(int k2, double w);
Complex terminating_1f1(int k2, Complex w);

// 2F1(-n, 1; 3/2; 2), the boundary coefficient of the H_k / J_k transforms.
Rational gauss_2f1_spec_exact(int n);
double gauss_2f1_spec(int n);

}  // namespace mordell::hyper
