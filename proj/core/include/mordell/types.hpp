#pragma once

#include <complex>
#include <boost/multiprecision/cpp_int.hpp>

namespace mordell {

using Complex = std::complex<double>;

// Exact rational scalar used wherever terminating hypergeometric sums and
// Bernoulli numbers would otherwise drown in double rounding.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kSqrtPi = 1.77245385090551602729816748334114518;
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kLog2Pi = 1.83787706640934548356065947281123527;

inline bool is_finite(Complex v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}

// true when s is 0, -1, -2, ... (a Gamma pole / terminating 1F1 parameter)
inline bool is_nonpositive_integer(Complex s) {
  if (s.imag() != 0.0) return false;
  double r = s.real();
  return r <= 0.0 && r == std::floor(r);
}

// Neumaier-compensated accumulator; Complex or double.
template <class T>
class CompensatedSum {
 public:
  void add(T x) {
    T t = sum_ + x;
    if (abs_ge(sum_, x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  T value() const { return sum_ + comp_; }

 private:
  static bool abs_ge(double a, double b) { return std::abs(a) >= std::abs(b); }
  static bool abs_ge(Complex a, Complex b) { return std::norm(a) >= std::norm(b); }
  T sum_{};
  T comp_{};
};

// b^e for real b > 0 and complex e, cheaper and better conditioned than
// std::pow(Complex, Complex) on this hot path.
inline Complex pow_real_base(double b, Complex e) {
  double lb = std::log(b);
  return std::polar(std::exp(e.real() * lb), e.imag() * lb);
}

}  // namespace mordell
