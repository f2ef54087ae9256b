#pragma once

#include <vector>

namespace hlag {

/// Dense univariate polynomial, coefficient k multiplies x^k.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coeffs);
  static Polynomial constant(double c) { return Polynomial({c}); }
  static Polynomial identity() { return Polynomial({0.0, 1.0}); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<double>& coefficients() const { return coeffs_; }
  double operator()(double x) const;
  Polynomial derivative() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(double s, const Polynomial& a);

 private:
  void trim();
  std::vector<double> coeffs_;
};

/// Real roots in [lo, hi], ascending, each bisected to machine precision.
std::vector<double> real_roots(const Polynomial& p, double lo, double hi);

struct IntervalMax {
  double argmax;
  double value;
};

/// Global maximum of p on [lo, hi] over the endpoints and the roots of p'.
IntervalMax maximize_on_interval(const Polynomial& p, double lo, double hi);

}  // namespace hlag
