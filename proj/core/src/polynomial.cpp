#include "hlag/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "hlag/error.hpp"

namespace hlag {

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (coeffs_.size() > 1 && coeffs_.back() == 0.0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(0.0);
}

double Polynomial::operator()(double x) const {
  double v = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * x + *it;
  return v;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return constant(0);
  std::vector<double> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return Polynomial(std::move(d));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<double> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0.0);
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-1.0) * b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  std::vector<double> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(double s, const Polynomial& a) {
  std::vector<double> c = a.coeffs_;
  for (auto& x : c) x *= s;
  return Polynomial(std::move(c));
}

namespace {

double bisect(const Polynomial& p, double a, double b) {
  double fa = p(a);
  for (int it = 0; it < 200; ++it) {
    double m = 0.5 * (a + b);
    if (m <= a || m >= b) break;
    double fm = p(m);
    if (fm == 0) return m;
    if ((fm < 0) == (fa < 0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

std::vector<double> real_roots(const Polynomial& p, double lo, double hi) {
  if (!(lo <= hi)) throw InvalidArgument("real_roots: empty interval");
  std::vector<double> roots;
  if (p.degree() <= 0) return roots;
  if (p.degree() == 1) {
    const auto& c = p.coefficients();
    double x = -c[0] / c[1];
    if (x >= lo && x <= hi) roots.push_back(x);
    return roots;
  }
  // Roots of p are separated by roots of p'.
  std::vector<double> cuts{lo};
  for (double x : real_roots(p.derivative(), lo, hi)) cuts.push_back(x);
  cuts.push_back(hi);
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    double a = cuts[k], b = cuts[k + 1];
    double fa = p(a), fb = p(b);
    if (fa == 0) {
      if (roots.empty() || roots.back() != a) roots.push_back(a);
    } else if (fb != 0 && (fa < 0) != (fb < 0)) {
      roots.push_back(bisect(p, a, b));
    }
  }
  if (p(hi) == 0 && (roots.empty() || roots.back() != hi)) roots.push_back(hi);
  return roots;
}

IntervalMax maximize_on_interval(const Polynomial& p, double lo, double hi) {
  IntervalMax best{lo, p(lo)};
  auto consider = [&](double x) {
    double v = p(x);
    if (v > best.value) best = {x, v};
  };
  for (double x : real_roots(p.derivative(), lo, hi)) consider(x);
  consider(hi);
  return best;
}

}  // namespace hlag
