#include "cohom/analytic/taylor_series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cohom/errors.hpp"

namespace cohom {

namespace {

void check_compatible(const TaylorSeries& a, const TaylorSeries& b) {
  if (a.base() != b.base()) throw std::invalid_argument("series expanded at different base points");
}

}  // namespace

TaylorSeries::TaylorSeries(double base, std::vector<double> coeffs) : base_(base), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
}

TaylorSeries TaylorSeries::constant(double base, double c, int order) {
  std::vector<double> cs(order + 1, 0.0);
  cs[0] = c;
  return {base, std::move(cs)};
}

TaylorSeries TaylorSeries::identity(double base, int order) {
  std::vector<double> cs(order + 1, 0.0);
  cs[0] = base;
  if (order >= 1) cs[1] = 1.0;
  return {base, std::move(cs)};
}

double TaylorSeries::eval(double h) const {
  double r = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * h + *it;
  return r;
}

TaylorSeries TaylorSeries::derivative() const {
  if (order() == 0) return {base_, {0.0}};
  std::vector<double> cs(order());
  for (int k = 1; k <= order(); ++k) cs[k - 1] = k * coeffs_[k];
  return {base_, std::move(cs)};
}

TaylorSeries TaylorSeries::shift_down(int k) const {
  if (k <= 0) return *this;
  if (k > order()) return {base_, {0.0}};
  return {base_, std::vector<double>(coeffs_.begin() + k, coeffs_.end())};
}

TaylorSeries TaylorSeries::operator-() const { return *this * -1.0; }

TaylorSeries& TaylorSeries::operator+=(const TaylorSeries& b) {
  check_compatible(*this, b);
  coeffs_.resize(std::min(coeffs_.size(), b.coeffs_.size()));
  for (size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += b.coeffs_[k];
  return *this;
}

TaylorSeries& TaylorSeries::operator-=(const TaylorSeries& b) {
  check_compatible(*this, b);
  coeffs_.resize(std::min(coeffs_.size(), b.coeffs_.size()));
  for (size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= b.coeffs_[k];
  return *this;
}

TaylorSeries& TaylorSeries::operator*=(const TaylorSeries& b) {
  check_compatible(*this, b);
  const size_t n = std::min(coeffs_.size(), b.coeffs_.size());
  std::vector<double> out(n, 0.0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; i + j < n; ++j) out[i + j] += coeffs_[i] * b.coeffs_[j];
  coeffs_ = std::move(out);
  return *this;
}

TaylorSeries& TaylorSeries::operator/=(const TaylorSeries& b) {
  check_compatible(*this, b);
  double mag = 0.0;
  for (double c : b.coeffs_) mag = std::max(mag, std::abs(c));
  if (!(std::abs(b.coeffs_[0]) >= kEpsDiv * mag) || b.coeffs_[0] == 0.0)
    throw DivisionByZeroSeries("series division by a series with vanishing constant term");
  const size_t n = std::min(coeffs_.size(), b.coeffs_.size());
  std::vector<double> q(n, 0.0);
  for (size_t k = 0; k < n; ++k) {
    double s = coeffs_[k];
    for (size_t j = 1; j <= k; ++j) s -= b.coeffs_[j] * q[k - j];
    q[k] = s / b.coeffs_[0];
  }
  coeffs_ = std::move(q);
  return *this;
}

TaylorSeries& TaylorSeries::operator+=(double s) {
  coeffs_[0] += s;
  return *this;
}

TaylorSeries& TaylorSeries::operator*=(double s) {
  for (double& c : coeffs_) c *= s;
  return *this;
}

TaylorSeries operator+(TaylorSeries a, const TaylorSeries& b) { return a += b; }
TaylorSeries operator-(TaylorSeries a, const TaylorSeries& b) { return a -= b; }
TaylorSeries operator*(TaylorSeries a, const TaylorSeries& b) { return a *= b; }
TaylorSeries operator/(TaylorSeries a, const TaylorSeries& b) { return a /= b; }
TaylorSeries operator+(TaylorSeries a, double s) { return a += s; }
TaylorSeries operator+(double s, TaylorSeries a) { return a += s; }
TaylorSeries operator-(TaylorSeries a, double s) { return a += -s; }
TaylorSeries operator-(double s, const TaylorSeries& a) { return -a + s; }
TaylorSeries operator*(TaylorSeries a, double s) { return a *= s; }
TaylorSeries operator*(double s, TaylorSeries a) { return a *= s; }
TaylorSeries operator/(TaylorSeries a, double s) { return a *= 1.0 / s; }
TaylorSeries operator/(double s, const TaylorSeries& a) {
  return TaylorSeries::constant(a.base(), s, a.order()) / a;
}

TaylorSeries scale(const TaylorSeries& a, double s) { return a * s; }

TaylorSeries taylor_at(const ScalarFunction& f, double t0, int order) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
  std::vector<double> cs(order + 1);
  ScalarFunction d = f;
  double fact = 1.0;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) {
      d = differentiate(d);
      fact *= k;
    }
    cs[k] = d(t0) / fact;
  }
  return {t0, std::move(cs)};
}

}  // namespace cohom
