#include "cohom/analytic/laurent_series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cohom/errors.hpp"

namespace cohom {

LaurentSeries::LaurentSeries(double base, int low, std::vector<double> coeffs)
    : base_(base), low_(low), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("Laurent series needs at least one coefficient");
}

LaurentSeries LaurentSeries::with_valuation(const TaylorSeries& s, int valuation) {
  if (valuation > s.order()) throw std::invalid_argument("valuation exceeds series order");
  const auto& c = s.coeffs();
  return {s.base(), valuation, std::vector<double>(c.begin() + valuation, c.end())};
}

double LaurentSeries::at(int k) const {
  if (k < low_) return 0.0;
  if (k > top()) throw std::out_of_range("Laurent coefficient beyond truncation order");
  return coeffs_[k - low_];
}

LaurentSeries LaurentSeries::operator-() const { return -1.0 * *this; }

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.base_ != b.base_) throw std::invalid_argument("series expanded at different base points");
  const int lo = std::min(a.low_, b.low_);
  const int hi = std::min(a.top(), b.top());
  if (hi < lo) throw std::invalid_argument("Laurent sum has no known coefficients");
  std::vector<double> c(hi - lo + 1, 0.0);
  for (int k = lo; k <= hi; ++k) c[k - lo] = a.at(k) + b.at(k);
  return {a.base_, lo, std::move(c)};
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.base_ != b.base_) throw std::invalid_argument("series expanded at different base points");
  const size_t n = std::min(a.coeffs_.size(), b.coeffs_.size());
  std::vector<double> c(n, 0.0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; i + j < n; ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return {a.base_, a.low_ + b.low_, std::move(c)};
}

LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.base_ != b.base_) throw std::invalid_argument("series expanded at different base points");
  double mag = 0.0;
  for (double c : b.coeffs_) mag = std::max(mag, std::abs(c));
  if (mag == 0.0) throw DivisionByZeroSeries("Laurent division by the zero series");
  size_t lead = 0;
  while (lead < b.coeffs_.size() && std::abs(b.coeffs_[lead]) < kEpsDiv * mag) ++lead;
  const std::vector<double> d(b.coeffs_.begin() + lead, b.coeffs_.end());
  const size_t n = std::min(a.coeffs_.size(), d.size());
  std::vector<double> q(n, 0.0);
  for (size_t k = 0; k < n; ++k) {
    double s = a.coeffs_[k];
    for (size_t j = 1; j <= k; ++j) s -= d[j] * q[k - j];
    q[k] = s / d[0];
  }
  return {a.base_, a.low_ - b.low_ - static_cast<int>(lead), std::move(q)};
}

LaurentSeries operator*(double s, LaurentSeries a) {
  for (double& c : a.coeffs_) c *= s;
  return a;
}

LaurentSeries operator+(const LaurentSeries& a, double s) {
  // a constant sits at order 0; if that is past truncation it is invisible
  if (a.top() < 0) return a;
  std::vector<double> c(a.top() + 1, 0.0);
  c[0] = s;
  return a + LaurentSeries(a.base_, 0, std::move(c));
}

LaurentSeries operator/(double s, const LaurentSeries& a) {
  std::vector<double> c(a.coeffs_.size(), 0.0);
  c[0] = s;
  return LaurentSeries(a.base_, 0, std::move(c)) / a;
}

}  // namespace cohom
