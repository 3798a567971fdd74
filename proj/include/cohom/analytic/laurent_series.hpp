#pragma once

#include <vector>

#include "cohom/analytic/taylor_series.hpp"

namespace cohom {

/// Truncated Laurent series sum_{k=low}^{low+n-1} c_k (t - base)^k.
///
/// Known coefficients stop at top(); everything above is truncation. Division
/// strips numerically vanishing leading terms of the divisor first, which is
/// how poles enter.
class LaurentSeries {
 public:
  LaurentSeries() = default;
  LaurentSeries(double base, int low, std::vector<double> coeffs);
  explicit LaurentSeries(const TaylorSeries& s) : LaurentSeries(s.base(), 0, s.coeffs()) {}

  /// Taylor series with its leading `valuation` coefficients dropped, read as t^valuation * rest.
  static LaurentSeries with_valuation(const TaylorSeries& s, int valuation);

  double base() const { return base_; }
  int low() const { return low_; }
  int top() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  /// Coefficient at order k; 0 below low(). Throws std::out_of_range above top().
  double at(int k) const;

  LaurentSeries operator-() const;

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(double s, LaurentSeries a);
  friend LaurentSeries operator*(const LaurentSeries& a, double s) { return s * a; }
  friend LaurentSeries operator/(const LaurentSeries& a, double s) { return (1.0 / s) * a; }
  friend LaurentSeries operator+(const LaurentSeries& a, double s);
  friend LaurentSeries operator+(double s, const LaurentSeries& a) { return a + s; }
  friend LaurentSeries operator-(const LaurentSeries& a, double s) { return a + (-s); }
  friend LaurentSeries operator-(double s, const LaurentSeries& a) { return (-a) + s; }
  friend LaurentSeries operator/(double s, const LaurentSeries& a);

 private:
  double base_ = 0.0;
  int low_ = 0;
  std::vector<double> coeffs_{0.0};
};

}  // namespace cohom
