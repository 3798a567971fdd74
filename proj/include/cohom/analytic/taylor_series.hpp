#pragma once

#include <vector>

#include "cohom/analytic/scalar_function.hpp"

namespace cohom {

inline constexpr int kDefaultSeriesOrder = 12;
inline constexpr double kEpsDiv = 1e-12;

/// Truncated power series sum_k c_k (t - base)^k, k = 0..order.
class TaylorSeries {
 public:
  TaylorSeries() = default;
  TaylorSeries(double base, std::vector<double> coeffs);

  static TaylorSeries constant(double base, double c, int order);
  /// The series of t itself around base: base + (t - base).
  static TaylorSeries identity(double base, int order);

  double base() const { return base_; }
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  double operator[](int k) const { return coeffs_.at(k); }

  /// Partial sum at offset h from the base point.
  double eval(double h) const;
  /// Formal derivative; order drops by one.
  TaylorSeries derivative() const;
  /// Drop the first k coefficients, i.e. divide by (t - base)^k. Caller asserts they vanish.
  TaylorSeries shift_down(int k) const;

  TaylorSeries operator-() const;
  TaylorSeries& operator+=(const TaylorSeries& b);
  TaylorSeries& operator-=(const TaylorSeries& b);
  TaylorSeries& operator*=(const TaylorSeries& b);
  TaylorSeries& operator/=(const TaylorSeries& b);
  TaylorSeries& operator+=(double s);
  TaylorSeries& operator*=(double s);

 private:
  double base_ = 0.0;
  std::vector<double> coeffs_{0.0};
};

TaylorSeries operator+(TaylorSeries a, const TaylorSeries& b);
TaylorSeries operator-(TaylorSeries a, const TaylorSeries& b);
TaylorSeries operator*(TaylorSeries a, const TaylorSeries& b);
/// Throws DivisionByZeroSeries when |b_0| < kEpsDiv * max|b_k|.
TaylorSeries operator/(TaylorSeries a, const TaylorSeries& b);
TaylorSeries operator+(TaylorSeries a, double s);
TaylorSeries operator+(double s, TaylorSeries a);
TaylorSeries operator-(TaylorSeries a, double s);
TaylorSeries operator-(double s, const TaylorSeries& a);
TaylorSeries operator*(TaylorSeries a, double s);
TaylorSeries operator*(double s, TaylorSeries a);
TaylorSeries operator/(TaylorSeries a, double s);
TaylorSeries operator/(double s, const TaylorSeries& a);

TaylorSeries scale(const TaylorSeries& a, double s);

/// Coefficient k is f^(k)(t0)/k!, by exact repeated differentiation.
TaylorSeries taylor_at(const ScalarFunction& f, double t0, int order = kDefaultSeriesOrder);

}  // namespace cohom
