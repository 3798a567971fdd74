#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace cohom {

enum class Kind { One, Sin, Cos, Exp };

/// coeff * t^power * k(rate * t), where k is 1, sin, cos or exp.
struct Term {
  double coeff = 0.0;
  int power = 0;
  Kind kind = Kind::One;
  double rate = 0.0;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Exact closed-form function of t: a finite sum of Terms kept in normal form.
///
/// Normal form: terms sorted by (kind, rate, power), no duplicate
/// (kind, rate, power) triples, no zero coefficients, ONE terms carry rate 0,
/// SIN/COS terms carry a positive rate. The family is closed under
/// differentiation and under affine substitution t -> alpha*t + beta.
/// Hyperbolic functions are written as pairs of EXP terms.
class ScalarFunction {
 public:
  ScalarFunction() = default;
  explicit ScalarFunction(std::vector<Term> terms);

  static ScalarFunction constant(double c);
  static ScalarFunction monomial(double c, int power);
  static ScalarFunction sin(double c, double rate);
  static ScalarFunction cos(double c, double rate);
  static ScalarFunction exp(double c, double rate);
  /// c * sinh(rate t)
  static ScalarFunction sinh(double c, double rate);
  /// c * cosh(rate t)
  static ScalarFunction cosh(double c, double rate);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  double operator()(double t) const;

  ScalarFunction operator-() const;
  friend ScalarFunction operator+(const ScalarFunction& a, const ScalarFunction& b);
  friend ScalarFunction operator-(const ScalarFunction& a, const ScalarFunction& b);
  friend ScalarFunction operator*(double s, const ScalarFunction& f);
  friend ScalarFunction operator*(const ScalarFunction& f, double s) { return s * f; }

  friend bool operator==(const ScalarFunction&, const ScalarFunction&) = default;

 private:
  std::vector<Term> terms_;
};

/// Sort, merge and prune a raw term list.
std::vector<Term> normalize(std::vector<Term> terms);

ScalarFunction differentiate(const ScalarFunction& f);
ScalarFunction differentiate(const ScalarFunction& f, int times);
double evaluate(const ScalarFunction& f, double t);

/// f(alpha * s + beta) as a function of s.
ScalarFunction compose_affine(const ScalarFunction& f, double alpha, double beta);

/// Canonical text form, e.g. "2exp(1t) - 2exp(-1t)". Round-trips through parse_function.
std::string to_string(const ScalarFunction& f);

/// Parse the canonical grammar:
///   term ::= coeff [ "t^" p ] [ func "(" rate "t)" ],  func in {sin, cos, exp}
/// with terms joined by '+' or '-'. Whitespace is ignored, a bare "t" means t^1.
ScalarFunction parse_function(std::string_view text);

}  // namespace cohom
