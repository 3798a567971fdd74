#include "cohom/analytic/scalar_function.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace cohom {

namespace {

double kernel(Kind kind, double x) {
  switch (kind) {
    case Kind::One: return 1.0;
    case Kind::Sin: return std::sin(x);
    case Kind::Cos: return std::cos(x);
    case Kind::Exp: return std::exp(x);
  }
  return 0.0;
}

double int_pow(double t, int p) {
  double r = 1.0;
  double base = t;
  while (p > 0) {
    if (p & 1) r *= base;
    base *= base;
    p >>= 1;
  }
  return r;
}

// Put a single term into canonical shape; may flip the sign or change kind.
Term canonical(Term t) {
  switch (t.kind) {
    case Kind::One:
      t.rate = 0.0;
      break;
    case Kind::Sin:
      if (t.rate == 0.0) {
        t.coeff = 0.0;
      } else if (t.rate < 0.0) {
        t.rate = -t.rate;
        t.coeff = -t.coeff;
      }
      break;
    case Kind::Cos:
      if (t.rate == 0.0) {
        t.kind = Kind::One;
      } else if (t.rate < 0.0) {
        t.rate = -t.rate;
      }
      break;
    case Kind::Exp:
      if (t.rate == 0.0) t.kind = Kind::One;
      break;
  }
  if (t.kind == Kind::One) t.rate = 0.0;
  return t;
}

auto key(const Term& t) { return std::make_tuple(static_cast<int>(t.kind), t.rate, t.power); }

}  // namespace

std::vector<Term> normalize(std::vector<Term> terms) {
  for (auto& t : terms) t = canonical(t);
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) { return key(a) < key(b); });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const auto& t : terms) {
    if (!out.empty() && key(out.back()) == key(t)) {
      out.back().coeff += t.coeff;
    } else {
      out.push_back(t);
    }
  }
  std::erase_if(out, [](const Term& t) { return t.coeff == 0.0; });
  return out;
}

ScalarFunction::ScalarFunction(std::vector<Term> terms) : terms_(normalize(std::move(terms))) {}

ScalarFunction ScalarFunction::constant(double c) { return ScalarFunction({{c, 0, Kind::One, 0.0}}); }
ScalarFunction ScalarFunction::monomial(double c, int power) {
  return ScalarFunction({{c, power, Kind::One, 0.0}});
}
ScalarFunction ScalarFunction::sin(double c, double rate) { return ScalarFunction({{c, 0, Kind::Sin, rate}}); }
ScalarFunction ScalarFunction::cos(double c, double rate) { return ScalarFunction({{c, 0, Kind::Cos, rate}}); }
ScalarFunction ScalarFunction::exp(double c, double rate) { return ScalarFunction({{c, 0, Kind::Exp, rate}}); }
ScalarFunction ScalarFunction::sinh(double c, double rate) {
  return ScalarFunction({{0.5 * c, 0, Kind::Exp, rate}, {-0.5 * c, 0, Kind::Exp, -rate}});
}
ScalarFunction ScalarFunction::cosh(double c, double rate) {
  return ScalarFunction({{0.5 * c, 0, Kind::Exp, rate}, {0.5 * c, 0, Kind::Exp, -rate}});
}

double ScalarFunction::operator()(double t) const {
  double sum = 0.0;
  for (const auto& term : terms_) {
    sum += term.coeff * int_pow(t, term.power) * kernel(term.kind, term.rate * t);
  }
  return sum;
}

double evaluate(const ScalarFunction& f, double t) { return f(t); }

ScalarFunction ScalarFunction::operator-() const { return -1.0 * *this; }

ScalarFunction operator+(const ScalarFunction& a, const ScalarFunction& b) {
  std::vector<Term> all = a.terms_;
  all.insert(all.end(), b.terms_.begin(), b.terms_.end());
  return ScalarFunction(std::move(all));
}

ScalarFunction operator-(const ScalarFunction& a, const ScalarFunction& b) { return a + (-1.0 * b); }

ScalarFunction operator*(double s, const ScalarFunction& f) {
  std::vector<Term> out = f.terms_;
  for (auto& t : out) t.coeff *= s;
  return ScalarFunction(std::move(out));
}

ScalarFunction differentiate(const ScalarFunction& f) {
  std::vector<Term> out;
  out.reserve(2 * f.terms().size());
  for (const auto& t : f.terms()) {
    if (t.power > 0) out.push_back({t.coeff * t.power, t.power - 1, t.kind, t.rate});
    switch (t.kind) {
      case Kind::One: break;
      case Kind::Sin: out.push_back({t.coeff * t.rate, t.power, Kind::Cos, t.rate}); break;
      case Kind::Cos: out.push_back({-t.coeff * t.rate, t.power, Kind::Sin, t.rate}); break;
      case Kind::Exp: out.push_back({t.coeff * t.rate, t.power, Kind::Exp, t.rate}); break;
    }
  }
  return ScalarFunction(std::move(out));
}

ScalarFunction differentiate(const ScalarFunction& f, int times) {
  ScalarFunction r = f;
  for (int i = 0; i < times; ++i) r = differentiate(r);
  return r;
}

ScalarFunction compose_affine(const ScalarFunction& f, double alpha, double beta) {
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    // (alpha s + beta)^p by the binomial theorem
    std::vector<double> poly(t.power + 1, 0.0);
    double binom = 1.0;
    for (int j = 0; j <= t.power; ++j) {
      poly[j] = binom * std::pow(alpha, j) * std::pow(beta, t.power - j);
      binom = binom * (t.power - j) / (j + 1);
    }
    const double phase = t.rate * beta;
    const double new_rate = t.rate * alpha;
    for (int j = 0; j <= t.power; ++j) {
      const double c = t.coeff * poly[j];
      if (c == 0.0) continue;
      switch (t.kind) {
        case Kind::One:
          out.push_back({c, j, Kind::One, 0.0});
          break;
        case Kind::Sin:
          // sin(r(a s + b)) = sin(rb) cos(ra s) + cos(rb) sin(ra s)
          out.push_back({c * std::sin(phase), j, Kind::Cos, new_rate});
          out.push_back({c * std::cos(phase), j, Kind::Sin, new_rate});
          break;
        case Kind::Cos:
          out.push_back({c * std::cos(phase), j, Kind::Cos, new_rate});
          out.push_back({-c * std::sin(phase), j, Kind::Sin, new_rate});
          break;
        case Kind::Exp:
          out.push_back({c * std::exp(phase), j, Kind::Exp, new_rate});
          break;
      }
    }
  }
  return ScalarFunction(std::move(out));
}

}  // namespace cohom
