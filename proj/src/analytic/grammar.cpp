#include "cohom/analytic/grammar.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>
#include <system_error>

#include "cohom/analytic/scalar_function.hpp"
#include "cohom/errors.hpp"

namespace cohom {

std::string format_real(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

namespace {

const char* func_name(Kind k) {
  switch (k) {
    case Kind::Sin: return "sin";
    case Kind::Cos: return "cos";
    case Kind::Exp: return "exp";
    case Kind::One: break;
  }
  return "";
}

class Parser {
 public:
  explicit Parser(std::string_view text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
  }

  ScalarFunction run() {
    if (s_.empty()) throw ParseError("empty function text");
    std::vector<Term> terms;
    bool first = true;
    while (pos_ < s_.size()) {
      double sign = 1.0;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1.0 : 1.0;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      parse_term(sign, terms);
    }
    return ScalarFunction(std::move(terms));
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
  }

  bool accept(std::string_view word) {
    if (s_.compare(pos_, word.size(), word) == 0) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  bool number(double& out) {
    const char* b = s_.data() + pos_;
    const char* e = s_.data() + s_.size();
    // from_chars does not take a leading '+'
    auto res = std::from_chars(b, e, out);
    if (res.ec != std::errc()) return false;
    pos_ += res.ptr - b;
    return true;
  }

  // "(" [number] "t" ")"
  double rate() {
    if (!accept("(")) fail("expected '('");
    double r = 1.0;
    bool neg = false;
    if (accept("-")) neg = true;
    else accept("+");
    number(r);
    accept("*");
    if (!accept("t")) fail("expected 't' inside function argument");
    if (!accept(")")) fail("expected ')'");
    return neg ? -r : r;
  }

  void parse_term(double sign, std::vector<Term>& out) {
    double coeff = 1.0;
    bool any = number(coeff);
    accept("*");
    int power = 0;
    if (peek() == 't') {
      ++pos_;
      any = true;
      power = 1;
      if (accept("^")) {
        double p = 0;
        if (!number(p) || p < 0 || p != std::floor(p)) fail("expected non-negative integer power");
        power = static_cast<int>(p);
      }
      accept("*");
    }
    if (accept("sinh")) {
      const double r = rate();
      out.push_back({0.5 * sign * coeff, power, Kind::Exp, r});
      out.push_back({-0.5 * sign * coeff, power, Kind::Exp, -r});
      return;
    }
    if (accept("cosh")) {
      const double r = rate();
      out.push_back({0.5 * sign * coeff, power, Kind::Exp, r});
      out.push_back({0.5 * sign * coeff, power, Kind::Exp, -r});
      return;
    }
    Kind kind = Kind::One;
    if (accept("sin")) kind = Kind::Sin;
    else if (accept("cos")) kind = Kind::Cos;
    else if (accept("exp")) kind = Kind::Exp;
    if (kind == Kind::One) {
      if (!any) fail("expected a term");
      out.push_back({sign * coeff, power, Kind::One, 0.0});
      return;
    }
    out.push_back({sign * coeff, power, kind, rate()});
  }

  std::string s_;
  size_t pos_ = 0;
};

}  // namespace

std::string to_string(const ScalarFunction& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    double c = t.coeff;
    if (first) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      c = std::abs(c);
    }
    first = false;
    out += format_real(c);
    if (t.power > 0) out += "t^" + std::to_string(t.power);
    if (t.kind != Kind::One) out += std::string(func_name(t.kind)) + "(" + format_real(t.rate) + "t)";
  }
  return out;
}

ScalarFunction parse_function(std::string_view text) { return Parser(text).run(); }

}  // namespace cohom
