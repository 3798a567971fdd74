#include "cohom/classifier/constraint_systems.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cohom/errors.hpp"

namespace cohom {

namespace {

template <class T>
T sq(const T& x) {
  return x * x;
}

// v1 = a sin t, v2 = v3 = b cos(ct). The first two lines are the printed pair; the
// printed pair alone has a curve of roots, the third line comes from the mixed
// component R(E2,E3,E1,E4), whose t^2 coefficient is -a(4c^2 - 1)/b^2.
struct Compact51 {
  template <class T>
  void operator()(const T* x, T* r) const {
    const T &a = x[0], &b = x[1], &c = x[2];
    const T b4c4 = sq(sq(b)) * sq(sq(c));
    r[0] = b4c4 - 4.0 * sq(b) * sq(c) + 3.0 * sq(a);
    r[1] = b4c4 - sq(sq(b)) * sq(c) + 3.0 * sq(a);
    r[2] = a * (4.0 * sq(c) - 1.0);
  }
};

struct Hyperbolic51 {
  template <class T>
  void operator()(const T* x, T* r) const {
    const T &a = x[0], &b = x[1], &c = x[2];
    const T b4c4 = sq(sq(b)) * sq(sq(c));
    r[0] = b4c4 + 4.0 * sq(b) * sq(c) + 3.0 * sq(a);
    r[1] = b4c4 - sq(sq(b)) * sq(c) + 3.0 * sq(a);
  }
};

struct Linear51 {
  template <class T>
  void operator()(const T* x, T* r) const {
    const T &a = x[0], &b = x[1], &c = x[2];
    const T b4c4 = sq(sq(b)) * sq(sq(c));
    r[0] = b4c4 + 4.0 * sq(b) * sq(c) + 3.0 * sq(a);
    r[1] = b4c4 + 3.0 * sq(a);
  }
};

template <class T>
T quartic_p(const T& b, const T& c1, const T& c2) {
  const T b4 = sq(sq(b));
  return b4 * sq(sq(c1)) - 6.0 * b4 * sq(c1) * sq(c2) + b4 * sq(sq(c2));
}

// v1 = 2 sin t, v2 = b cos(c1 t), v3 = b cos(c2 t)
struct Trig521 {
  template <class T>
  void operator()(const T* x, T* r) const {
    const T &b = x[0], &c1 = x[1], &c2 = x[2];
    const T p = quartic_p(b, c1, c2);
    const T b2 = sq(b), b4 = sq(sq(b)), s1 = sq(c1), s2 = sq(c2);
    r[0] = p + 8.0 * b2 * s1 + 8.0 * b2 * s2 - 48.0;
    r[1] = p - 4.0 * b4 * s1 + 8.0 * b4 * s2 + 24.0 * b2 * s1 - 24.0 * b2 * s2 - 48.0;
    r[2] = p + 8.0 * b4 * s1 - 4.0 * b4 * s2 - 24.0 * b2 * s1 + 24.0 * b2 * s2 - 48.0;
    const T d = s1 - s2;
    r[3] = sq(d) - 2.0 * (s1 + s2) + 1.0;
    r[4] = s1 + s2 - s1 * s2 - 1.0;
  }
};

// v1 = 4 sin t, v2 = b1 cos(ct) + b2 sin(ct), v3 = b1 cos(ct) - b2 sin(ct)
struct Trig522 {
  template <class T>
  void operator()(const T* x, T* r) const {
    const T &b1 = x[0], &b2 = x[1], &c = x[2];
    const T p = sq(b1), q = sq(b2), c2 = sq(c), c4 = sq(sq(c));
    r[0] = c4 * (3.0 * sq(p) - 2.0 * p * q - 9.0 * sq(q)) - c2 * (p * q + 12.0 * p + 36.0 * q) + 144.0;
    r[1] = c4 * (sq(p) + 2.0 * p * q - 3.0 * sq(q)) - c2 * (sq(p) + 2.0 * p * q) + 48.0;
    r[2] = c2 * (p - 3.0 * q) - p + 12.0;
  }
};

// v1 = 2t, v2 = b cosh(c1 t), v3 = b cosh(c2 t)
struct Linear531 {
  template <class T>
  void operator()(const T* x, T* r) const {
    const T &b = x[0], &c1 = x[1], &c2 = x[2];
    const T p = quartic_p(b, c1, c2);
    const T b2 = sq(b), s1 = sq(c1), s2 = sq(c2);
    r[0] = p - 8.0 * b2 * s1 - 8.0 * b2 * s2 - 48.0;
    r[1] = p - 24.0 * b2 * s1 + 24.0 * b2 * s2 - 48.0;
    r[2] = p + 24.0 * b2 * s1 - 24.0 * b2 * s2 - 48.0;
  }
};

// v1 = 4t, v2 = b1 cosh(ct) + b2 sinh(ct), v3 = b1 cosh(ct) - b2 sinh(ct)
struct Linear532 {
  template <class T>
  void operator()(const T* x, T* r) const {
    const T &b1 = x[0], &b2 = x[1], &c = x[2];
    const T p = sq(b1), q = sq(b2);
    r[0] = sq(sq(c)) * (sq(p) - 2.0 * p * q - 3.0 * sq(q)) + 48.0;
    r[1] = sq(c) * (p + 3.0 * q) - 12.0;
  }
};

// v1 = 2 sinh t, v2 = b cosh(c1 t), v3 = b cosh(c2 t)
struct Hyperbolic541 {
  template <class T>
  void operator()(const T* x, T* r) const {
    const T &b = x[0], &c1 = x[1], &c2 = x[2];
    const T p = quartic_p(b, c1, c2);
    const T b2 = sq(b), b4 = sq(sq(b)), s1 = sq(c1), s2 = sq(c2);
    r[0] = p - 8.0 * b2 * s1 - 8.0 * b2 * s2 - 48.0;
    r[1] = p - 4.0 * b4 * s1 + 8.0 * b4 * s2 - 24.0 * b2 * s1 + 24.0 * b2 * s2 - 48.0;
    r[2] = p + 8.0 * b4 * s1 - 4.0 * b4 * s2 + 24.0 * b2 * s1 - 24.0 * b2 * s2 - 48.0;
  }
};

// v1 = 4 sinh t, v2 = b1 cosh(ct) + b2 sinh(ct), v3 = b1 cosh(ct) - b2 sinh(ct)
struct Hyperbolic542 {
  template <class T>
  void operator()(const T* x, T* r) const {
    const T &b1 = x[0], &b2 = x[1], &c = x[2];
    const T p = sq(b1), q = sq(b2), c2 = sq(c), c4 = sq(sq(c));
    r[0] = c4 * (3.0 * sq(p) + 2.0 * p * q - 9.0 * sq(q)) + c2 * (p * q + 12.0 * p - 36.0 * q) + 144.0;
    r[1] = c2 * (p + 3.0 * q) - p - 12.0;
    r[2] = c4 * (8.0 * p * q - 12.0 * sq(q)) + c2 * (p * q - 48.0 * p + 48.0 * q) + 12.0 * p;
  }
};

// v_i = sin(b_i t) / b_i
struct Codim4Trig {
  template <class T>
  void operator()(const T* x, T* r) const {
    const T s1 = sq(x[0]), s2 = sq(x[1]), s3 = sq(x[2]);
    r[0] = 5.0 * (s1 - s2) * s3 - sq(s1) + sq(s2);
    r[1] = 5.0 * (s3 - s1) * s2 + sq(s1) - sq(s3);
  }
};

// v_i = sinh(sqrt(b_i) t) / sqrt(b_i), i = 1, 2; v3 = t
struct Codim4Mixed {
  template <class T>
  void operator()(const T* x, T* r) const {
    const T s1 = sq(x[0]), s2 = sq(x[1]);
    r[0] = s1 - 5.0 * s2;
    r[1] = 5.0 * s1 - s2;
    r[2] = 3.0 * sq(s2) - 3.0 * sq(s1);
  }
};

std::vector<double> snap(std::vector<double> x) {
  for (double& v : x)
    if (std::abs(v) < 1e-9) v = 0.0;
  return x;
}

// |.| on every parameter: each system depends on its parameters only through squares,
// except a in 5.1, which is positive by assumption.
std::vector<double> abs_all(std::vector<double> x) {
  for (double& v : x) v = std::abs(v);
  return snap(std::move(x));
}

// |.| and c1 <-> c2 (swapping v2 and v3)
std::vector<double> abs_swap_c(std::vector<double> x) {
  x = abs_all(std::move(x));
  if (x[1] > x[2]) std::swap(x[1], x[2]);
  return x;
}

// permutations and scaling: sort descending, divide by the smallest entry
std::vector<double> family_direction(std::vector<double> x) {
  x = abs_all(std::move(x));
  std::sort(x.begin(), x.end(), std::greater<>());
  const double m = x.back();
  if (m > 0)
    for (double& v : x) v /= m;
  return x;
}

template <class F>
ConstraintSystem make(std::string id, std::string title, std::vector<Param> params, int equations, F f) {
  ConstraintSystem s;
  s.id = std::move(id);
  s.title = std::move(title);
  s.params = std::move(params);
  s.equations = equations;
  s.eval = [f](const double* x, double* r) { f(x, r); };
  s.eval_dual = [f](const Dual* x, Dual* r) { f(x, r); };
  s.canonical = abs_all;
  s.symmetry = "sign of each parameter";
  return s;
}

std::vector<ConstraintSystem> build() {
  const double s3 = std::sqrt(3.0), s2 = std::sqrt(2.0);
  auto P = [](std::string n, double lo, double hi) { return Param{std::move(n), lo, hi}; };
  const Param a = P("a", 0.1, 6), b = P("b", 0.1, 6), b1 = P("b1", 0.1, 6), b2 = P("b2", 0.1, 6), c = P("c", 0, 4),
              c1 = P("c1", 0, 4), c2 = P("c2", 0, 4);
  std::vector<ConstraintSystem> out;

  auto s = make("5.1-compact", "a sin t, b cos ct, b cos ct", {a, b, c}, 3, Compact51{});
  s.known_roots = {{{1.0, 2.0, 0.5}, "a = 1, b = 2, c = 1/2"}};
  out.push_back(s);

  out.push_back(make("5.1-hyperbolic", "a sinh t, b cosh ct, b cosh ct", {a, b, c}, 2, Hyperbolic51{}));
  out.push_back(make("5.1-linear", "a t, b cosh ct, b cosh ct", {a, b, c}, 2, Linear51{}));

  s = make("5.2.1", "2 sin t, b cos c1 t, b cos c2 t", {b, c1, c2}, 5, Trig521{});
  s.canonical = abs_swap_c;
  s.symmetry = "c1 <-> c2, sign of each parameter";
  s.known_roots = {{{2.0, 0.0, 1.0}, "(c1, c2) = (1, 0) up to swap, b = 2"},
                   {{2.0, 1.0, 2.0}, "(c1, c2) = (1, 2) up to swap, b = 2"}};
  out.push_back(s);

  s = make("5.2.2", "4 sin t, b1 cos ct + b2 sin ct, b1 cos ct - b2 sin ct", {b1, b2, c}, 3, Trig522{});
  s.known_roots = {{{2 * s2, 2 * s2, 0.5}, "(b1, b2, c) = (2 sqrt2, 2 sqrt2, 1/2)"},
                   {{2 * s3, 2.0, 1.0}, "(b1, b2, c) = (2 sqrt3, 2, 1)"}};
  out.push_back(s);

  s = make("5.3.1", "2t, b cosh c1 t, b cosh c2 t", {b, c1, c2}, 3, Linear531{});
  s.canonical = abs_swap_c;
  s.symmetry = "c1 <-> c2, sign of each parameter";
  out.push_back(s);
  out.push_back(make("5.3.2", "4t, b1 cosh ct + b2 sinh ct, b1 cosh ct - b2 sinh ct", {b1, b2, c}, 2, Linear532{}));

  s = make("5.4.1", "2 sinh t, b cosh c1 t, b cosh c2 t", {b, c1, c2}, 3, Hyperbolic541{});
  s.canonical = abs_swap_c;
  s.symmetry = "c1 <-> c2, sign of each parameter";
  out.push_back(s);

  s = make("5.4.2", "4 sinh t, b1 cosh ct + b2 sinh ct, b1 cosh ct - b2 sinh ct", {b1, b2, c}, 3, Hyperbolic542{});
  s.known_roots = {{{2.0, 2.0, 1.0}, "(b1, b2, c) = (2, 2, 1)"}};
  out.push_back(s);

  s = make("codim4-trig", "sin(b_i t)/b_i", {P("b1", 0.1, 5), P("b2", 0.1, 5), P("b3", 0.1, 5)}, 2, Codim4Trig{});
  s.family = true;
  s.canonical = family_direction;
  s.symmetry = "permutations of (b1, b2, b3) and common scaling";
  s.known_families = {{{1.0, 1.0, 1.0}, "(b, b, b)"}, {{2.0, 1.0, 1.0}, "(2b, b, b)"}};
  out.push_back(s);

  out.push_back(make("codim4-mixed", "sinh(sqrt(b_i) t)/sqrt(b_i), i = 1, 2; t",
                     {P("b1", 0.1, 6), P("b2", 0.1, 6)}, 3, Codim4Mixed{}));
  return out;
}

}  // namespace

const std::vector<ConstraintSystem>& constraint_systems() {
  static const std::vector<ConstraintSystem> systems = build();
  return systems;
}

const ConstraintSystem& get_system(std::string_view id) {
  for (const auto& s : constraint_systems())
    if (s.id == id) return s;
  throw UnknownSystem("unknown constraint system '" + std::string(id) + "'");
}

Eigen::VectorXd constraint_residual(std::string_view id, const Eigen::VectorXd& params) {
  const auto& s = get_system(id);
  if (params.size() != s.arity())
    throw std::invalid_argument("system " + s.id + " takes " + std::to_string(s.arity()) + " parameters");
  Eigen::VectorXd r(s.equations);
  s.eval(params.data(), r.data());
  return r;
}

}  // namespace cohom
