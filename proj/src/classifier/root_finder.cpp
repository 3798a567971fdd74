#include "cohom/classifier/root_finder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Dense>

#include "cohom/errors.hpp"

namespace cohom {

namespace {

using Vec = Eigen::VectorXd;

double norm2(const ConstraintSystem& sys, const Vec& x) {
  double r[kMaxEquations];
  sys.eval(x.data(), r);
  double s = 0;
  for (int i = 0; i < sys.equations; ++i) s += r[i] * r[i];
  return std::isfinite(s) ? s : std::numeric_limits<double>::infinity();
}

void jacobian(const ConstraintSystem& sys, const Vec& x, Vec& r, Eigen::MatrixXd& j) {
  const int n = sys.arity(), m = sys.equations;
  Dual xd[kMaxParams], rd[kMaxEquations];
  for (int i = 0; i < kMaxParams; ++i) {
    xd[i].value() = i < n ? x[i] : 0.0;
    xd[i].derivatives() = Eigen::Matrix<double, kMaxParams, 1>::Unit(i);
  }
  sys.eval_dual(xd, rd);
  r.resize(m);
  j.resize(m, n);
  for (int e = 0; e < m; ++e) {
    r[e] = rd[e].value();
    for (int i = 0; i < n; ++i) j(e, i) = rd[e].derivatives()[i];
  }
}

// Gauss-Newton with minimum-norm steps and backtracking.
Vec polish(const ConstraintSystem& sys, Vec x, const RootFinderOptions& opt) {
  Vec r;
  Eigen::MatrixXd j;
  for (int it = 0; it < opt.max_iter; ++it) {
    jacobian(sys, x, r, j);
    const Vec step = j.completeOrthogonalDecomposition().solve(-r);
    if (!step.allFinite()) break;
    const double f0 = r.squaredNorm();
    double lambda = 1.0;
    Vec next = x + step;
    while (norm2(sys, next) > f0 && lambda > 1e-8) {
      lambda *= 0.5;
      next = x + lambda * step;
    }
    const double moved = (next - x).norm();
    x = next;
    if (moved <= opt.newton_tol * (1.0 + x.norm()) || r.squaredNorm() == 0.0) break;
  }
  return x;
}

bool in_box(const std::vector<Param>& box, const std::vector<double>& x) {
  for (std::size_t i = 0; i < box.size(); ++i)
    if (x[i] < box[i].lo - 1e-9 || x[i] > box[i].hi + 1e-9) return false;
  return true;
}

double dist(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

// Grid points whose residual norm is no larger than any of their axis neighbours.
std::vector<Vec> seeds(const ConstraintSystem& sys, const std::vector<Param>& box, int grid) {
  const int n = sys.arity();
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= grid;
  std::vector<double> val(total);
  auto point = [&](std::size_t idx) {
    Vec x(n);
    for (int i = 0; i < n; ++i) {
      const int k = static_cast<int>(idx % grid);
      idx /= grid;
      x[i] = box[i].lo + (box[i].hi - box[i].lo) * k / (grid - 1);
    }
    return x;
  };
  for (std::size_t idx = 0; idx < total; ++idx) val[idx] = norm2(sys, point(idx));
  std::vector<Vec> out;
  for (std::size_t idx = 0; idx < total; ++idx) {
    bool minimum = true;
    std::size_t stride = 1, rest = idx;
    for (int i = 0; i < n && minimum; ++i) {
      const int k = static_cast<int>(rest % grid);
      rest /= grid;
      if (k > 0 && val[idx - stride] < val[idx]) minimum = false;
      if (k < grid - 1 && val[idx + stride] < val[idx]) minimum = false;
      stride *= grid;
    }
    if (minimum && std::isfinite(val[idx])) out.push_back(point(idx));
  }
  return out;
}

}  // namespace

double max_residual(const ConstraintSystem& sys, const std::vector<double>& x) {
  double r[kMaxEquations];
  sys.eval(x.data(), r);
  double m = 0;
  for (int i = 0; i < sys.equations; ++i) m = std::max(m, std::abs(r[i]));
  return m;
}

RootReport find_roots(const ConstraintSystem& sys, const RootFinderOptions& opt) {
  RootReport rep;
  rep.system = sys.id;
  rep.box = opt.box.value_or(sys.params);
  if (static_cast<int>(rep.box.size()) != sys.arity())
    throw ConfigError("box for " + sys.id + " must have " + std::to_string(sys.arity()) + " entries");

  const auto starts = seeds(sys, rep.box, opt.grid);
  rep.seeds = static_cast<int>(starts.size());

  std::vector<std::vector<double>> found;
  for (const Vec& s : starts) {
    const Vec x = polish(sys, s, opt);
    std::vector<double> raw(x.data(), x.data() + x.size());
    if (!x.allFinite() || max_residual(sys, raw) > opt.accept_tol) continue;
    if (!in_box(rep.box, raw) && !in_box(rep.box, sys.canonical(raw))) continue;
    if (sys.family) {
      found.push_back(sys.canonical(raw));
      continue;
    }
    auto c = sys.canonical(raw);
    if (!in_box(rep.box, c)) continue;
    found.push_back(std::move(c));
  }

  // cluster, keeping the member with the smallest residual
  std::sort(found.begin(), found.end());
  std::vector<std::vector<double>> merged;
  for (auto& f : found) {
    auto it = std::find_if(merged.begin(), merged.end(),
                           [&](const auto& g) { return dist(f, g) <= opt.merge_radius; });
    if (it == merged.end())
      merged.push_back(f);
    else if (!sys.family && max_residual(sys, f) < max_residual(sys, *it))
      *it = f;
  }
  std::sort(merged.begin(), merged.end());

  if (sys.family) {
    for (auto& d : merged) {
      FoundFamily fam;
      fam.direction = d;
      // scales that keep the whole point inside the box
      double lo = 0, hi = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] <= 0) continue;
        lo = std::max(lo, rep.box[i].lo / d[i]);
        hi = std::min(hi, rep.box[i].hi / d[i]);
      }
      fam.verified = hi >= lo;
      for (int k = 0; k < opt.family_samples && fam.verified; ++k) {
        const double s = lo + (hi - lo) * k / std::max(1, opt.family_samples - 1);
        std::vector<double> x(d);
        double scale = 0;
        for (double& v : x) {
          v *= s;
          scale = std::max(scale, std::abs(v));
        }
        // the family systems are homogeneous of degree 4
        const double rel = max_residual(sys, x) / std::max(1.0, std::pow(scale, 4));
        fam.max_relative_residual = std::max(fam.max_relative_residual, rel);
        ++fam.samples;
      }
      fam.verified = fam.verified && fam.max_relative_residual <= opt.accept_tol;
      rep.families.push_back(fam);
    }
    for (const auto& k : sys.known_families) {
      const bool hit = std::any_of(rep.families.begin(), rep.families.end(),
                                   [&](const FoundFamily& f) { return dist(f.direction, k.x) <= opt.merge_radius; });
      if (!hit) rep.missing.push_back(k.provenance);
    }
    for (const auto& f : rep.families) {
      const bool known = std::any_of(sys.known_families.begin(), sys.known_families.end(),
                                     [&](const KnownRoot& k) { return dist(f.direction, k.x) <= opt.merge_radius; });
      if (!known || !f.verified) rep.extra.push_back(f.direction);
    }
    return rep;
  }

  for (auto& x : merged) rep.roots.push_back({x, max_residual(sys, x)});
  for (const auto& k : sys.known_roots) {
    const bool hit = std::any_of(rep.roots.begin(), rep.roots.end(),
                                 [&](const FoundRoot& r) { return dist(r.x, k.x) <= opt.merge_radius; });
    if (!hit) rep.missing.push_back(k.provenance);
  }
  for (const auto& r : rep.roots) {
    const bool known = std::any_of(sys.known_roots.begin(), sys.known_roots.end(),
                                   [&](const KnownRoot& k) { return dist(r.x, k.x) <= opt.merge_radius; });
    if (!known) rep.extra.push_back(r.x);
  }
  return rep;
}

RootReport find_roots(std::string_view system_id, const RootFinderOptions& opt) {
  return find_roots(get_system(system_id), opt);
}

std::vector<Param> parse_box(const ConstraintSystem& sys, const std::string& text) {
  std::vector<Param> box = sys.params;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('='), colon = item.find(':');
    if (eq == std::string::npos || colon == std::string::npos || colon < eq)
      throw ConfigError("box entry '" + item + "' is not name=lo:hi");
    const std::string name = item.substr(0, eq);
    auto it = std::find_if(box.begin(), box.end(), [&](const Param& p) { return p.name == name; });
    if (it == box.end()) throw ConfigError("system " + sys.id + " has no parameter '" + name + "'");
    try {
      std::size_t used = 0;
      const std::string lo = item.substr(eq + 1, colon - eq - 1), hi = item.substr(colon + 1);
      it->lo = std::stod(lo, &used);
      if (used != lo.size()) throw std::invalid_argument(lo);
      it->hi = std::stod(hi, &used);
      if (used != hi.size()) throw std::invalid_argument(hi);
    } catch (const std::logic_error&) {
      throw ConfigError("box entry '" + item + "' has a malformed bound");
    }
    if (!(it->lo <= it->hi) || !std::isfinite(it->lo) || !std::isfinite(it->hi))
      throw ConfigError("box entry '" + item + "' is empty");
  }
  return box;
}

}  // namespace cohom
