#include "cohom/metrics/catalog.hpp"

#include <cmath>
#include <numbers>

#include "cohom/errors.hpp"

namespace cohom {

namespace {

using F = ScalarFunction;
constexpr double kPi = std::numbers::pi;
const double kSqrt3 = std::sqrt(3.0);
const double kSqrt2 = std::sqrt(2.0);

GroupDiagram su2(SingularIsotropy k, std::string h, int a, int codim, bool primed = false) {
  return {Group::SU2, k, std::move(h), a, codim, primed};
}

GroupDiagram full() { return su2(SingularIsotropy::FullGroup, "e", 1, 4); }
GroupDiagram circle_collapse() { return {Group::SO3xSO2, SingularIsotropy::T2, "S1", 1, 2, false}; }
GroupDiagram sphere_collapse() { return {Group::SO3xSO2, SingularIsotropy::SO3, "S1", 1, 3, false}; }

DiagonalMetric diag(F v1, F v2, F v3, Interval dom, std::optional<GroupDiagram> d) {
  return {{std::move(v1), std::move(v2), std::move(v3)}, dom, std::move(d)};
}

F radial(int sign) {
  if (sign > 0) return F::sin(1, 1);
  if (sign < 0) return F::sinh(1, 1);
  return F::monomial(1, 1);
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> c;
  const Interval window{0.0, kNoncompactWindow};

  {
    auto lo = su2(SingularIsotropy::Pin2, "D2*", 4, 2);
    auto hi = su2(SingularIsotropy::Pin2, "D2*", 4, 2, true);
    c.push_back({"ex1",
                 diag(F::sin(4, 1), F::cos(2 * kSqrt3, 1) - F::sin(2, 1), F::cos(2 * kSqrt3, 1) + F::sin(2, 1),
                      {0, kPi / 3}, lo),
                 "S4", lo, hi, true, true, true});
  }
  {
    auto lo = su2(SingularIsotropy::SO2, "Z4", 4, 2, true);
    auto hi = su2(SingularIsotropy::Pin2, "Z4", 2, 2);
    c.push_back({"ex2",
                 diag(F::sin(2, 2), F::cos(kSqrt2, 1) - F::sin(kSqrt2, 1), F::cos(kSqrt2, 1) + F::sin(kSqrt2, 1),
                      {0, kPi / 4}, lo),
                 "CP2", lo, hi, true, true, true});
  }
  {
    auto lo = su2(SingularIsotropy::Pin2, "D2*", 4, 2);
    c.push_back({"tsukada", diag(F::sinh(4, 1), F::exp(2, 1), F::exp(2, -1), window, lo),
                 "normal bundle of RP2 in CP2", lo, std::nullopt, false, false, false});
  }
  {
    auto lo = su2(SingularIsotropy::Pin2, "Z4", 2, 2);
    auto hi = su2(SingularIsotropy::SO2, "Z4", 4, 2, true);
    c.push_back({"ex4", diag(F::sin(2, 1), F::cos(2, 2), F::cos(2, 1), {0, kPi / 4}, lo), "CP2", lo, hi, true,
                 true, true});
  }
  {
    auto lo = su2(SingularIsotropy::SO2, "Z2", 2, 2);
    c.push_back({"ex5", example5_family(2.0), "S2xS2", lo, lo, true, true, true});
  }
  {
    auto hi = su2(SingularIsotropy::SO2, "e", 1, 2);
    c.push_back({"ex6", diag(F::sin(1, 1), F::sin(1, 1), F::sin(0.5, 2), {0, kPi / 2}, full()), "CP2", full(), hi,
                 true, true, true});
  }
  c.push_back({"ex7", diag(F::sinh(1, 1), F::sinh(1, 1), F::sinh(0.5, 2), window, full()), "CH2", full(),
               std::nullopt, false, true, true});
  c.push_back({"ex8-sphere", diag(F::sin(1, 1), F::sin(1, 1), F::sin(1, 1), {0, kPi}, full()), "S4", full(), full(),
               true, true, true});
  c.push_back({"ex8-hyperbolic", diag(F::sinh(1, 1), F::sinh(1, 1), F::sinh(1, 1), window, full()), "H4", full(),
               std::nullopt, false, true, true});
  c.push_back({"ex8-flat", diag(F::monomial(1, 1), F::monomial(1, 1), F::monomial(1, 1), window, full()), "R4",
               full(), std::nullopt, false, true, true});
  c.push_back({"ex9", example9_family(1.0), "S4", circle_collapse(), sphere_collapse(), true, true, true});
  c.push_back({"ex10-compact", example10_family(1, 1.0), "S2xS2", circle_collapse(), circle_collapse(), true, true,
               true});
  c.push_back({"ex10-flat", example10_family(0, 1.0), "S2xR2", circle_collapse(), std::nullopt, false, true,
               false});
  c.push_back({"ex10-hyperbolic", example10_family(-1, 1.0), "S2xH2", circle_collapse(), std::nullopt, false, true,
               false});
  return c;
}

}  // namespace

const Interval& CatalogEntry::domain() const {
  return std::visit([](const auto& m) -> const Interval& { return m.domain; }, metric);
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const CatalogEntry& catalog_get(std::string_view id) {
  if (id == "ex3") id = "tsukada";
  else if (id == "ex8") id = "ex8-sphere";
  else if (id == "ex10") id = "ex10-compact";
  for (const auto& e : catalog())
    if (e.id == id) return e;
  throw UnknownId("unknown catalog id '" + std::string(id) + "'");
}

DiagonalMetric example5_family(double b) {
  return diag(F::sin(b, 1), F::cos(b, 1), F::constant(b), {0, kPi / 2},
              su2(SingularIsotropy::SO2, "Z2", 2, 2));
}

ProductMetric example9_family(double a) { return {F::cos(1, 1), F::sin(a, 1), {0, kPi / 2}}; }

ProductMetric example10_family(int curvature_sign, double a, double scale) {
  const Interval dom = curvature_sign > 0 ? Interval{0, kPi} : Interval{0, kNoncompactWindow};
  return {F::constant(a), scale * radial(curvature_sign), dom};
}

}  // namespace cohom
