#include <numbers>

#include <gtest/gtest.h>

#include "cohom/errors.hpp"
#include "cohom/metrics/catalog.hpp"
#include "cohom/smoothness/smoothness.hpp"

using namespace cohom;
using F = ScalarFunction;

namespace {

const DiagonalMetric& diagonal(const char* id) { return std::get<DiagonalMetric>(catalog_get(id).metric); }

GroupDiagram speed(int a) {
  for (const auto& d : admissible_su2_codim2())
    if (d.slice_speed_a == a) return d;
  throw std::logic_error("no diagram");
}

}  // namespace

TEST(Codim2, Example5) { EXPECT_EQ(check_smooth_codim2(diagonal("ex5"), speed(2)).verdict, Verdict::Smooth); }

TEST(Codim2, ScaledExample5IsAnOrbifold) {
  const SmoothnessReport r = check_smooth_codim2(example5_family(3.0), speed(2));
  EXPECT_EQ(r.verdict, Verdict::Orbifold);
  ASSERT_TRUE(r.orbifold_order);
  EXPECT_EQ(*r.orbifold_order, 3);
  ASSERT_TRUE(r.speed_ratio);
  EXPECT_NEAR(*r.speed_ratio, 1.5, 1e-12);
}

TEST(Codim2, NonIntegerScaleIsNotSmooth) {
  EXPECT_EQ(check_smooth_codim2(example5_family(2.5), speed(2)).verdict, Verdict::NotSmooth);
}

TEST(Codim2, TsukadaWithSpeedFour) {
  const SmoothnessReport r = check_smooth_codim2(diagonal("tsukada"), speed(4));
  EXPECT_EQ(r.verdict, Verdict::Smooth);
  EXPECT_TRUE(r.failures().empty());
  // with a = 2 the difference f2 - f3 would need to start at order 2, but it is odd
  EXPECT_EQ(check_smooth_codim2(diagonal("tsukada"), speed(2)).verdict, Verdict::NotSmooth);
}

TEST(Codim2, WrongCodimension) {
  GroupDiagram d;
  d.singular = SingularIsotropy::FullGroup;
  d.codim = 4;
  EXPECT_THROW(check_smooth_codim2(diagonal("ex5"), d), ConfigError);
  EXPECT_THROW(check_smooth_codim4(diagonal("ex5")), ConfigError);
}

TEST(Codim4, Examples) {
  EXPECT_EQ(check_smooth_codim4(diagonal("ex8-sphere")).verdict, Verdict::Smooth);
  EXPECT_EQ(check_smooth_codim4(diagonal("ex6")).verdict, Verdict::Smooth);
  const DiagonalMetric bad{{F::sin(1, 1), F::sin(1, 1), F::sin(1, 2)}, {0, 1.5}, std::nullopt};
  const SmoothnessReport r = check_smooth_codim4(bad);
  EXPECT_EQ(r.verdict, Verdict::NotSmooth);
  ASSERT_FALSE(r.failures().empty());
}

TEST(Product, Examples) {
  EXPECT_EQ(check_smooth_product(example9_family(1.0), End::Lower).verdict, Verdict::Smooth);
  const SmoothnessReport r = check_smooth_product(example9_family(3.0), End::Lower);
  EXPECT_EQ(r.verdict, Verdict::Orbifold);
  ASSERT_TRUE(r.orbifold_order);
  EXPECT_EQ(*r.orbifold_order, 3);
  EXPECT_EQ(check_smooth_product(std::get<ProductMetric>(catalog_get("ex10-hyperbolic").metric), End::Lower).verdict,
            Verdict::Smooth);
  EXPECT_EQ(check_smooth_product(example9_family(1.0), End::Upper).verdict, Verdict::Smooth);
}

TEST(Product, NothingCollapses) {
  const ProductMetric m{F::constant(1), F::constant(2), {0, 1}};
  EXPECT_THROW(check_smooth_product(m, End::Lower), ConfigError);
}

TEST(Catalog, EveryStatedEndPasses) {
  for (const auto& e : catalog()) {
    const SmoothnessReport lo = check_smooth_entry(e, End::Lower);
    EXPECT_EQ(lo.verdict, Verdict::Smooth) << e.id << " lower";
    if (e.upper) {
      EXPECT_EQ(check_smooth_entry(e, End::Upper).verdict, Verdict::Smooth) << e.id << " upper";
    }
  }
}

TEST(Catalog, PerturbingAnySingleFunctionBreaksSmoothness) {
  for (const auto& e : catalog()) {
    if (!e.diagonal()) continue;
    for (End end : {End::Lower, End::Upper}) {
      if (end == End::Upper && !e.upper) continue;
      for (int i = 0; i < 3; ++i) {
        CatalogEntry bent = e;
        auto& m = std::get<DiagonalMetric>(bent.metric);
        m.v[i] = 1.01 * m.v[i];
        EXPECT_EQ(check_smooth_entry(bent, end).verdict, Verdict::NotSmooth) << e.id << " v" << i + 1;
      }
    }
  }
}

TEST(Catalog, PerturbingTheCollapsingProductFactor) {
  for (const char* id : {"ex9", "ex10-compact", "ex10-flat", "ex10-hyperbolic"}) {
    CatalogEntry bent = catalog_get(id);
    auto& m = std::get<ProductMetric>(bent.metric);
    m.g = 1.01 * m.g;
    EXPECT_EQ(check_smooth_entry(bent, End::Lower).verdict, Verdict::NotSmooth) << id;
  }
  CatalogEntry bent = catalog_get("ex9");
  auto& m = std::get<ProductMetric>(bent.metric);
  m.f = 1.01 * m.f;
  EXPECT_EQ(check_smooth_entry(bent, End::Upper).verdict, Verdict::NotSmooth);
}

TEST(Catalog, ReflectedExample2CarriesTheDiagramOfExample4) {
  const DiagonalMetric r = reflect(diagonal("ex2"));
  EXPECT_EQ(check_smooth(AnyMetric(r), catalog_get("ex4").lower, End::Lower).verdict, Verdict::Smooth);
  EXPECT_EQ(check_smooth(AnyMetric(diagonal("ex2")), catalog_get("ex4").lower, End::Upper).verdict, Verdict::Smooth);
}

TEST(Full, DiagonalInputAgreesWithTheDiagonalChecker) {
  const DiagonalMetric& m = diagonal("tsukada");
  // P_t = diag(v_i^2) written out for tsukada: 4 sinh^2 stays in exp form
  const FullMetricEndo q{F::exp(4, 2) + F::exp(4, -2) - F::constant(8), F::exp(4, 2), F::exp(4, -2),
                         F{},                                          F{},           F{},
                         m.domain};
  EXPECT_EQ(check_smooth_full(q, speed(4)).verdict, Verdict::Smooth);
  FullMetricEndo off = q;
  off.d12 = F::monomial(0.1, 2);  // needs t^{2 + 2/a} = t^{5/2}: any t^2 term is forbidden
  EXPECT_EQ(check_smooth_full(off, speed(4)).verdict, Verdict::NotSmooth);
}
