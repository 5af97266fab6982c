#include "generators.hpp"
#include "oracles.hpp"

#include "slspec/errors.hpp"
#include "slspec/instance.hpp"
#include "slspec/space.hpp"
#include "slspec/topology.hpp"

#include <gtest/gtest.h>

using namespace slspec;

namespace {

FiniteModule mod(const std::string& text) { return load_instance(text).module; }

PointSet set_of(std::size_t n, std::initializer_list<std::size_t> pts) {
  PointSet s(n);
  for (auto p : pts) s.set(p);
  return s;
}

FiniteTopology sierpinski() {
  return FiniteTopology(2, PointKind::Submodule, {set_of(2, {}), set_of(2, {1}), set_of(2, {0, 1})});
}

}  // namespace

TEST(Space, AxiomViolationsAreNamed) {
  EXPECT_TRUE(FiniteTopology::axiom_violation(2, {set_of(2, {0, 1})}).has_value());
  EXPECT_TRUE(FiniteTopology::axiom_violation(2, {set_of(2, {})}).has_value());
  EXPECT_TRUE(FiniteTopology::axiom_violation(3, {set_of(3, {}), set_of(3, {0}), set_of(3, {1}),
                                                  set_of(3, {0, 1, 2})})
                  .has_value());
  EXPECT_FALSE(FiniteTopology::axiom_violation(2, sierpinski().closed_sets()).has_value());
  EXPECT_THROW(FiniteTopology(2, PointKind::Submodule, {set_of(2, {})}), SpecError);
}

TEST(Space, SierpinskiSpace) {
  const auto t = sierpinski();
  const auto p = t.properties();
  EXPECT_TRUE(p.t0);
  EXPECT_FALSE(p.t1);
  EXPECT_TRUE(p.sober);
  EXPECT_TRUE(p.spectral);
  EXPECT_TRUE(p.connected);
  EXPECT_EQ(t.closure(set_of(2, {0})), set_of(2, {0, 1}));
  EXPECT_EQ(t.closure(set_of(2, {1})), set_of(2, {1}));
  EXPECT_TRUE(t.is_open(set_of(2, {0})));
  EXPECT_EQ(t.generic_points(t.full_set()), std::vector<std::size_t>{0});
  EXPECT_EQ(t.irreducible_components(), std::vector<PointSet>{t.full_set()});
}

TEST(Space, IndiscreteTwoPointsIsNotSober) {
  const FiniteTopology t(2, PointKind::Submodule, {set_of(2, {}), set_of(2, {0, 1})});
  EXPECT_TRUE(t.is_indiscrete());
  EXPECT_FALSE(t.properties().t0);
  EXPECT_FALSE(t.properties().sober);
  EXPECT_FALSE(t.properties().spectral);
  EXPECT_EQ(t.generic_points(t.full_set()).size(), 2u);
}

TEST(Space, Homeomorphisms) {
  const FiniteTopology flipped(2, PointKind::Submodule, {set_of(2, {}), set_of(2, {0}), set_of(2, {0, 1})});
  const auto h = find_homeomorphism(sierpinski(), flipped);
  ASSERT_TRUE(h.has_value());
  EXPECT_EQ(*h, (std::vector<std::size_t>{1, 0}));
  const FiniteTopology discrete(2, PointKind::Submodule,
                                {set_of(2, {}), set_of(2, {0}), set_of(2, {1}), set_of(2, {0, 1})});
  EXPECT_FALSE(find_homeomorphism(discrete, sierpinski()).has_value());
}

TEST(SpaceProperty, ClosureIsSmallestClosedSuperset) {
  gen::Source src(41);
  for (int trial = 0; trial < 50; ++trial) {
    const auto sp_module = src.module(12, 3, 32);
    const ModuleSpectra sp(sp_module);
    const auto t = build_space(sp, SpaceKind::SecondaryLike);
    for (int k = 0; k < 20; ++k) {
      PointSet y(t.size());
      for (std::size_t p = 0; p < t.size(); ++p) {
        if (src.coin()) y.set(p);
      }
      PointSet expected = t.full_set();
      for (const auto& c : t.closed_sets()) {
        if (y.is_subset_of(c)) expected &= c;
      }
      EXPECT_EQ(t.closure(y), expected);
      EXPECT_EQ(sl_closure(sp, t, y), expected);
    }
  }
}

TEST(SpaceProperty, IrreducibleMatchesTwoSetDefinition) {
  gen::Source src(42);
  for (int trial = 0; trial < 40; ++trial) {
    const ModuleSpectra sp(src.module(12, 3, 32));
    const auto t = build_space(sp, SpaceKind::SecondaryLike);
    if (t.size() > 10) continue;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << t.size()); ++mask) {
      const PointSet y(t.size(), mask);
      bool irreducible = y.any();
      for (const auto& a : t.closed_sets()) {
        for (const auto& b : t.closed_sets()) {
          if (y.is_subset_of(a | b) && !y.is_subset_of(a) && !y.is_subset_of(b)) irreducible = false;
        }
      }
      EXPECT_EQ(t.is_irreducible(y), irreducible);
    }
  }
}

TEST(Topology, Z6IsDiscreteAndReducible) {
  const ModuleSpectra sp(mod("Z6 | (0)"));
  const auto t = build_space(sp, SpaceKind::SecondaryLike);
  EXPECT_TRUE(t.is_discrete());
  EXPECT_FALSE(t.is_irreducible(t.full_set()));
  EXPECT_TRUE(t.properties().t1);
  // nu_s(2 Z6) and nu_s(3 Z6) are complementary singletons
  const auto& l = sp.lattice();
  const PointSet a = sp.nu_s(l.index_of(cyclic_submodule(sp.module(), 2)));
  const PointSet b = sp.nu_s(l.index_of(cyclic_submodule(sp.module(), 3)));
  EXPECT_EQ(a.count(), 1u);
  EXPECT_EQ(b.count(), 1u);
  EXPECT_EQ(a | b, t.full_set());
  EXPECT_FALSE(a.intersects(b));
}

TEST(Topology, Z8IsIndiscrete) {
  const ModuleSpectra sp(mod("Z8 | (0)"));
  const auto t = build_space(sp, SpaceKind::SecondaryLike);
  EXPECT_TRUE(t.is_indiscrete());
  EXPECT_EQ(t.size(), 3u);
  EXPECT_FALSE(t.properties().t0);
}

TEST(Topology, SecondaryCotopWitnessOnThePlane) {
  const ModuleSpectra sp(mod("Z2 | (0),(0)"));
  const auto c = is_secondary_cotop(sp);
  ASSERT_FALSE(c.holds);
  ASSERT_TRUE(c.witness.has_value());
  EXPECT_EQ(c.witness->first.size(), 2u);
  EXPECT_EQ(c.witness->second.size(), 2u);
  EXPECT_FALSE(c.topology.has_value());
}

TEST(TopologyProperty, ComultiplicationImpliesSecondaryCotop) {
  gen::Source src(43);
  for (int trial = 0; trial < 100; ++trial) {
    const ModuleSpectra sp(src.module());
    if (!is_comultiplication(sp.lattice())) continue;
    const auto c = is_secondary_cotop(sp);
    EXPECT_TRUE(c.holds) << sp.module().text();
    EXPECT_TRUE(c.topology.has_value());
  }
}

TEST(TopologyProperty, BaseGeneratesTheTopology) {
  gen::Source src(44);
  for (int trial = 0; trial < 80; ++trial) {
    const ModuleSpectra sp(src.module());
    const auto t = build_space(sp, SpaceKind::SecondaryLike);
    EXPECT_TRUE(verify_base(sp, t));
    EXPECT_TRUE(base_E(sp, sp.ring().zero()).none());
    EXPECT_TRUE(base_E(sp, sp.ring().one()).all());
  }
}

TEST(Topology, VarietyHelper) {
  const ModuleSpectra sp(mod("Z8 | (0)"));
  const auto v = variety(sp, VarietyKind::NuS, cyclic_submodule(sp.module(), 4));
  EXPECT_EQ(v.points.size(), 3u);
  EXPECT_EQ(variety_name(VarietyKind::VSStar), "V_s_star");
}

TEST(Topology, ZariskiOnSpec) {
  EXPECT_TRUE(zariski_on_spec(FiniteRing({6})).is_discrete());
  EXPECT_EQ(zariski_on_spec(FiniteRing({8})).size(), 1u);
  EXPECT_EQ(zariski_on_spec(FiniteRing({2, 3})).size(), 2u);
}
