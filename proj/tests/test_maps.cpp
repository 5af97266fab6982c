#include "generators.hpp"

#include "slspec/errors.hpp"
#include "slspec/instance.hpp"
#include "slspec/maps.hpp"
#include "slspec/topology.hpp"

#include <gtest/gtest.h>

using namespace slspec;

namespace {

FiniteModule mod(const std::string& text) { return load_instance(text).module; }

}  // namespace

TEST(Maps, PhiOnZ8IsSurjectiveNotInjective) {
  const ModuleSpectra sp(mod("Z8 | (0)"));
  const auto r = map_report(phi_map(sp));
  EXPECT_FALSE(r.injective);
  EXPECT_TRUE(r.surjective);
  EXPECT_TRUE(r.continuous);
  EXPECT_FALSE(r.homeomorphism);
  ASSERT_FALSE(r.witnesses.empty());
  EXPECT_EQ(r.witnesses[0].property, "injective");
}

TEST(Maps, PhiOnZ6IsAHomeomorphism) {
  const ModuleSpectra sp(mod("Z6 | (0)"));
  EXPECT_TRUE(map_report(phi_map(sp)).homeomorphism);
  EXPECT_TRUE(map_report(psi_map(sp)).homeomorphism);
}

TEST(MapsProperty, WitnessesRecheck) {
  gen::Source src(51);
  for (int trial = 0; trial < 100; ++trial) {
    const ModuleSpectra sp(src.module());
    for (const auto& map : {phi_map(sp), psi_map(sp)}) {
      const auto r = map_report(map);
      EXPECT_EQ(r.homeomorphism, r.injective && r.surjective && r.continuous && r.open_map);
      for (const auto& w : r.witnesses) EXPECT_TRUE(witness_holds(map, w)) << w.property << " " << w.text;
    }
  }
}

TEST(MapsProperty, PhiRestrictsToPsi) {
  gen::Source src(52);
  for (int trial = 0; trial < 100; ++trial) {
    const ModuleSpectra sp(src.module());
    const auto phi = phi_map(sp);
    const auto psi = psi_map(sp);
    for (std::size_t s = 0; s < sp.spec_s().size(); ++s) EXPECT_EQ(phi(sp.second_in_spec_l()[s]), psi(s));
  }
}

TEST(MapsProperty, PreimageOfClosedSets) {
  gen::Source src(53);
  for (int trial = 0; trial < 60; ++trial) {
    const ModuleSpectra sp(src.module());
    const auto phi = phi_map(sp);
    const auto psi = psi_map(sp);
    for (const auto& i : all_ideals(sp.ring())) {
      if (!sp.module_annihilator().is_subset_of(i)) {
        EXPECT_THROW(preimage_closed(sp, phi, i), SpecError);
        continue;
      }
      const std::size_t n = sp.lattice().index_of(annihilated_submodule(sp.module(), i));
      EXPECT_EQ(preimage_closed(sp, phi, i), sp.nu_s(n));
      EXPECT_EQ(preimage_closed(sp, psi, i), sp.v_s(n));
    }
  }
}

TEST(Maps, RhoRejectsNonMonomorphisms) {
  const auto z4 = mod("Z4 | (0)");
  const ModuleSpectra sp(z4);
  const ModuleHom doubling(z4, z4, {2});
  const auto w = injectivity_witness(doubling);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(doubling(w->first), doubling(w->second));
  try {
    induced_rho(sp, sp, doubling);
    FAIL() << "expected SpecError";
  } catch (const SpecError& e) {
    EXPECT_NE(std::string(e.what()).find("not a monomorphism"), std::string::npos);
  }
}

TEST(MapsProperty, RhoIsInjectiveAndContinuous) {
  gen::Source src(54);
  for (int trial = 0; trial < 30; ++trial) {
    const auto spec = src.instance(8, 2, 16);
    auto bigger = spec;
    bigger.factors.push_back(spec.factors.front());
    const auto a = build_instance(spec).module;
    const auto b = build_instance(bigger).module;
    const ModuleSpectra sa(a), sb(b);
    for (const auto& f : enumerate_homomorphisms(a, b, true, 32, 1).maps) {
      const auto r = map_report(induced_rho(sa, sb, f));
      EXPECT_TRUE(r.injective);
      EXPECT_TRUE(r.continuous);
      const Submodule fm = f.image(Submodule::whole(a));
      for (std::size_t k : sb.spec_l()) {
        const auto& n = sb.lattice()[k];
        if (!n.is_subset_of(fm)) {
          EXPECT_THROW(preimage_point_spectrum(sa, sb, f, n), SpecError);
          continue;
        }
        const Submodule pre = preimage_point_spectrum(sa, sb, f, n);
        EXPECT_TRUE(sa.spec_l_position(sa.lattice().index_of(pre)).has_value());
      }
    }
  }
}
