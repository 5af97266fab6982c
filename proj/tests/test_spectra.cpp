#include "generators.hpp"
#include "oracles.hpp"

#include "slspec/errors.hpp"
#include "slspec/instance.hpp"
#include "slspec/reference.hpp"
#include "slspec/spectra.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace slspec;

namespace {

FiniteModule mod(const std::string& text) { return load_instance(text).module; }

std::vector<std::string> texts(const std::vector<Submodule>& subs) {
  std::vector<std::string> out;
  for (const auto& s : subs) out.push_back(s.text());
  return out;
}

std::vector<bool> as_vector(const PointSet& s) {
  std::vector<bool> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = s.test(i);
  return out;
}

// Library lattice index -> oracle submodule index.
std::vector<std::size_t> align(const ModuleSpectra& sp, const oracle::RawModule& raw, const oracle::Spectrum& os) {
  std::vector<std::size_t> out(sp.lattice().size());
  for (std::size_t j = 0; j < os.submodules().size(); ++j) {
    out[sp.lattice().index_of(raw.to_library(sp.module(), os.submodules()[j]))] = j;
  }
  return out;
}

}  // namespace

TEST(Spectra, Z8) {
  const auto s = spec_L(mod("Z8 | (0)"));
  EXPECT_EQ(texts(s.points), (std::vector<std::string>{"{0,4}", "{0,2,4,6}", "{0,1,2,3,4,5,6,7}"}));
  EXPECT_EQ(texts(spec_s(mod("Z8 | (0)")).points), (std::vector<std::string>{"{0,4}"}));
}

TEST(Spectra, Z6) {
  EXPECT_EQ(texts(spec_L(mod("Z6 | (0)")).points), (std::vector<std::string>{"{0,3}", "{0,2,4}"}));
  EXPECT_EQ(texts(spec_s(mod("Z6 | (0)")).points), (std::vector<std::string>{"{0,3}", "{0,2,4}"}));
}

TEST(Spectra, VectorSpacesHaveEveryNonzeroSubspace) {
  for (const char* text : {"Z2 | (0)", "Z2 | (0),(0)", "Z2 | (0),(0),(0)", "Z3 | (0)", "Z3 | (0),(0)",
                           "Z3 | (0),(0),(0)"}) {
    const auto m = mod(text);
    const auto l = enumerate_submodules(m);
    EXPECT_EQ(spec_L(m).points.size(), l.size() - 1) << text;
    EXPECT_EQ(spec_s(m).points.size(), l.size() - 1) << text;
  }
}

TEST(Spectra, FiberRejectsNonPrime) {
  const auto m = mod("Z12 | (0)");
  EXPECT_THROW(spec_L_fiber(m, Ideal(m.ring(), {6})), SpecError);
  EXPECT_EQ(spec_L_fiber(m, Ideal(m.ring(), {2})).points.size(), 2u);
  EXPECT_EQ(spec_L_fiber(m, Ideal(m.ring(), {3})).points.size(), 1u);
}

TEST(SpectraProperty, MatchesDefinitionOracle) {
  gen::Source src(31);
  for (int trial = 0; trial < 80; ++trial) {
    const auto m = src.module(12, 3, 32);
    const ModuleSpectra sp(m);
    const auto raw = oracle::raw_of(m);
    std::vector<oracle::Mask> subs;
    for (const auto& s : sp.lattice()) {
      oracle::Mask mask(m.size());
      for (std::size_t x = 0; x < raw.size(); ++x) mask[x] = s.contains(raw.to_library(m, x));
      subs.push_back(mask);
    }
    const oracle::Spectrum os(raw, subs);
    // Built from the library lattice in order, so indices coincide.
    std::vector<std::size_t> spec_l(sp.spec_l().begin(), sp.spec_l().end());
    std::vector<std::size_t> spec_s(sp.spec_s().begin(), sp.spec_s().end());
    EXPECT_EQ(spec_l, os.spec_l()) << m.text();
    EXPECT_EQ(spec_s, os.spec_s()) << m.text();
    if (spec_l != os.spec_l()) continue;
    for (std::size_t i = 0; i < sp.lattice().size(); ++i) {
      EXPECT_EQ(sp.facts(i).secondary, os.facts(i).secondary) << m.text() << " " << sp.submodule(i).text();
      EXPECT_EQ(sp.facts(i).second, os.facts(i).second);
      EXPECT_EQ(sp.facts(i).soc, os.facts(i).soc);
      EXPECT_EQ(as_vector(sp.nu_s(i)), os.nu_s(i)) << m.text() << " " << sp.submodule(i).text();
      EXPECT_EQ(as_vector(sp.nu_s_star(i)), os.nu_s_star(i)) << m.text() << " " << sp.submodule(i).text();
    }
  }
}

TEST(SpectraProperty, OracleAlignmentIndependentOfListingOrder) {
  gen::Source src(32);
  for (int trial = 0; trial < 30; ++trial) {
    const auto m = src.module(8, 3, 16);
    const ModuleSpectra sp(m);
    const auto raw = oracle::raw_of(m);
    const oracle::Spectrum os(raw, oracle::submodules_by_subset_filter(raw));
    const auto idx = align(sp, raw, os);
    std::set<std::size_t> lib, orc(os.spec_l().begin(), os.spec_l().end());
    for (std::size_t i : sp.spec_l()) lib.insert(idx[i]);
    EXPECT_EQ(lib, orc) << m.text();
  }
}

TEST(SpectraProperty, SecondInsideSecondaryLikeAndMinimalInsideSecond) {
  gen::Source src(33);
  for (int trial = 0; trial < 100; ++trial) {
    const ModuleSpectra sp(src.module());
    std::set<std::size_t> l(sp.spec_l().begin(), sp.spec_l().end());
    std::set<std::size_t> s(sp.spec_s().begin(), sp.spec_s().end());
    for (std::size_t i : s) EXPECT_TRUE(l.count(i));
    for (const auto& n : minimal_submodules(sp.lattice())) EXPECT_TRUE(s.count(sp.lattice().index_of(n)));
    ASSERT_EQ(sp.second_in_spec_l().size(), sp.spec_s().size());
    for (std::size_t p = 0; p < sp.spec_s().size(); ++p) {
      EXPECT_EQ(sp.spec_l()[sp.second_in_spec_l()[p]], sp.spec_s()[p]);
    }
  }
}

TEST(SpectraProperty, AgreesWithReferenceChecker) {
  gen::Source src(34);
  for (int trial = 0; trial < 60; ++trial) {
    const ModuleSpectra sp(src.module(12, 3, 48));
    const Reference ref(sp.lattice());
    EXPECT_EQ(ref.spec_l(), sp.spec_l());
    EXPECT_EQ(ref.spec_s(), sp.spec_s());
    for (std::size_t i = 0; i < sp.lattice().size(); ++i) {
      EXPECT_EQ(ref.ann(i), sp.facts(i).ann);
      EXPECT_EQ(ref.rad_ann(i), sp.facts(i).rad_ann);
      EXPECT_EQ(ref.socle(i), sp.facts(i).soc);
      EXPECT_EQ(ref.nu_s(i), sp.nu_s(i));
      EXPECT_EQ(ref.nu_s_star(i), sp.nu_s_star(i));
      EXPECT_EQ(ref.v_s(i), sp.v_s(i));
      EXPECT_EQ(ref.v_s_star(i), sp.v_s_star(i));
    }
  }
}

TEST(SpectraProperty, FibersPartitionSpecL) {
  gen::Source src(35);
  for (int trial = 0; trial < 100; ++trial) {
    const ModuleSpectra sp(src.module());
    PointSet all(sp.spec_l().size());
    for (const auto& p : sp.ring_primes()) {
      const PointSet f = sp.fiber(p);
      EXPECT_FALSE(all.intersects(f));
      all |= f;
    }
    EXPECT_TRUE(all.all());
  }
}
