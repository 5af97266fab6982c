#include "slspec/corpus.hpp"
#include "slspec/errors.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

using namespace slspec;

namespace {

std::size_t divisor_count(Int n) {
  std::size_t c = 0;
  for (Int d = 1; d <= n; ++d) c += n % d == 0;
  return c;
}

std::set<std::string> printed(const std::vector<InstanceSpec>& specs) {
  std::set<std::string> out;
  for (const auto& s : specs) out.insert(print_instance(s));
  return out;
}

}  // namespace

TEST(Corpus, CyclicFamilyHasEveryNonzeroCyclicModule) {
  const auto fam = cyclic_family(60);
  std::size_t expected = 0;
  for (Int n = 2; n <= 60; ++n) expected += divisor_count(n) - 1;
  EXPECT_EQ(fam.size(), expected);
  EXPECT_EQ(printed(fam).size(), fam.size());
  EXPECT_EQ(print_instance(fam.front()), "Z2 | (0)");
}

TEST(Corpus, PrimePowerFamilyRespectsTheCaps) {
  const auto fam = prime_power_family(64, 3);
  EXPECT_EQ(printed(fam).size(), fam.size());
  for (const auto& s : fam) {
    ASSERT_EQ(s.moduli.size(), 1u);
    EXPECT_TRUE(is_prime_power(s.moduli[0]));
    EXPECT_LE(s.factors.size(), 3u);
    EXPECT_LE(build_instance(s).module.size(), 64u);
  }
  // Z2 with one to three copies, then Z3, ...
  EXPECT_EQ(print_instance(fam[0]), "Z2 | (0)");
  EXPECT_EQ(printed(fam).count("Z8 | (0),(0)"), 1u);
  EXPECT_EQ(printed(fam).count("Z4 | (0),(0),(0)"), 1u);
  EXPECT_EQ(printed(fam).count("Z4 | (2),(0)"), 0u);  // written largest factor first
  EXPECT_EQ(printed(fam).count("Z4 | (0),(2)"), 1u);
  EXPECT_EQ(printed(fam).count("Z8 | (0),(0),(0)"), 0u);
}

TEST(Corpus, RingPairFamily) {
  const auto fam = ring_pair_family(36, 64, 2);
  EXPECT_EQ(printed(fam).size(), fam.size());
  for (const auto& s : fam) {
    ASSERT_EQ(s.moduli.size(), 2u);
    EXPECT_LE(s.moduli[0], s.moduli[1]);
    EXPECT_LE(s.moduli[0] * s.moduli[1], 36);
    EXPECT_LE(s.factors.size(), 2u);
    EXPECT_LE(build_instance(s).module.size(), 64u);
  }
  EXPECT_EQ(printed(fam).count("Z2xZ3 | (0,0)"), 1u);
  EXPECT_EQ(printed(fam).count("Z6xZ6 | (0,0),(0,0)"), 0u);
}

TEST(Corpus, DefaultCorpusMatchesTheShippedFile) {
  std::ifstream in(SLSPEC_SOURCE_DIR "/corpus/default.corpus");
  ASSERT_TRUE(in);
  std::ostringstream text;
  text << in.rdbuf();
  EXPECT_EQ(text.str(), default_corpus_text());
  const auto spec = parse_corpus(default_corpus_text());
  EXPECT_EQ(spec.instances.size(), 1185u);
  EXPECT_EQ(spec.families, (std::vector<std::string>{"cyclic 60", "prime-power 64 3", "ring-pairs 36 64 2"}));
  EXPECT_FALSE(spec.results.has_value());
}

TEST(Corpus, Directives) {
  const auto spec = parse_corpus(
      "# comment\n"
      "seed 9\nsubset-cap 5\nmax-elements 100   # trailing comment\n"
      "results T2.12 P4.13\n"
      "Z6 | (0)\n"
      "Z6 | (6)\n"
      "over-Z Z6 | (0)\n"
      "cyclic 4\n");
  EXPECT_EQ(spec.seed, 9u);
  EXPECT_EQ(spec.subset_cap, 5u);
  EXPECT_EQ(spec.max_elements, 100u);
  EXPECT_EQ(spec.results, (std::vector<std::string>{"T2.12", "P4.13"}));
  // Z6 | (6) duplicates Z6 | (0); the over-Z line is distinct.
  ASSERT_EQ(spec.instances.size(), 2u + 4u);
  EXPECT_FALSE(spec.instances[0].over_z);
  EXPECT_TRUE(spec.instances[1].over_z);
  EXPECT_EQ(print_instance(spec.instances[2]), "Z2 | (0)");
}

TEST(Corpus, ResultsAllResetsTheFilter) {
  EXPECT_FALSE(parse_corpus("results T2.12\nresults all\n").results.has_value());
  EXPECT_EQ(parse_corpus("results\n").results, std::vector<std::string>{});
}

TEST(Corpus, Errors) {
  auto line_of = [](const std::string& text) -> std::string {
    try {
      parse_corpus(text);
    } catch (const ParseError& e) {
      return e.message();
    }
    return "";
  };
  EXPECT_EQ(line_of("seed 1\nbogus 3\n").rfind("line 2: unknown directive 'bogus'", 0), 0u);
  EXPECT_EQ(line_of("cyclic\n").rfind("line 1: 'cyclic' takes 1", 0), 0u);
  EXPECT_EQ(line_of("\n\nseed x\n").rfind("line 3: expected a nonnegative integer", 0), 0u);
  EXPECT_EQ(line_of("Z8 | (3)\n").rfind("line 1: column 7", 0), 0u);
  EXPECT_THROW(parse_corpus("results T9.9\n"), UnknownResultError);
}

TEST(Corpus, EmptyResultFilterGivesAnEmptyReport) {
  auto spec = parse_corpus("results\nZ6 | (0)\nZ8 | (0)\n");
  const auto report = run_corpus(spec);
  EXPECT_TRUE(report.ids.empty());
  ASSERT_EQ(report.instances.size(), 2u);
  for (const auto& inst : report.instances) EXPECT_TRUE(inst.results.empty());
  EXPECT_FALSE(report.any_fail());
}

TEST(Corpus, SizeGuardIsRecordedPerInstance) {
  const auto report = run_corpus(parse_corpus("max-elements 16\nresults P4.13\nZ6 | (0)\nZ32 | (0)\n"));
  ASSERT_EQ(report.instances.size(), 2u);
  EXPECT_FALSE(report.instances[0].error.has_value());
  ASSERT_TRUE(report.instances[1].error.has_value());
  EXPECT_NE(report.instances[1].error->find("exceeds the guard of 16"), std::string::npos);
}

TEST(Corpus, Z6WithTheIdempotentResult) {
  const auto report = run_corpus(parse_corpus("results T2.12\nZ6 | (0)\n"));
  ASSERT_EQ(report.instances.size(), 1u);
  ASSERT_EQ(report.instances[0].results.size(), 1u);
  EXPECT_EQ(report.instances[0].results[0].status, Status::Pass);
  EXPECT_EQ(report.count(Status::Pass), 1u);
}

TEST(Corpus, PartnersShareTheRingAndAreAtLeastAsLarge) {
  const auto spec = parse_corpus("Z4 | (2)\nZ4 | (0)\nZ4 | (0),(2)\nZ4 | (0),(0)\nZ4 | (0),(0),(0)\nZ8 | (0)\n");
  std::vector<FiniteModule> modules;
  for (const auto& s : spec.instances) modules.push_back(build_instance(s).module);
  const auto partners = corpus_partners(modules[1], modules);
  ASSERT_EQ(partners.size(), 3u);
  EXPECT_EQ(partners[0].text(), "Z4 | (0),(2)");
  EXPECT_EQ(partners[1].text(), "Z4 | (0),(0)");
  EXPECT_EQ(partners[2].text(), "Z4 | (0),(0),(0)");
  EXPECT_TRUE(corpus_partners(modules[5], modules).empty());
}
