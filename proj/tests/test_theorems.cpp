#include "generators.hpp"

#include "slspec/instance.hpp"
#include "slspec/theorems.hpp"

#include <gtest/gtest.h>

using namespace slspec;

namespace {

FiniteModule mod(const std::string& text) { return load_instance(text).module; }

void expect_same(const VerificationResult& a, const VerificationResult& b) {
  EXPECT_EQ(a.id, b.id);
  EXPECT_EQ(a.instance, b.instance);
  EXPECT_EQ(a.status, b.status);
  EXPECT_EQ(a.hypotheses, b.hypotheses);
  EXPECT_EQ(a.skipped, b.skipped);
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_EQ(a.notes, b.notes);
  EXPECT_EQ(a.cases, b.cases);
}

}  // namespace

TEST(Registry, ListsEveryNumberedStatement) {
  const std::vector<std::string> expected{
      "T2.1",  "T2.2",  "T2.3",  "L2.4",  "C2.5",  "P2.6",  "C2.7",  "L2.8",  "P2.9",  "P2.10", "C2.11", "T2.12",
      "L2.13", "T2.14", "C2.15", "T3.1",  "P3.2",  "C3.3",  "T3.4",  "T3.5",  "P4.1",  "T4.2",  "C4.3",  "T4.4",
      "T4.5",  "T4.6",  "C4.7",  "C4.8",  "T4.9",  "C4.10", "T4.11", "C4.12", "P4.13", "L4.14", "L4.15", "C4.16"};
  EXPECT_EQ(result_registry(), expected);
}

TEST(Registry, EveryIdHasAVerifier) {
  InstanceVerifier v(mod("Z4 | (0),(2)"));
  for (const auto& id : result_registry()) {
    const auto r = v.verify(id);
    EXPECT_EQ(r.id, id);
    EXPECT_NE(r.status, Status::Fail) << id << ": " << r.witness;
  }
}

TEST(Registry, UnknownIdIsRejected) {
  EXPECT_FALSE(is_registered("T9.9"));
  try {
    verify(mod("Z6 | (0)"), "T9.9");
    FAIL();
  } catch (const UnknownResultError& e) {
    EXPECT_EQ(e.id(), "T9.9");
    EXPECT_NE(std::string(e.what()).find("T2.1"), std::string::npos);
  }
}

TEST(Theorems, StatusNames) {
  EXPECT_EQ(status_name(Status::Pass), "PASS");
  EXPECT_EQ(status_name(Status::PassBounded), "PASS-BOUNDED");
  EXPECT_EQ(status_name(Status::Fail), "FAIL");
  EXPECT_EQ(status_name(Status::SkippedHypothesis), "SKIPPED-HYPOTHESIS");
}

TEST(Theorems, Z6IsT0WithSingletonFibers) {
  const auto r = verify(mod("Z6 | (0)"), "T4.9");
  EXPECT_EQ(r.status, Status::Pass);
  EXPECT_GT(r.cases, 0u);
}

TEST(Theorems, Z8EquivalencesHoldInTheFalseDirection) {
  EXPECT_EQ(verify(mod("Z8 | (0)"), "C4.12").status, Status::Pass);
  EXPECT_EQ(verify(mod("Z8 | (0)"), "T4.9").status, Status::Pass);
}

TEST(Theorems, PlaneSkipsTheComultiplicationResult) {
  const auto r = verify(mod("Z2 | (0),(0)"), "T2.2");
  EXPECT_EQ(r.status, Status::SkippedHypothesis);
  EXPECT_EQ(r.skipped, hypothesis::kComultiplication);
  EXPECT_FALSE(r.hypotheses.at(hypothesis::kComultiplication));
}

TEST(Theorems, Z6IdempotentsSplitTheSpace) {
  EXPECT_EQ(verify(mod("Z6 | (0)"), "T2.12").status, Status::Pass);
  EXPECT_EQ(verify(mod("Z8 | (0)"), "T2.12").status, Status::Pass);
}

TEST(Theorems, FieldHypothesis) {
  EXPECT_EQ(verify(mod("Z5 | (0)"), "C3.3").status, Status::Pass);
  EXPECT_EQ(verify(mod("Z3 | (0),(0)"), "C3.3").status, Status::Pass);
  const auto r = verify(mod("Z6 | (0)"), "C3.3");
  EXPECT_EQ(r.status, Status::SkippedHypothesis);
  EXPECT_EQ(r.skipped, hypothesis::kField);
}

TEST(Theorems, SubsetCapMarksTheResultBounded) {
  VerifyOptions capped;
  capped.subset_cap = 2;
  capped.subset_samples = 16;
  for (const char* id : {"P4.1", "T4.4", "C4.3"}) {
    const auto r = verify(mod("Z2 | (0),(0)"), id, capped);
    EXPECT_EQ(r.status, Status::PassBounded) << id;
    EXPECT_FALSE(r.notes.empty());
    EXPECT_EQ(verify(mod("Z2 | (0),(0)"), id).status, Status::Pass) << id;
  }
}

TEST(Theorems, Deterministic) {
  VerifyOptions options;
  options.subset_cap = 3;
  options.seed = 11;
  const auto m = mod("Z4 | (0),(0)");
  options.partners = {mod("Z4 | (0),(0),(2)")};
  InstanceVerifier a(m, options), b(m, options);
  const auto ra = a.verify_all(result_registry());
  const auto rb = b.verify_all(result_registry());
  ASSERT_EQ(ra.size(), rb.size());
  for (std::size_t i = 0; i < ra.size(); ++i) expect_same(ra[i], rb[i]);
}

TEST(TheoremsProperty, RandomModulesNeverFail) {
  gen::Source src(71);
  for (int trial = 0; trial < 40; ++trial) {
    const auto spec = src.instance(12, 2, 32);
    auto bigger = spec;
    bigger.factors.push_back(spec.factors.back());
    VerifyOptions options;
    options.seed = static_cast<std::uint64_t>(trial);
    options.partners = {build_instance(bigger).module};
    InstanceVerifier v(build_instance(spec).module, options);
    for (const auto& r : v.verify_all(result_registry())) {
      EXPECT_NE(r.status, Status::Fail) << r.instance << " " << r.id << ": " << r.witness;
      if (r.status == Status::SkippedHypothesis) {
        ASSERT_TRUE(r.hypotheses.count(r.skipped)) << r.id << " skipped on an unrecorded hypothesis";
        EXPECT_FALSE(r.hypotheses.at(r.skipped)) << r.id;
      }
    }
  }
}
