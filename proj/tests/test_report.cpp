#include "slspec/report.hpp"

#include <gtest/gtest.h>

using namespace slspec;
using nlohmann::json;

namespace {

const json* find_point(const json& spec_l, const std::string& text) {
  for (const auto& e : spec_l) {
    if (e["submodule"] == text) return &e;
  }
  return nullptr;
}

}  // namespace

TEST(Report, Z8Analysis) {
  const json doc = analysis_document(load_instance("Z8 | (0)"));
  EXPECT_EQ(doc["kind"], "analysis");
  EXPECT_EQ(doc["spec_s"], json::array({"{0,4}"}));
  EXPECT_EQ(doc["spec_l_count"], 3);
  const json* k = find_point(doc["spec_l"], "{0,2,4,6}");
  ASSERT_NE(k, nullptr);
  EXPECT_FALSE((*k)["second"].get<bool>());
  EXPECT_EQ((*k)["not_second_witness"], "2*{0,2,4,6} = {0,4}");
  EXPECT_EQ((*k)["socle"], "{0,4}");
  EXPECT_TRUE(doc["topology"]["properties"]["indiscrete"].get<bool>());
  EXPECT_FALSE(doc["topology"]["properties"]["t0"].get<bool>());
  EXPECT_FALSE(doc["maps"]["phi"]["injective"].get<bool>());
  EXPECT_TRUE(doc["maps"]["phi_restricts_to_psi"].get<bool>());
  EXPECT_FALSE(doc["listing"]["truncated"].get<bool>());
}

TEST(Report, Z6Analysis) {
  const json doc = analysis_document(load_instance("Z6 | (0)"));
  ASSERT_EQ(doc["spec_l"].size(), 2u);
  EXPECT_EQ(doc["spec_l"][0]["submodule"], "{0,3}");
  EXPECT_EQ(doc["spec_l"][1]["submodule"], "{0,2,4}");
  const auto& p = doc["topology"]["properties"];
  EXPECT_TRUE(p["discrete"].get<bool>());
  EXPECT_TRUE(p["t1"].get<bool>());
  EXPECT_FALSE(p["irreducible"].get<bool>());
  EXPECT_TRUE(doc["maps"]["phi"]["homeomorphism"].get<bool>());
  EXPECT_EQ(doc["components"].size(), 2u);
}

TEST(Report, ListingsAreCapped) {
  AnalyzeOptions options;
  options.max_listed = 2;
  const json doc = analysis_document(load_instance("Z2 | (0),(0)"), options);
  EXPECT_EQ(doc["spec_l_count"], 4);
  EXPECT_EQ(doc["spec_l"].size(), 2u);
  EXPECT_TRUE(doc["listing"]["truncated"].get<bool>());
  EXPECT_TRUE(doc["varieties_truncated"].get<bool>());
  EXPECT_EQ(doc["components"][0]["size"], 4);
  EXPECT_NE(analysis_text(doc).find("point listings cut at 2 entries"), std::string::npos);
}

TEST(Report, JsonTextIsSortedAndTerminated) {
  const std::string text = json_text(analysis_document(load_instance("Z4 | (0)")));
  ASSERT_FALSE(text.empty());
  EXPECT_EQ(text.back(), '\n');
  EXPECT_LT(text.find("\"annihilator\""), text.find("\"components\""));
  EXPECT_LT(text.find("\"components\""), text.find("\"version\""));
}

TEST(Report, WitnessOnlyForFailuresAndOnlyOnRequest) {
  VerificationResult fail;
  fail.id = "P4.1";
  fail.instance = "Z2 | (0)";
  fail.status = Status::Fail;
  fail.witness = "Y = {}";
  fail.witness_confirmed = true;
  EXPECT_FALSE(result_json(fail, false).contains("witness"));
  EXPECT_EQ(result_json(fail, true)["witness"]["text"], "Y = {}");
  VerificationResult pass = fail;
  pass.status = Status::Pass;
  EXPECT_FALSE(result_json(pass, true).contains("witness"));

  const auto doc = verification_document(load_instance("Z2 | (0)"), {fail, pass}, true);
  EXPECT_EQ(doc["summary"]["FAIL"], 1);
  EXPECT_EQ(doc["summary"]["PASS"], 1);
  const std::string text = verification_text(doc);
  EXPECT_NE(text.find("P4.1 FAIL"), std::string::npos);
  EXPECT_NE(text.find("witness: Y = {} (confirmed)"), std::string::npos);
}

TEST(Report, CorpusDocument) {
  const auto report = run_corpus(parse_corpus("seed 3\nresults C3.3 T2.12\nZ5 | (0)\nZ6 | (0)\n"));
  const json doc = corpus_document(report, false);
  EXPECT_EQ(doc["corpus"]["seed"], 3);
  EXPECT_EQ(doc["corpus"]["instance_count"], 2);
  EXPECT_EQ(doc["summary"]["PASS"], 3);
  EXPECT_EQ(doc["summary"]["SKIPPED-HYPOTHESIS"], 1);
  EXPECT_EQ(doc["by_result"]["C3.3"]["skipped_by"][hypothesis::kField], 1);
  EXPECT_EQ(doc["instances"][1]["statuses"]["C3.3"], "SKIPPED-HYPOTHESIS");
  EXPECT_EQ(doc["instances"][1]["details"].size(), 1u);
  EXPECT_EQ(doc["instances"][0]["details"].size(), 0u);
  EXPECT_EQ(json_text(doc), json_text(corpus_document(run_corpus(parse_corpus(
                                "seed 3\nresults C3.3 T2.12\nZ5 | (0)\nZ6 | (0)\n")),
                                                      false)));
  EXPECT_NE(corpus_text(doc).find("C3.3: PASS 1, PASS-BOUNDED 0, FAIL 0, SKIPPED-HYPOTHESIS 1; skipped 1x (R is a field)"),
            std::string::npos);
}
