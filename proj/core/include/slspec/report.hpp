#pragma once

#include "slspec/corpus.hpp"
#include "slspec/instance.hpp"
#include "slspec/theorems.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace slspec {

/// Bumped when the document layout changes.
inline constexpr int kReportVersion = 1;

struct AnalyzeOptions {
  /// Cap on listed closed sets, base entries and varieties.
  std::size_t max_listed = 64;
};

/// Spectra, fibers, SL-topology, map reports, module flags and components.
nlohmann::json analysis_document(const BuiltInstance& instance, const AnalyzeOptions& options = {});
nlohmann::json verification_document(const BuiltInstance& instance, const std::vector<VerificationResult>& results,
                                     bool witnesses);
nlohmann::json corpus_document(const CorpusReport& report, bool witnesses);

nlohmann::json result_json(const VerificationResult& result, bool witnesses);

/// Line-oriented renderings of the same documents.
std::string analysis_text(const nlohmann::json& doc);
std::string verification_text(const nlohmann::json& doc);
std::string corpus_text(const nlohmann::json& doc);

/// Key-sorted, two-space indented, trailing newline.
std::string json_text(const nlohmann::json& doc);

}  // namespace slspec
