#include "slspec/corpus.hpp"
#include "slspec/errors.hpp"
#include "slspec/instance.hpp"
#include "slspec/report.hpp"
#include "slspec/theorems.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

enum Exit { kOk = 0, kFail = 1, kUsage = 2, kTooLarge = 3 };

struct Flags {
  bool json = false;
  bool witnesses = false;
  bool over_z = false;
  bool progress = false;
  std::size_t max_elements = slspec::kDefaultMaxElements;
  std::optional<std::size_t> subset_cap;
  std::optional<std::uint64_t> seed;
  std::size_t max_listed = 64;
};

void emit(const nlohmann::json& doc, bool as_json, std::string (*text)(const nlohmann::json&)) {
  std::cout << (as_json ? slspec::json_text(doc) : text(doc));
}

// M plus one more copy of its first factor, when small enough to enumerate maps into.
std::vector<slspec::FiniteModule> default_partners(const slspec::FiniteModule& m, std::size_t max_elements) {
  auto factors = m.factors();
  factors.push_back(factors.front());
  try {
    slspec::FiniteModule bigger(m.ring(), std::move(factors), std::min<std::size_t>(max_elements, 256));
    return {bigger};
  } catch (const slspec::SizeGuardError&) {
    return {};
  }
}

int run_analyze(const std::string& instance, const Flags& f) {
  const auto built = slspec::load_instance(instance, f.over_z, f.max_elements);
  emit(slspec::analysis_document(built, {f.max_listed}), f.json, slspec::analysis_text);
  return kOk;
}

int run_verify(const std::string& instance, std::vector<std::string> ids, const Flags& f) {
  if (ids.empty() || (ids.size() == 1 && ids[0] == "all")) ids = slspec::result_registry();
  for (const auto& id : ids) {
    if (!slspec::is_registered(id)) throw slspec::UnknownResultError(id);
  }
  const auto built = slspec::load_instance(instance, f.over_z, f.max_elements);
  slspec::VerifyOptions options;
  if (f.subset_cap) options.subset_cap = *f.subset_cap;
  if (f.seed) options.seed = *f.seed;
  options.partners = default_partners(built.module, f.max_elements);
  slspec::InstanceVerifier verifier(built.module, options);
  const auto results = verifier.verify_all(ids);
  emit(slspec::verification_document(built, results, f.witnesses), f.json, slspec::verification_text);
  for (const auto& r : results) {
    if (r.status == slspec::Status::Fail) return kFail;
  }
  return kOk;
}

int run_corpus(const std::string& file, const Flags& f) {
  slspec::CorpusSpec spec = file == "default" ? slspec::parse_corpus(slspec::default_corpus_text())
                                              : slspec::load_corpus_file(file);
  if (f.subset_cap) spec.subset_cap = *f.subset_cap;
  if (f.seed) spec.seed = *f.seed;
  if (f.max_elements != slspec::kDefaultMaxElements) spec.max_elements = f.max_elements;
  std::function<void(std::size_t, std::size_t)> progress;
  if (f.progress) {
    progress = [](std::size_t done, std::size_t total) {
      if (done % 50 == 0 || done == total) std::cerr << "  " << done << "/" << total << " instances\n";
    };
  }
  const auto report = slspec::run_corpus(spec, progress);
  emit(slspec::corpus_document(report, f.witnesses), f.json, slspec::corpus_text);
  return report.any_fail() ? kFail : kOk;
}

int run_spec_dump(const std::string& target, bool is_corpus, const Flags& f) {
  nlohmann::json doc;
  if (is_corpus) {
    const auto spec = target == "default" ? slspec::parse_corpus(slspec::default_corpus_text())
                                          : slspec::load_corpus_file(target);
    nlohmann::json lines = nlohmann::json::array();
    for (const auto& s : spec.instances) lines.push_back(slspec::corpus_line(s));
    doc = {{"kind", "corpus-spec"},
           {"seed", spec.seed},
           {"subset_cap", spec.subset_cap},
           {"families", spec.families},
           {"results", spec.results ? nlohmann::json(*spec.results) : nlohmann::json("all")},
           {"instances", lines}};
    if (f.json) {
      std::cout << slspec::json_text(doc);
    } else {
      for (const auto& l : lines) std::cout << l.get<std::string>() << "\n";
    }
    return kOk;
  }
  const auto spec = slspec::parse_instance(target, f.over_z);
  const auto built = slspec::build_instance(spec, f.max_elements);
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& a : built.module.factors()) factors.push_back(a.text());
  doc = {{"kind", "instance"},
         {"input", slspec::print_instance(spec)},
         {"instance", built.module.text()},
         {"ring", built.module.ring().text()},
         {"factors", factors},
         {"module_size", built.module.size()},
         {"notes", built.notes}};
  if (f.json) {
    std::cout << slspec::json_text(doc);
  } else {
    std::cout << built.module.text() << "\n";
    for (const auto& n : built.notes) std::cout << "note: " << n << "\n";
    std::cout << "|M| = " << built.module.size() << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Secondary-like spectra of finite modules: analysis and result verification"};
  app.require_subcommand(1);
  Flags f;
  auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", f.json, "Emit the JSON report");
    sub->add_option("--max-elements", f.max_elements, "Abort when |M| exceeds this")->check(CLI::PositiveNumber);
    sub->add_flag("--over-Z", f.over_z, "Read the module as a finite Z-module");
  };

  std::string instance;
  std::vector<std::string> ids;
  std::string corpus_file = "default";
  bool dump_corpus = false;

  auto* analyze = app.add_subcommand("analyze", "Spectra, SL-topology, maps and flags of one instance");
  analyze->add_option("instance", instance, "\"RING | MODULE\", e.g. \"Z8 | (0)\"")->required();
  analyze->add_option("--max-listed", f.max_listed, "Cap on listed closed sets, base entries and varieties");
  common(analyze);

  auto* verify = app.add_subcommand("verify", "Verify registry results on one instance");
  verify->add_option("instance", instance, "\"RING | MODULE\"")->required();
  verify->add_option("ids", ids, "Result ids, or 'all' (default)");
  common(verify);

  auto* corpus = app.add_subcommand("corpus", "Run the registry over a corpus file");
  corpus->add_option("file", corpus_file, "Corpus file, or 'default' for the built-in corpus");
  corpus->add_flag("--progress", f.progress, "Report progress on stderr");
  corpus->add_flag("--json", f.json, "Emit the JSON report");
  corpus->add_option("--max-elements", f.max_elements, "Size guard for listed instances")->check(CLI::PositiveNumber);

  auto* dump = app.add_subcommand("spec-dump", "Print the canonical form of an instance or a corpus expansion");
  dump->add_option("target", instance, "Instance, or corpus file with --corpus")->required();
  dump->add_flag("--corpus", dump_corpus, "Treat the target as a corpus file ('default' for the built-in one)");
  common(dump);

  for (auto* sub : {verify, corpus}) {
    sub->add_flag("--witnesses", f.witnesses, "Include counterexample payloads");
    sub->add_option("--subset-cap", f.subset_cap, "Full powerset of Spec^L up to this many points");
    sub->add_option("--seed", f.seed, "Seed for subsampling");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*analyze) return run_analyze(instance, f);
    if (*verify) return run_verify(instance, ids, f);
    if (*corpus) return run_corpus(corpus_file, f);
    if (*dump) return run_spec_dump(instance, dump_corpus, f);
  } catch (const slspec::SizeGuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kTooLarge;
  } catch (const slspec::ParseError& e) {
    std::cerr << "parse error at " << e.what() << "\n";
    return kUsage;
  } catch (const slspec::SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
