#pragma once

#include "slspec/instance.hpp"
#include "slspec/theorems.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace slspec {

struct CorpusSpec {
  std::uint64_t seed = 0;
  std::size_t subset_cap = 12;
  /// Size guard for explicitly listed instances.
  std::size_t max_elements = kDefaultMaxElements;
  /// Result filter; nullopt runs the whole registry.
  std::optional<std::vector<std::string>> results;
  /// The family directives, as written, for the report echo.
  std::vector<std::string> families;
  /// Expanded instances in corpus order, duplicates removed.
  std::vector<InstanceSpec> instances;
};

/// Every cyclic module R/(g) over Z mod n for 2 <= n <= max_n.
std::vector<InstanceSpec> cyclic_family(Int max_n);
/// Every module over Z mod p^k (p^k <= max_elements) with at most
/// `max_factors` cyclic factors and at most `max_elements` elements.
std::vector<InstanceSpec> prime_power_family(Int max_elements, std::size_t max_factors);
/// Every module over Z mod a x Z mod b (2 <= a <= b, ab <= max_ring) with at
/// most `max_factors` cyclic factors and at most `max_elements` elements.
std::vector<InstanceSpec> ring_pair_family(Int max_ring, Int max_elements, std::size_t max_factors);

/// Line-oriented corpus file:
///   seed N | subset-cap N | max-elements N | results all | results ID...
///   cyclic MAX_N | prime-power MAX_ELEMENTS MAX_FACTORS
///   ring-pairs MAX_RING MAX_ELEMENTS MAX_FACTORS
///   RING | MODULE        (optionally prefixed by over-Z)
/// '#' starts a comment. Throws ParseError; the message names the line.
CorpusSpec parse_corpus(std::string_view text);
CorpusSpec load_corpus_file(const std::string& path);

/// An instance line as a corpus file writes it: print_instance, with an
/// "over-Z " prefix for over-Z instances.
std::string corpus_line(const InstanceSpec& spec);

/// The shipped default corpus text.
const std::string& default_corpus_text();

struct InstanceOutcome {
  std::string instance;
  std::vector<std::string> notes;
  std::vector<VerificationResult> results;
  /// Set when the instance could not be built (size guard).
  std::optional<std::string> error;
};

struct CorpusReport {
  std::uint64_t seed = 0;
  std::size_t subset_cap = 0;
  std::vector<std::string> families;
  std::vector<std::string> ids;
  std::vector<InstanceOutcome> instances;

  std::size_t count(Status status) const;
  bool any_fail() const { return count(Status::Fail) > 0; }
};

/// Up to three corpus modules over the same ring as `module` with at least as
/// many elements, smallest first, used as monomorphism targets.
std::vector<FiniteModule> corpus_partners(const FiniteModule& module, const std::vector<FiniteModule>& corpus);

/// Runs the filtered registry over every instance in corpus order. `progress`
/// is called after each instance with (done, total).
CorpusReport run_corpus(const CorpusSpec& spec,
                        const std::function<void(std::size_t, std::size_t)>& progress = {});

}  // namespace slspec
