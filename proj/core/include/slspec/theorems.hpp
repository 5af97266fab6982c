#pragma once

#include "slspec/errors.hpp"
#include "slspec/module.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace slspec {

enum class Status { Pass, PassBounded, Fail, SkippedHypothesis };

/// "PASS", "PASS-BOUNDED", "FAIL", "SKIPPED-HYPOTHESIS".
std::string status_name(Status status);

/// The fixed list of verifiable results, in numbering order.
const std::vector<std::string>& result_registry();
bool is_registered(const std::string& id);

class UnknownResultError : public SpecError {
 public:
  explicit UnknownResultError(const std::string& id);
  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

/// Hypothesis names used in results.
namespace hypothesis {
inline constexpr const char* kPhiSurjective = "phi surjective";
inline constexpr const char* kPsiSurjective = "psi surjective";
inline constexpr const char* kComultiplication = "comultiplication";
inline constexpr const char* kSecondaryCotop = "secondary cotop";
inline constexpr const char* kField = "R is a field";
inline constexpr const char* kFibersSingletons = "every fiber Spec^L_p(M) has exactly one point";
inline constexpr const char* kSecondaryHasMinimal = "every secondary submodule contains a minimal submodule";
inline constexpr const char* kSpectraNonempty = "Spec^s(M) and Spec^L(M) nonempty";
}  // namespace hypothesis

struct VerificationResult {
  std::string id;
  std::string instance;
  Status status = Status::Pass;
  /// Hypotheses consulted by the check, with their truth values.
  std::map<std::string, bool> hypotheses;
  /// Set for SKIPPED-HYPOTHESIS: the unmet hypothesis.
  std::string skipped;
  /// Counterexample text, set for FAIL.
  std::string witness;
  /// For FAIL: whether the definition-level checker reproduces the failure.
  bool witness_confirmed = false;
  /// Side observations (partial hypotheses, logged converses, caps in force).
  std::vector<std::string> notes;
  /// Number of quantified cases evaluated.
  std::uint64_t cases = 0;
};

struct VerifyOptions {
  /// Statements over subsets Y of Spec^L(M) use the full powerset up to this
  /// many points, and a seeded sample beyond it.
  std::size_t subset_cap = 12;
  std::size_t subset_samples = 4096;
  std::uint64_t seed = 0;
  /// Pairs of submodules are exhaustive up to this many pairs, sampled beyond.
  std::uint64_t pair_limit = 1u << 16;
  /// Cap on homomorphism candidates per module pair.
  std::size_t hom_cap = 256;
  /// Further modules over the same ring to use as monomorphism targets.
  std::vector<FiniteModule> partners;
};

/// Verifies registry results on one module. The lattice, spectra, spaces and
/// maps are computed once and shared by every check.
class InstanceVerifier {
 public:
  explicit InstanceVerifier(const FiniteModule& module, VerifyOptions options = {});
  ~InstanceVerifier();
  InstanceVerifier(const InstanceVerifier&) = delete;
  InstanceVerifier& operator=(const InstanceVerifier&) = delete;

  /// Throws UnknownResultError for ids outside the registry.
  VerificationResult verify(const std::string& id);
  std::vector<VerificationResult> verify_all(const std::vector<std::string>& ids);

  struct Impl;

 private:
  std::unique_ptr<Impl> impl_;
};

VerificationResult verify(const FiniteModule& module, const std::string& id,
                          const VerifyOptions& options = {});

}  // namespace slspec
