#pragma once

#include "slspec/space.hpp"
#include "slspec/spectra.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace slspec {

enum class VarietyKind { NuS, NuSStar, VS, VSStar };

std::string variety_name(VarietyKind kind);

struct VarietyResult {
  VarietyKind kind;
  Submodule argument;
  /// Over Spec^L positions for the nu kinds, Spec^s positions for the V kinds.
  PointSet set;
  std::vector<Submodule> points;
};

VarietyResult variety(const ModuleSpectra& spectra, VarietyKind kind, const Submodule& n);

enum class SpaceKind { SecondaryLike, SecondZariski, BaseRingSpec };

/// The SL-space (closed sets nu^s(N), base E_r), the Zariski topology on
/// Spec^s(M) (closed sets V^s(N)) or Spec(R/Ann_R(M)).
FiniteTopology build_space(const ModuleSpectra& spectra, SpaceKind which);

/// Spec(R) with closed sets V(I) and the base D_r. Points follow ring_spec order.
FiniteTopology zariski_on_spec(const FiniteRing& ring);
/// V(I) as a subset of ring_spec(ring).
PointSet zariski_closed(const FiniteRing& ring, const std::vector<Ideal>& primes, const Ideal& ideal);

struct CotopResult {
  bool holds = true;
  /// First submodule pair (canonical order) whose union is not a variety.
  std::optional<std::pair<Submodule, Submodule>> witness;
  /// The quasi-Zariski topology, materialised when the family is union-closed.
  std::optional<FiniteTopology> topology;
};

/// Is {nu^s*(N)} closed under finite unions?
CotopResult is_secondary_cotop(const ModuleSpectra& spectra);
/// Is {V^s*(N)} closed under finite unions?
CotopResult is_cotop(const ModuleSpectra& spectra);

/// H(Y) for Spec^L positions Y.
Submodule socle_sum_H(const ModuleSpectra& spectra, const PointSet& y);

/// Closure in the SL-space, cross-checked against nu^s(H(Y)); throws
/// std::logic_error if the two disagree.
PointSet sl_closure(const ModuleSpectra& spectra, const FiniteTopology& sl_space, const PointSet& y);

/// E_r = Spec^L(M) - nu^s(Ann_M(r)).
PointSet base_E(const ModuleSpectra& spectra, const RingElement& r);
/// Checks that {E_r} generates every open set of the SL-space, E_0 is empty
/// and E_1 is the whole space.
bool verify_base(const ModuleSpectra& spectra, const FiniteTopology& sl_space);

}  // namespace slspec
