#pragma once

#include "slspec/module.hpp"
#include "slspec/space.hpp"
#include "slspec/spectra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace slspec {

enum class MapLabel { Phi, Psi, Rho, Custom };

std::string map_label_name(MapLabel label);

/// A point map between two finite spaces. Construction checks that every
/// image is a target point.
class SpectrumMap {
 public:
  SpectrumMap(FiniteTopology source, FiniteTopology target, std::vector<std::size_t> assignment,
              MapLabel label, bool degenerate = false);

  const FiniteTopology& source() const noexcept { return source_; }
  const FiniteTopology& target() const noexcept { return target_; }
  const std::vector<std::size_t>& assignment() const noexcept { return assignment_; }
  std::size_t operator()(std::size_t point) const { return assignment_[point]; }
  MapLabel label() const noexcept { return label_; }
  /// Set when the source space is empty.
  bool degenerate() const noexcept { return degenerate_; }

  PointSet image(const PointSet& set) const;
  PointSet preimage(const PointSet& set) const;

 private:
  FiniteTopology source_;
  FiniteTopology target_;
  std::vector<std::size_t> assignment_;
  MapLabel label_;
  bool degenerate_;
};

/// Counterexample for one failed map property. `points` are source points
/// for "injective" and the missed target point for "surjective"; `set` is
/// the offending closed or open set for the other properties.
struct MapWitness {
  std::string property;
  std::vector<std::size_t> points;
  std::optional<PointSet> set;
  std::string text;
};

struct MapReport {
  bool injective = true;
  bool surjective = true;
  bool continuous = true;
  bool open_map = true;
  bool closed_map = true;
  bool homeomorphism = true;
  std::vector<MapWitness> witnesses;
};

MapReport map_report(const SpectrumMap& map);
/// True when the witness really shows the property failing for `map`.
bool witness_holds(const SpectrumMap& map, const MapWitness& witness);

/// phi: Spec^L(M) -> Spec(R/Ann M), K -> sqrt(Ann K)/Ann M, with the SL-space
/// as source.
SpectrumMap phi_map(const ModuleSpectra& spectra, const FiniteTopology& sl_space,
                    const FiniteTopology& base_space);
SpectrumMap phi_map(const ModuleSpectra& spectra);
/// psi: Spec^s(M) -> Spec(R/Ann M), S -> Ann S/Ann M, from the second-Zariski space.
SpectrumMap psi_map(const ModuleSpectra& spectra, const FiniteTopology& second_space,
                    const FiniteTopology& base_space);
SpectrumMap psi_map(const ModuleSpectra& spectra);

/// Preimage of V(I/Ann M) under phi or psi. Throws SpecError when I does not
/// contain Ann_R(M) or the map is neither phi nor psi, and std::logic_error
/// when the result differs from nu^s(Ann_M(I)) (phi) or V^s(Ann_M(I)) (psi).
PointSet preimage_closed(const ModuleSpectra& spectra, const SpectrumMap& map, const Ideal& ideal);

/// rho: K -> f(K) between the SL-spaces of the source and target of a
/// monomorphism f. Throws SpecError naming two elements with equal image
/// when f is not injective, and std::logic_error when some f(K) falls outside
/// Spec^L of the target.
SpectrumMap induced_rho(const ModuleSpectra& source, const FiniteTopology& source_space,
                        const ModuleSpectra& target, const FiniteTopology& target_space,
                        const ModuleHom& f);
SpectrumMap induced_rho(const ModuleSpectra& source, const ModuleSpectra& target, const ModuleHom& f);

/// f^{-1}(N') for N' in Spec^L(M') inside f(M). Throws SpecError when N' is
/// not a Spec^L point or not inside f(M), std::logic_error when the preimage
/// is not in Spec^L(M).
Submodule preimage_point_spectrum(const ModuleSpectra& source, const ModuleSpectra& target,
                                  const ModuleHom& f, const Submodule& n);

/// Two distinct source elements with the same image, or nullopt when f is injective.
std::optional<std::pair<std::size_t, std::size_t>> injectivity_witness(const ModuleHom& f);

}  // namespace slspec
