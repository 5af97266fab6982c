#pragma once

#include "slspec/module.hpp"
#include "slspec/ring.hpp"
#include "slspec/space.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace slspec {

/// Per-submodule data derived once for the whole lattice.
struct SubmoduleFacts {
  Ideal ann;
  Ideal rad_ann;
  bool second;
  bool secondary;
  /// Lattice index of soc(N).
  std::size_t soc;
  bool in_spec_l;
};

/// The lattice of a module together with Spec^s(M), Spec^L(M), the prime
/// data of R and R/Ann_R(M), and the four variety operators. Spectrum points
/// are addressed by position in the canonical Spec^s / Spec^L listings;
/// varieties are point sets over those positions.
class ModuleSpectra {
 public:
  explicit ModuleSpectra(const FiniteModule& module);

  const FiniteModule& module() const noexcept { return lattice_.module(); }
  const FiniteRing& ring() const noexcept { return module().ring(); }
  const SubmoduleLattice& lattice() const noexcept { return lattice_; }
  const Submodule& submodule(std::size_t index) const { return lattice_[index]; }
  const SubmoduleFacts& facts(std::size_t index) const { return facts_[index]; }

  /// Lattice indices of the points, in canonical order.
  const std::vector<std::size_t>& spec_s() const noexcept { return spec_s_; }
  const std::vector<std::size_t>& spec_l() const noexcept { return spec_l_; }
  std::optional<std::size_t> spec_s_position(std::size_t index) const;
  std::optional<std::size_t> spec_l_position(std::size_t index) const;
  const Submodule& spec_l_point(std::size_t pos) const { return lattice_[spec_l_[pos]]; }
  const Submodule& spec_s_point(std::size_t pos) const { return lattice_[spec_s_[pos]]; }
  /// Spec^L position of each Spec^s point.
  const std::vector<std::size_t>& second_in_spec_l() const noexcept { return second_in_l_; }
  /// The Spec^s points as a subset of Spec^L.
  PointSet spec_s_within_l() const;

  /// Ann_R(M) and R/Ann_R(M).
  const Ideal& module_annihilator() const noexcept { return module().annihilator(); }
  const QuotientRing& quotient() const noexcept { return quotient_; }
  /// Spec(R), canonical order.
  const std::vector<Ideal>& ring_primes() const noexcept { return primes_; }
  /// Spec^L_p(M) as Spec^L positions. Throws SpecError when p is not prime.
  PointSet fiber(const Ideal& p) const;

  /// {K in Spec^L : I is inside sqrt(Ann K)}; nu^s(N) is the case I = Ann N.
  PointSet nu_s_of_ideal(const Ideal& ideal) const;
  PointSet nu_s(std::size_t index) const { return nu_s_of_ideal(facts_[index].ann); }
  /// {K in Spec^L : soc K inside N}.
  PointSet nu_s_star(std::size_t index) const;
  /// Over Spec^s positions: {S : Ann N inside Ann S}.
  PointSet v_s(std::size_t index) const;
  /// Over Spec^s positions: {S : S inside N}.
  PointSet v_s_star(std::size_t index) const;

  /// H(Y): the sum of soc(K) over the Spec^L points in Y; zero when Y is empty.
  Submodule socle_sum(const PointSet& y) const;
  std::size_t socle_sum_index(const PointSet& y) const { return lattice_.index_of(socle_sum(y)); }

  std::vector<Submodule> spec_l_points(const PointSet& y) const;
  /// "{0,2,4},{0,3}" style listing of Spec^L points.
  std::string spec_l_text(const PointSet& y) const;

 private:
  SubmoduleLattice lattice_;
  std::vector<SubmoduleFacts> facts_;
  std::vector<std::size_t> spec_s_;
  std::vector<std::size_t> spec_l_;
  std::vector<std::size_t> second_in_l_;
  std::vector<std::optional<std::size_t>> s_pos_;
  std::vector<std::optional<std::size_t>> l_pos_;
  QuotientRing quotient_;
  std::vector<Ideal> primes_;
  /// Spec^L positions grouped by sqrt(Ann K), keyed by the prime.
  std::map<Ideal, PointSet> radical_classes_;
  /// Spec^L positions grouped by soc(K), keyed by socle lattice index.
  std::vector<std::pair<std::size_t, PointSet>> socle_classes_;
};

enum class SpectrumKind { Second, SecondaryLike, Fiber };

/// A listed spectrum: Spec^s(M), Spec^L(M) or a fiber Spec^L_p(M).
struct SpectrumPointSet {
  FiniteModule parent;
  SpectrumKind kind;
  std::vector<Submodule> points;
};

SpectrumPointSet spec_s(const FiniteModule& module);
SpectrumPointSet spec_L(const FiniteModule& module);
/// Throws SpecError when p is not a prime ideal of the module's ring.
SpectrumPointSet spec_L_fiber(const FiniteModule& module, const Ideal& p);

}  // namespace slspec
