#pragma once

#include "slspec/module.hpp"
#include "slspec/ring.hpp"
#include "slspec/space.hpp"

#include <optional>
#include <vector>

namespace slspec {

/// Slow checker that evaluates every notion straight from its definition:
/// scalars range over all of R, the action is recomputed from digits, and
/// ideals are recovered from element sets. It shares nothing with the fast
/// paths except the list of submodules, and exists to re-validate results
/// and counterexamples.
///
/// Point sets are over the checker's own Spec^L / Spec^s listings, which are
/// in canonical submodule order.
class Reference {
 public:
  explicit Reference(const SubmoduleLattice& lattice);

  const SubmoduleLattice& lattice() const noexcept { return lattice_; }
  const FiniteModule& module() const noexcept { return lattice_.module(); }

  std::size_t act(const RingElement& r, std::size_t m) const;
  /// rN as an element set.
  Bits scaled(const Bits& n, const RingElement& r) const;
  /// The ideal whose element set is `elements`; throws std::logic_error when
  /// the set is not an ideal.
  Ideal ideal_of(const Bits& elements) const;

  Ideal ann(std::size_t index) const;
  Ideal ann_of(const Bits& n) const;
  Ideal radical(const Ideal& ideal) const;
  /// sqrt(Ann N), cached.
  Ideal rad_ann(std::size_t index) const;
  /// Ann_M(I) as a lattice index.
  std::size_t ann_m(const Ideal& ideal) const;

  bool second(std::size_t index) const;
  bool secondary(std::size_t index) const;
  /// Lattice index of the sum of second submodules inside N.
  std::size_t socle(std::size_t index) const;
  bool in_spec_l(std::size_t index) const;

  const std::vector<std::size_t>& spec_l() const;
  const std::vector<std::size_t>& spec_s() const;

  PointSet nu_s(std::size_t index) const;
  PointSet nu_s_star(std::size_t index) const;
  PointSet v_s(std::size_t index) const;
  PointSet v_s_star(std::size_t index) const;
  /// Sum of soc(K) over the Spec^L points in Y, as a lattice index.
  std::size_t h(const PointSet& y) const;
  /// Intersection of every nu^s(N) containing Y.
  PointSet sl_closure(const PointSet& y) const;
  /// sqrt(Ann K) for a Spec^L point, as an ideal of R.
  Ideal phi(std::size_t spec_l_pos) const;

  /// Lattice index of N_a + N_b, from the element-wise sum.
  std::size_t sum_index(std::size_t a, std::size_t b) const;

 private:

  SubmoduleLattice lattice_;
  FiniteRing ring_;
  std::vector<RingElement> ring_elements_;
  std::vector<std::pair<Bits, Ideal>> ideals_;
  mutable std::vector<std::optional<Ideal>> ann_;
  mutable std::vector<std::optional<Ideal>> rad_;
  mutable std::vector<std::optional<bool>> second_;
  mutable std::vector<std::optional<bool>> secondary_;
  mutable std::vector<std::optional<std::size_t>> socle_;
  mutable std::optional<std::vector<std::size_t>> spec_l_;
  mutable std::optional<std::vector<std::size_t>> spec_s_;
};

}  // namespace slspec
