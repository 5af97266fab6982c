#pragma once

#include "slspec/bits.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace slspec {

using PointSet = Bits;

enum class PointKind { Submodule, Ideal };

/// Labelled distinguished open set (E_r or D_r).
struct BaseEntry {
  std::string label;
  PointSet open;
};

struct TopoProperties {
  bool connected = true;
  bool t0 = true;
  bool t1 = true;
  bool sober = true;
  /// Finite spaces satisfy quasi-compactness and the quasi-compact-open
  /// conditions automatically, so spectral reduces to T0 and sober.
  bool spectral = true;
  bool quasi_compact = true;
};

/// A finite topological space given by its family of closed sets over the
/// point indices 0..size()-1. The family is deduplicated and kept in canonical
/// set order; construction checks the closed-set axioms (and the base, when
/// one is supplied) and throws SpecError naming the violation.
class FiniteTopology {
 public:
  FiniteTopology(std::size_t points, PointKind kind, std::vector<PointSet> closed_sets,
                 std::vector<BaseEntry> base = {});

  /// Returns a description of the first violated axiom, or nullopt when the
  /// family is a valid closed-set family (contains the empty and full sets,
  /// closed under pairwise union and intersection).
  static std::optional<std::string> axiom_violation(std::size_t points,
                                                    const std::vector<PointSet>& closed_sets);

  std::size_t size() const noexcept { return points_; }
  bool empty() const noexcept { return points_ == 0; }
  PointKind kind() const noexcept { return kind_; }
  const std::vector<PointSet>& closed_sets() const noexcept { return closed_; }
  const std::vector<BaseEntry>& base() const noexcept { return base_; }
  std::vector<PointSet> open_sets() const;

  PointSet empty_set() const { return PointSet(points_); }
  PointSet full_set() const { return full_bits(points_); }
  PointSet singleton(std::size_t point) const;

  bool is_closed(const PointSet& set) const;
  bool is_open(const PointSet& set) const;
  PointSet closure(const PointSet& set) const;
  /// Closure of a single point.
  const PointSet& point_closure(std::size_t point) const {
    return class_closures_[point_class_[point]];
  }
  /// Points with equal closures form one class (the Kolmogorov quotient).
  std::size_t point_class(std::size_t point) const { return point_class_[point]; }
  const std::vector<std::vector<std::size_t>>& classes() const noexcept { return class_members_; }
  const PointSet& class_closure(std::size_t cls) const { return class_closures_[cls]; }

  /// Nonempty and not covered by two closed sets neither of which covers it.
  bool is_irreducible(const PointSet& set) const;
  /// Maximal irreducible closed sets, in canonical order. Empty for the empty space.
  std::vector<PointSet> irreducible_components() const;
  /// Points whose closure is `closed`. Throws SpecError when `closed` is not closed.
  std::vector<std::size_t> generic_points(const PointSet& closed) const;

  TopoProperties properties() const;

  /// Trivial topology: only the empty and full sets are closed.
  bool is_indiscrete() const;
  bool is_discrete() const;

  friend bool operator==(const FiniteTopology& a, const FiniteTopology& b) {
    return a.points_ == b.points_ && a.closed_ == b.closed_;
  }

 private:
  std::size_t points_;
  PointKind kind_;
  std::vector<PointSet> closed_;
  std::vector<BaseEntry> base_;
  std::vector<std::size_t> point_class_;
  std::vector<std::vector<std::size_t>> class_members_;
  std::vector<PointSet> class_closures_;
};

/// A point bijection a -> b that maps the closed sets of `a` exactly onto the
/// closed sets of `b`, or nullopt when the spaces are not homeomorphic.
std::optional<std::vector<std::size_t>> find_homeomorphism(const FiniteTopology& a,
                                                           const FiniteTopology& b);

}  // namespace slspec
