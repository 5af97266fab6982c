#pragma once

#include "slspec/bits.hpp"
#include "slspec/ring.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace slspec {

inline constexpr std::size_t kDefaultMaxElements = 4096;

/// One flattened coordinate of a module element: component `component` of
/// cyclic factor `factor`, a residue modulo `modulus` (always > 1).
struct Coordinate {
  std::size_t factor;
  std::size_t component;
  Int modulus;
};

/// A maximal ideal of R/Ann_R(M), lifted to R, with a scalar generating it
/// modulo Ann_R(M).
struct MaximalScalar {
  Ideal ideal;
  std::size_t scalar;
};

/// Direct sum of cyclic modules R/A_j. Elements are indexed in mixed radix
/// over the flattened coordinates, first coordinate most significant.
///
/// Cheap to copy: the element tables are shared between copies.
class FiniteModule {
 public:
  /// Throws SpecError for an empty factor list or a whole-ring factor and
  /// SizeGuardError when |M| exceeds `max_elements`.
  FiniteModule(const FiniteRing& ring, std::vector<Ideal> factors,
               std::size_t max_elements = kDefaultMaxElements);

  const FiniteRing& ring() const noexcept { return d_->ring; }
  const std::vector<Ideal>& factors() const noexcept { return d_->factors; }
  const std::vector<Coordinate>& coordinates() const noexcept { return d_->coords; }
  std::size_t size() const noexcept { return d_->size; }

  std::vector<Int> digits(std::size_t m) const;
  std::size_t compose(const std::vector<Int>& digits) const;
  std::size_t add(std::size_t a, std::size_t b) const;
  std::size_t negate(std::size_t a) const;

  /// Ann_R(M).
  const Ideal& annihilator() const noexcept { return d_->annihilator; }
  /// Scalars are representatives of R/Ann_R(M); the action factors through it.
  std::size_t scalar_count() const noexcept { return d_->scalars.size(); }
  const RingElement& scalar(std::size_t s) const { return d_->scalars[s]; }
  std::size_t scalar_index(const RingElement& r) const;
  std::size_t act(std::size_t s, std::size_t m) const { return d_->act[s * d_->size + m]; }
  std::size_t act(const RingElement& r, std::size_t m) const { return act(scalar_index(r), m); }
  const std::vector<MaximalScalar>& maximal_scalars() const noexcept { return d_->maximal; }

  /// Generator list d_i of Ann_R(Rm), one per ring component.
  const std::vector<Int>& element_annihilator(std::size_t m) const {
    return d_->element_ann[m];
  }

  /// Image of the generator of factor j.
  std::size_t factor_generator(std::size_t j) const;
  /// The ring element r with (factor j part of m) = r * generator_j.
  RingElement factor_coefficient(std::size_t m, std::size_t j) const;

  /// "5" for a one-coordinate module, "(1,0,3)" otherwise.
  std::string element_text(std::size_t m) const;
  /// "Z8 | (0),(0)".
  std::string text() const;

  bool same_as(const FiniteModule& other) const noexcept { return d_ == other.d_; }
  friend bool operator==(const FiniteModule& a, const FiniteModule& b) {
    return a.d_ == b.d_ || (a.d_->ring == b.d_->ring && a.d_->factors == b.d_->factors);
  }

 private:
  struct Data {
    Data(const FiniteRing& r, std::vector<Ideal> f)
        : ring(r), factors(std::move(f)), annihilator(Ideal::whole(r)) {}
    FiniteRing ring;
    std::vector<Ideal> factors;
    std::vector<Coordinate> coords;
    std::vector<std::size_t> weights;
    std::size_t size = 1;
    Ideal annihilator;
    std::vector<Int> scalar_moduli;
    std::vector<RingElement> scalars;
    std::vector<std::uint32_t> digit_table;
    std::vector<std::uint32_t> act;
    std::vector<std::vector<Int>> element_ann;
    std::vector<MaximalScalar> maximal;
  };
  std::shared_ptr<const Data> d_;
};

FiniteModule build_module(const FiniteRing& ring, std::vector<Ideal> factors,
                          std::size_t max_elements = kDefaultMaxElements);

/// A submodule as its element set plus a generating list. Lists built by
/// enumeration are pruned of elements spanned by later generators.
class Submodule {
 public:
  Submodule(FiniteModule parent, Bits elements, std::vector<std::size_t> generators);

  static Submodule zero(const FiniteModule& module);
  static Submodule whole(const FiniteModule& module);
  /// The submodule generated by a set of elements; generators are picked
  /// greedily in index order, skipping elements already spanned.
  static Submodule span(const FiniteModule& module, const Bits& elements);

  const FiniteModule& parent() const noexcept { return parent_; }
  const Bits& bits() const noexcept { return bits_; }
  const std::vector<std::size_t>& generators() const noexcept { return gens_; }
  std::size_t size() const { return bits_.count(); }
  bool contains(std::size_t m) const { return bits_.test(m); }
  bool is_zero() const { return bits_.count() == 1; }
  bool is_whole() const { return bits_.all(); }
  bool is_subset_of(const Submodule& other) const { return bits_.is_subset_of(other.bits_); }
  std::vector<std::size_t> elements() const { return bits_to_indices(bits_); }

  /// "{0,2,4,6}".
  std::string text() const;

  friend bool operator==(const Submodule& a, const Submodule& b) { return a.bits_ == b.bits_; }
  /// Canonical order: cardinality, then lexicographic on sorted element lists.
  friend bool operator<(const Submodule& a, const Submodule& b) {
    return canonical_less(a.bits_, b.bits_);
  }

 private:
  FiniteModule parent_;
  Bits bits_;
  std::vector<std::size_t> gens_;
};

/// All submodules of a module, in canonical order (zero first, whole last).
class SubmoduleLattice {
 public:
  SubmoduleLattice(FiniteModule module, std::vector<Submodule> submodules);

  const FiniteModule& module() const noexcept { return module_; }
  std::size_t size() const noexcept { return subs_.size(); }
  const Submodule& operator[](std::size_t i) const { return subs_[i]; }
  const std::vector<Submodule>& submodules() const noexcept { return subs_; }
  auto begin() const { return subs_.begin(); }
  auto end() const { return subs_.end(); }

  std::optional<std::size_t> find(const Bits& elements) const;
  /// Throws SpecError when the set is not a submodule of this lattice.
  std::size_t index_of(const Bits& elements) const;
  std::size_t index_of(const Submodule& n) const { return index_of(n.bits()); }
  std::size_t zero_index() const noexcept { return 0; }
  std::size_t whole_index() const noexcept { return subs_.size() - 1; }

 private:
  FiniteModule module_;
  std::vector<Submodule> subs_;
  std::unordered_map<Bits, std::size_t> index_;
};

/// Every submodule, found by walking covering relations up from zero.
SubmoduleLattice enumerate_submodules(const FiniteModule& module);

/// Rm.
Submodule cyclic_submodule(const FiniteModule& module, std::size_t m);
Submodule submodule_sum(const Submodule& a, const Submodule& b);
Submodule submodule_intersection(const Submodule& a, const Submodule& b);
/// rN.
Submodule scalar_image(const Submodule& n, const RingElement& r);

/// Ann_R(N); the whole ring for N = 0.
Ideal annihilator_of_submodule(const Submodule& n);
/// Ann_M(I) = {m : Im = 0}.
Submodule annihilated_submodule(const FiniteModule& module, const Ideal& ideal);

/// N != 0 and rN is N or 0 for every r.
bool is_second(const Submodule& n);
/// N != 0 and rN = N or r nilpotent on N for every r.
bool is_secondary(const Submodule& n);
/// Sum of the second submodules contained in N, computed as the sum of the
/// socles Ann_N(m) over maximal ideals m.
Submodule socle(const Submodule& n);

std::vector<Submodule> minimal_submodules(const SubmoduleLattice& lattice);
/// Every N satisfies N = Ann_M(Ann_R(N)).
bool is_comultiplication(const SubmoduleLattice& lattice);

/// An R-linear map between two modules over the same ring, stored as its full
/// element table.
class ModuleHom {
 public:
  /// `images[j]` is the image of the generator of source factor j. Throws
  /// SpecError when the rings differ or an image is not killed by A_j.
  ModuleHom(FiniteModule source, FiniteModule target, std::vector<std::size_t> images);

  const FiniteModule& source() const noexcept { return source_; }
  const FiniteModule& target() const noexcept { return target_; }
  const std::vector<std::size_t>& generator_images() const noexcept { return images_; }
  std::size_t operator()(std::size_t m) const { return table_[m]; }

  bool is_injective() const;
  /// f(N) as a submodule of the target.
  Submodule image(const Submodule& n) const;
  /// f^{-1}(N') as a submodule of the source.
  Submodule preimage(const Submodule& n) const;
  /// "[g0->x, g1->y]" in element text.
  std::string text() const;

 private:
  FiniteModule source_;
  FiniteModule target_;
  std::vector<std::size_t> images_;
  std::vector<std::uint32_t> table_;
};

struct HomEnumeration {
  std::vector<ModuleHom> maps;
  /// False when the candidate count exceeded the cap and candidates were sampled.
  bool exhaustive = true;
  /// Number of candidate generator-image tuples (saturating).
  std::uint64_t candidates = 0;
};

/// All homomorphisms M -> M' in lexicographic order of generator images, or a
/// seeded sample of `cap` candidates when there are more. With
/// `injective_only` the list is filtered to monomorphisms.
HomEnumeration enumerate_homomorphisms(const FiniteModule& source, const FiniteModule& target,
                                       bool injective_only, std::size_t cap = 1024,
                                       std::uint64_t seed = 0);

}  // namespace slspec
