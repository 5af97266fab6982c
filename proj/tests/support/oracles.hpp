#pragma once

// Brute-force reference computations over plain integer tuples. Nothing here
// calls into the library except to translate element indices at the end.

#include "slspec/module.hpp"
#include "slspec/ring.hpp"

#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

using slspec::Int;
using Tuple = std::vector<Int>;
using Mask = std::vector<bool>;

/// The module (+)_j R/A_j over R = prod Z/n_i, element tuples over the
/// coordinates (j, i) with A_j's i-th generator d > 1, listed in mixed radix
/// with the first coordinate most significant.
class RawModule {
 public:
  RawModule(std::vector<Int> moduli, std::vector<std::vector<Int>> factor_generators);

  std::size_t size() const { return elements_.size(); }
  const std::vector<Tuple>& elements() const { return elements_; }
  const std::vector<Tuple>& ring_elements() const { return ring_; }
  const std::vector<Int>& moduli() const { return moduli_; }

  std::size_t add(std::size_t a, std::size_t b) const { return add_[a * size() + b]; }
  std::size_t act(std::size_t r, std::size_t m) const { return act_[r * size() + m]; }
  std::size_t ring_mul(std::size_t a, std::size_t b) const;
  std::size_t ring_index(const Tuple& r) const;
  std::size_t index(const Tuple& t) const;

  /// Library element index of oracle element m.
  std::size_t to_library(const slspec::FiniteModule& module, std::size_t m) const;
  slspec::Bits to_library(const slspec::FiniteModule& module, const Mask& set) const;

 private:
  std::vector<Int> moduli_;
  std::vector<std::pair<std::size_t, Int>> coords_;  // (ring component, modulus)
  std::vector<Tuple> elements_;
  std::vector<Tuple> ring_;
  std::vector<std::size_t> add_;
  std::vector<std::size_t> act_;
};

RawModule raw_of(const slspec::FiniteModule& module);

/// Every subset of M that contains 0 and is closed under + and the action.
/// Only for |M| <= 20.
std::vector<Mask> submodules_by_subset_filter(const RawModule& m);

/// Every ideal of R as an element mask, found as the principal ideals Rx.
std::vector<Mask> ring_ideals(const RawModule& m);
/// Ring elements with a power in `ideal`.
Mask radical(const RawModule& m, const Mask& ideal);
bool is_prime(const RawModule& m, const Mask& ideal);

/// Everything about one submodule, from the definitions.
struct SubFacts {
  Mask ann;
  Mask rad_ann;
  bool second = false;
  bool secondary = false;
  std::size_t soc = 0;
  bool in_spec_l = false;
};

/// Definition-level Spec^L machinery over an explicit submodule list.
class Spectrum {
 public:
  Spectrum(const RawModule& m, std::vector<Mask> submodules);

  const std::vector<Mask>& submodules() const { return subs_; }
  const SubFacts& facts(std::size_t i) const { return facts_[i]; }
  /// Submodule indices of the Spec^L and Spec^s points.
  const std::vector<std::size_t>& spec_l() const { return spec_l_; }
  const std::vector<std::size_t>& spec_s() const { return spec_s_; }

  /// Over Spec^L positions.
  std::vector<bool> nu_s(std::size_t n) const;
  std::vector<bool> nu_s_star(std::size_t n) const;
  /// sum of soc(K) over Y (Spec^L positions), as a submodule index.
  std::size_t h(const std::vector<bool>& y) const;
  /// Intersection of every nu_s(N) containing Y.
  std::vector<bool> closure(const std::vector<bool>& y) const;

  std::size_t index_of(const Mask& set) const;
  Mask sum(const Mask& a, const Mask& b) const;

 private:
  Mask ann_of(const Mask& n) const;
  Mask scaled(const Mask& n, std::size_t r) const;

  const RawModule& m_;
  std::vector<Mask> subs_;
  std::vector<SubFacts> facts_;
  std::vector<std::size_t> spec_l_;
  std::vector<std::size_t> spec_s_;
};

bool subset(const Mask& a, const Mask& b);

}  // namespace oracle
