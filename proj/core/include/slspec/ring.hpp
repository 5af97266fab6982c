#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace slspec {

using Int = std::int64_t;

/// Product of the distinct primes dividing n (n >= 1).
Int squarefree_kernel(Int n);
/// True when n = p^a for a prime p and a >= 1.
bool is_prime_power(Int n);
bool is_prime(Int n);

/// Element of a product of residue rings, one reduced residue per component.
class RingElement {
 public:
  RingElement() = default;
  explicit RingElement(std::vector<Int> residues) : residues_(std::move(residues)) {}

  const std::vector<Int>& residues() const noexcept { return residues_; }
  std::size_t arity() const noexcept { return residues_.size(); }
  Int operator[](std::size_t i) const { return residues_[i]; }

  /// "3" for a single component, "(3,1)" otherwise.
  std::string text() const;

  friend auto operator<=>(const RingElement&, const RingElement&) = default;

 private:
  std::vector<Int> residues_;
};

/// Z/n_1 x ... x Z/n_k with every n_i >= 2. Elements are enumerated
/// lexicographically on residues, first component most significant.
class FiniteRing {
 public:
  explicit FiniteRing(std::vector<Int> moduli);

  const std::vector<Int>& moduli() const noexcept { return moduli_; }
  std::size_t arity() const noexcept { return moduli_.size(); }
  std::size_t order() const noexcept { return order_; }

  RingElement element(std::size_t index) const;
  std::size_t index_of(const RingElement& r) const;
  std::vector<RingElement> elements() const;

  RingElement zero() const;
  RingElement one() const;
  RingElement add(const RingElement& a, const RingElement& b) const;
  RingElement mul(const RingElement& a, const RingElement& b) const;
  RingElement pow(const RingElement& a, std::uint64_t exponent) const;

  /// A single component with prime modulus.
  bool is_field() const;

  /// "Z8", "Z6xZ2".
  std::string text() const;

  friend bool operator==(const FiniteRing&, const FiniteRing&) = default;

 private:
  std::vector<Int> moduli_;
  std::size_t order_ = 1;
};

FiniteRing build_ring(std::vector<Int> moduli);

/// Ideal of a product ring: componentwise principal, stored as one generator
/// d_i | n_i per component. d_i = 1 is the whole component, d_i = n_i the zero
/// component. Generators are canonicalised to gcd(g_i, n_i), so equal ideals
/// have equal generator lists.
class Ideal {
 public:
  Ideal(const FiniteRing& ring, std::vector<Int> generators);

  static Ideal zero(const FiniteRing& ring);
  static Ideal whole(const FiniteRing& ring);
  /// rR.
  static Ideal principal(const FiniteRing& ring, const RingElement& r);

  const std::vector<Int>& generators() const noexcept { return generators_; }
  const std::vector<Int>& moduli() const noexcept { return moduli_; }
  FiniteRing ring() const { return FiniteRing(moduli_); }

  bool contains(const RingElement& r) const;
  bool is_subset_of(const Ideal& other) const;
  bool is_whole() const;
  bool is_zero() const;
  std::size_t cardinality() const;

  /// Parenthesised generator tuple; the zero component prints as 0,
  /// e.g. "(2)", "(0)", "(2,1)".
  std::string text() const;

  friend bool operator==(const Ideal&, const Ideal&) = default;
  friend std::strong_ordering operator<=>(const Ideal& a, const Ideal& b) {
    if (auto c = a.moduli_ <=> b.moduli_; c != 0) return c;
    return a.generators_ <=> b.generators_;
  }

 private:
  std::vector<Int> moduli_;
  std::vector<Int> generators_;
};

struct UnitsAndNilradical {
  std::vector<RingElement> units;
  Ideal nilradical;
};

UnitsAndNilradical units_and_nilradical(const FiniteRing& ring);
std::vector<RingElement> ring_idempotents(const FiniteRing& ring);

Ideal ideal_intersection(const Ideal& a, const Ideal& b);
Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_radical(const Ideal& ideal);
bool is_prime_ideal(const Ideal& ideal);
bool is_primary_ideal(const Ideal& ideal);

/// Every ideal of the ring, in canonical (generator-list) order.
std::vector<Ideal> all_ideals(const FiniteRing& ring);
/// Prime ideals in canonical order.
std::vector<Ideal> ring_spec(const FiniteRing& ring);
/// Intersection of a set of ideals; the whole ring when the set is empty.
Ideal prime_set_intersection(const FiniteRing& ring, std::span<const Ideal> ideals);

/// R/I re-expressed as a product of residue rings: component i becomes
/// Z/d_i, and components with d_i = 1 collapse and are dropped.
class QuotientRing {
 public:
  QuotientRing(const FiniteRing& ring, const Ideal& kernel);

  const FiniteRing& source() const noexcept { return source_; }
  const FiniteRing& ring() const noexcept { return quotient_; }
  const Ideal& kernel() const noexcept { return kernel_; }
  /// Indices of source components that survive in the quotient.
  const std::vector<std::size_t>& kept_components() const noexcept { return kept_; }

  RingElement image(const RingElement& r) const;
  /// J/I for an ideal J containing the kernel.
  Ideal image(const Ideal& ideal) const;
  /// The ideal of the source ring corresponding to an ideal of the quotient.
  Ideal preimage(const Ideal& ideal) const;

 private:
  FiniteRing source_;
  Ideal kernel_;
  FiniteRing quotient_;
  std::vector<std::size_t> kept_;
};

/// Rejects I = R with "quotient is the zero ring".
QuotientRing quotient_ring(const FiniteRing& ring, const Ideal& ideal);

}  // namespace slspec
