#include "slspec/ring.hpp"

#include "slspec/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace slspec {

Int squarefree_kernel(Int n) {
  Int kernel = 1;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      kernel *= p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) kernel *= n;
  return kernel;
}

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

bool is_prime_power(Int n) { return n >= 2 && is_prime(squarefree_kernel(n)); }

namespace {

std::string tuple_text(const std::vector<Int>& values) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ',';
    out << values[i];
  }
  out << ')';
  return out.str();
}

void require_same_ring(const Ideal& a, const Ideal& b) {
  if (a.moduli() != b.moduli()) {
    throw SpecError("ideals belong to different rings");
  }
}

}  // namespace

std::string RingElement::text() const {
  if (residues_.size() == 1) return std::to_string(residues_[0]);
  return tuple_text(residues_);
}

FiniteRing::FiniteRing(std::vector<Int> moduli) : moduli_(std::move(moduli)) {
  if (moduli_.empty()) throw SpecError("zero or trivial component ring: empty moduli list");
  for (Int n : moduli_) {
    if (n < 2) throw SpecError("zero or trivial component ring: modulus " + std::to_string(n));
    order_ *= static_cast<std::size_t>(n);
  }
}

RingElement FiniteRing::element(std::size_t index) const {
  std::vector<Int> residues(moduli_.size());
  for (std::size_t i = moduli_.size(); i-- > 0;) {
    const auto n = static_cast<std::size_t>(moduli_[i]);
    residues[i] = static_cast<Int>(index % n);
    index /= n;
  }
  return RingElement(std::move(residues));
}

std::size_t FiniteRing::index_of(const RingElement& r) const {
  std::size_t index = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    index = index * static_cast<std::size_t>(moduli_[i]) + static_cast<std::size_t>(r[i]);
  }
  return index;
}

std::vector<RingElement> FiniteRing::elements() const {
  std::vector<RingElement> out;
  out.reserve(order_);
  for (std::size_t i = 0; i < order_; ++i) out.push_back(element(i));
  return out;
}

RingElement FiniteRing::zero() const { return RingElement(std::vector<Int>(moduli_.size(), 0)); }
RingElement FiniteRing::one() const { return RingElement(std::vector<Int>(moduli_.size(), 1)); }

RingElement FiniteRing::add(const RingElement& a, const RingElement& b) const {
  std::vector<Int> r(moduli_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = (a[i] + b[i]) % moduli_[i];
  return RingElement(std::move(r));
}

RingElement FiniteRing::mul(const RingElement& a, const RingElement& b) const {
  std::vector<Int> r(moduli_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = (a[i] * b[i]) % moduli_[i];
  return RingElement(std::move(r));
}

RingElement FiniteRing::pow(const RingElement& a, std::uint64_t exponent) const {
  RingElement result = one();
  RingElement base = a;
  while (exponent) {
    if (exponent & 1U) result = mul(result, base);
    base = mul(base, base);
    exponent >>= 1U;
  }
  return result;
}

bool FiniteRing::is_field() const { return moduli_.size() == 1 && is_prime(moduli_[0]); }

std::string FiniteRing::text() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (i) out << 'x';
    out << 'Z' << moduli_[i];
  }
  return out.str();
}

FiniteRing build_ring(std::vector<Int> moduli) { return FiniteRing(std::move(moduli)); }

Ideal::Ideal(const FiniteRing& ring, std::vector<Int> generators)
    : moduli_(ring.moduli()), generators_(std::move(generators)) {
  if (generators_.size() != moduli_.size()) {
    throw SpecError("ideal arity " + std::to_string(generators_.size()) +
                    " does not match ring arity " + std::to_string(moduli_.size()));
  }
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const Int n = moduli_[i];
    generators_[i] = std::gcd(((generators_[i] % n) + n) % n, n);
  }
}

Ideal Ideal::zero(const FiniteRing& ring) { return Ideal(ring, ring.moduli()); }

Ideal Ideal::whole(const FiniteRing& ring) {
  return Ideal(ring, std::vector<Int>(ring.arity(), 1));
}

Ideal Ideal::principal(const FiniteRing& ring, const RingElement& r) {
  return Ideal(ring, r.residues());
}

bool Ideal::contains(const RingElement& r) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (r[i] % generators_[i] != 0) return false;
  }
  return true;
}

bool Ideal::is_subset_of(const Ideal& other) const {
  require_same_ring(*this, other);
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i] % other.generators_[i] != 0) return false;
  }
  return true;
}

bool Ideal::is_whole() const {
  return std::all_of(generators_.begin(), generators_.end(), [](Int d) { return d == 1; });
}

bool Ideal::is_zero() const { return generators_ == moduli_; }

std::size_t Ideal::cardinality() const {
  std::size_t size = 1;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    size *= static_cast<std::size_t>(moduli_[i] / generators_[i]);
  }
  return size;
}

std::string Ideal::text() const {
  std::vector<Int> shown(generators_.size());
  for (std::size_t i = 0; i < shown.size(); ++i) {
    shown[i] = generators_[i] == moduli_[i] ? 0 : generators_[i];
  }
  return tuple_text(shown);
}

UnitsAndNilradical units_and_nilradical(const FiniteRing& ring) {
  std::vector<RingElement> units;
  for (std::size_t i = 0; i < ring.order(); ++i) {
    RingElement r = ring.element(i);
    bool unit = true;
    for (std::size_t c = 0; c < ring.arity(); ++c) {
      if (std::gcd(r[c], ring.moduli()[c]) != 1) unit = false;
    }
    if (unit) units.push_back(std::move(r));
  }
  return {std::move(units), ideal_radical(Ideal::zero(ring))};
}

std::vector<RingElement> ring_idempotents(const FiniteRing& ring) {
  std::vector<RingElement> out;
  for (std::size_t i = 0; i < ring.order(); ++i) {
    RingElement r = ring.element(i);
    if (ring.mul(r, r) == r) out.push_back(std::move(r));
  }
  return out;
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  std::vector<Int> g(a.generators().size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    g[i] = std::lcm(a.generators()[i], b.generators()[i]);
  }
  return Ideal(a.ring(), std::move(g));
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  std::vector<Int> g(a.generators().size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    g[i] = std::gcd(a.generators()[i], b.generators()[i]);
  }
  return Ideal(a.ring(), std::move(g));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  std::vector<Int> g(a.generators().size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    g[i] = a.generators()[i] * b.generators()[i];
  }
  return Ideal(a.ring(), std::move(g));
}

// In Z/n with d | n, r^m lies in (d) iff d | r^m, iff squarefree_kernel(d) | r.
Ideal ideal_radical(const Ideal& ideal) {
  std::vector<Int> g(ideal.generators().size());
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = squarefree_kernel(ideal.generators()[i]);
  return Ideal(ideal.ring(), std::move(g));
}

// Ideals of a product ring are products of component ideals; a prime (resp.
// primary) ideal is whole in every component but one, where its generator is
// a prime (resp. a prime power).
bool is_prime_ideal(const Ideal& ideal) {
  std::size_t proper = 0;
  bool prime = true;
  for (Int d : ideal.generators()) {
    if (d == 1) continue;
    ++proper;
    prime = prime && is_prime(d);
  }
  return proper == 1 && prime;
}

bool is_primary_ideal(const Ideal& ideal) {
  std::size_t proper = 0;
  bool primary = true;
  for (Int d : ideal.generators()) {
    if (d == 1) continue;
    ++proper;
    primary = primary && is_prime_power(d);
  }
  return proper == 1 && primary;
}

std::vector<Ideal> all_ideals(const FiniteRing& ring) {
  std::vector<std::vector<Int>> divisors(ring.arity());
  for (std::size_t i = 0; i < ring.arity(); ++i) {
    for (Int d = 1; d <= ring.moduli()[i]; ++d) {
      if (ring.moduli()[i] % d == 0) divisors[i].push_back(d);
    }
  }
  std::vector<Ideal> out;
  std::vector<std::size_t> pick(ring.arity(), 0);
  while (true) {
    std::vector<Int> g(ring.arity());
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = divisors[i][pick[i]];
    out.emplace_back(ring, std::move(g));
    std::size_t pos = ring.arity();
    while (pos > 0) {
      --pos;
      if (++pick[pos] < divisors[pos].size()) break;
      pick[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

std::vector<Ideal> ring_spec(const FiniteRing& ring) {
  std::vector<Ideal> out;
  for (auto& ideal : all_ideals(ring)) {
    if (is_prime_ideal(ideal)) out.push_back(std::move(ideal));
  }
  return out;
}

Ideal prime_set_intersection(const FiniteRing& ring, std::span<const Ideal> ideals) {
  Ideal acc = Ideal::whole(ring);
  for (const auto& ideal : ideals) acc = ideal_intersection(acc, ideal);
  return acc;
}

namespace {

std::vector<Int> quotient_moduli(const Ideal& kernel) {
  std::vector<Int> moduli;
  for (Int d : kernel.generators()) {
    if (d > 1) moduli.push_back(d);
  }
  if (moduli.empty()) throw SpecError("quotient is the zero ring");
  return moduli;
}

}  // namespace

QuotientRing::QuotientRing(const FiniteRing& ring, const Ideal& kernel)
    : source_(ring), kernel_(kernel), quotient_(quotient_moduli(kernel)) {
  if (kernel.moduli() != ring.moduli()) throw SpecError("ideal belongs to a different ring");
  for (std::size_t i = 0; i < kernel.generators().size(); ++i) {
    if (kernel.generators()[i] > 1) kept_.push_back(i);
  }
}

RingElement QuotientRing::image(const RingElement& r) const {
  std::vector<Int> residues(kept_.size());
  for (std::size_t k = 0; k < kept_.size(); ++k) {
    residues[k] = r[kept_[k]] % quotient_.moduli()[k];
  }
  return RingElement(std::move(residues));
}

Ideal QuotientRing::image(const Ideal& ideal) const {
  if (!kernel_.is_subset_of(ideal)) {
    throw SpecError("ideal " + ideal.text() + " does not contain the kernel " + kernel_.text());
  }
  std::vector<Int> g(kept_.size());
  for (std::size_t k = 0; k < kept_.size(); ++k) g[k] = ideal.generators()[kept_[k]];
  return Ideal(quotient_, std::move(g));
}

Ideal QuotientRing::preimage(const Ideal& ideal) const {
  if (ideal.moduli() != quotient_.moduli()) throw SpecError("ideal is not an ideal of the quotient");
  std::vector<Int> g(source_.arity(), 1);
  for (std::size_t k = 0; k < kept_.size(); ++k) g[kept_[k]] = ideal.generators()[k];
  return Ideal(source_, std::move(g));
}

QuotientRing quotient_ring(const FiniteRing& ring, const Ideal& ideal) {
  return QuotientRing(ring, ideal);
}

}  // namespace slspec
