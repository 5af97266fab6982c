#include "slspec/module.hpp"

#include "slspec/errors.hpp"
#include "module_detail.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace slspec {

namespace {

std::size_t saturating_product(std::size_t a, std::size_t b) {
  std::size_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) return std::numeric_limits<std::size_t>::max();
  return out;
}

void require_same_parent(const Submodule& a, const Submodule& b) {
  if (!(a.parent() == b.parent())) throw SpecError("submodules of different modules");
}

}  // namespace

FiniteModule::FiniteModule(const FiniteRing& ring, std::vector<Ideal> factors,
                           std::size_t max_elements) {
  if (factors.empty()) throw SpecError("zero module excluded");
  for (const auto& a : factors) {
    if (a.moduli() != ring.moduli()) throw SpecError("factor ideal over a different ring");
    if (a.is_whole()) throw SpecError("zero cyclic factor");
  }
  auto d = std::make_shared<Data>(ring, std::move(factors));
  const std::size_t k = ring.arity();

  for (std::size_t j = 0; j < d->factors.size(); ++j) {
    for (std::size_t i = 0; i < k; ++i) {
      const Int a = d->factors[j].generators()[i];
      if (a > 1) d->coords.push_back({j, i, a});
    }
  }
  std::size_t size = 1;
  for (const auto& c : d->coords) size = saturating_product(size, static_cast<std::size_t>(c.modulus));
  if (size > max_elements) throw SizeGuardError(size, max_elements);
  d->size = size;

  const std::size_t nc = d->coords.size();
  d->weights.assign(nc, 1);
  for (std::size_t c = nc; c-- > 1;) {
    d->weights[c - 1] = d->weights[c] * static_cast<std::size_t>(d->coords[c].modulus);
  }
  d->digit_table.resize(size * nc);
  for (std::size_t m = 0; m < size; ++m) {
    std::size_t rest = m;
    for (std::size_t c = 0; c < nc; ++c) {
      d->digit_table[m * nc + c] = static_cast<std::uint32_t>(rest / d->weights[c]);
      rest %= d->weights[c];
    }
  }

  // Ann_R(M) is generated componentwise by the lcm of the factor moduli.
  d->scalar_moduli.assign(k, 1);
  for (const auto& c : d->coords) {
    d->scalar_moduli[c.component] = std::lcm(d->scalar_moduli[c.component], c.modulus);
  }
  d->annihilator = Ideal(ring, d->scalar_moduli);

  std::size_t scalar_count = 1;
  for (Int e : d->scalar_moduli) scalar_count *= static_cast<std::size_t>(e);
  d->scalars.reserve(scalar_count);
  for (std::size_t s = 0; s < scalar_count; ++s) {
    std::vector<Int> residues(k);
    std::size_t rest = s;
    for (std::size_t i = k; i-- > 0;) {
      const auto e = static_cast<std::size_t>(d->scalar_moduli[i]);
      residues[i] = static_cast<Int>(rest % e);
      rest /= e;
    }
    d->scalars.emplace_back(std::move(residues));
  }

  d->act.resize(scalar_count * size);
  for (std::size_t s = 0; s < scalar_count; ++s) {
    const auto& r = d->scalars[s].residues();
    for (std::size_t m = 0; m < size; ++m) {
      std::size_t out = 0;
      for (std::size_t c = 0; c < nc; ++c) {
        const Int a = d->coords[c].modulus;
        const Int v = d->digit_table[m * nc + c];
        out += static_cast<std::size_t>((r[d->coords[c].component] * v) % a) * d->weights[c];
      }
      d->act[s * size + m] = static_cast<std::uint32_t>(out);
    }
  }

  d->element_ann.assign(size, std::vector<Int>(k, 1));
  for (std::size_t m = 0; m < size; ++m) {
    auto& ann = d->element_ann[m];
    for (std::size_t c = 0; c < nc; ++c) {
      const Int a = d->coords[c].modulus;
      const Int v = d->digit_table[m * nc + c];
      ann[d->coords[c].component] = std::lcm(ann[d->coords[c].component], a / std::gcd(v, a));
    }
  }

  d_ = d;
  for (std::size_t i = 0; i < k; ++i) {
    Int e = d->scalar_moduli[i];
    for (Int p = 2; p <= e; ++p) {
      if (e % p != 0 || !is_prime(p)) continue;
      std::vector<Int> gens(k, 1);
      gens[i] = p;
      std::vector<Int> residues(k);
      for (std::size_t c = 0; c < k; ++c) residues[c] = (c == i ? p : 1) % d->scalar_moduli[c];
      d->maximal.push_back({Ideal(ring, gens), scalar_index(RingElement(residues))});
    }
  }
}

FiniteModule build_module(const FiniteRing& ring, std::vector<Ideal> factors,
                          std::size_t max_elements) {
  return FiniteModule(ring, std::move(factors), max_elements);
}

std::vector<Int> FiniteModule::digits(std::size_t m) const {
  const std::size_t nc = d_->coords.size();
  std::vector<Int> out(nc);
  for (std::size_t c = 0; c < nc; ++c) out[c] = d_->digit_table[m * nc + c];
  return out;
}

std::size_t FiniteModule::compose(const std::vector<Int>& digits) const {
  if (digits.size() != d_->coords.size()) throw SpecError("element has the wrong number of coordinates");
  std::size_t out = 0;
  for (std::size_t c = 0; c < digits.size(); ++c) {
    const Int a = d_->coords[c].modulus;
    out += static_cast<std::size_t>(((digits[c] % a) + a) % a) * d_->weights[c];
  }
  return out;
}

std::size_t FiniteModule::add(std::size_t a, std::size_t b) const {
  const std::size_t nc = d_->coords.size();
  const std::uint32_t* da = &d_->digit_table[a * nc];
  const std::uint32_t* db = &d_->digit_table[b * nc];
  std::size_t out = 0;
  for (std::size_t c = 0; c < nc; ++c) {
    std::uint32_t v = da[c] + db[c];
    const auto mod = static_cast<std::uint32_t>(d_->coords[c].modulus);
    if (v >= mod) v -= mod;
    out += v * d_->weights[c];
  }
  return out;
}

std::size_t FiniteModule::negate(std::size_t a) const {
  const std::size_t nc = d_->coords.size();
  std::size_t out = 0;
  for (std::size_t c = 0; c < nc; ++c) {
    const auto mod = static_cast<std::uint32_t>(d_->coords[c].modulus);
    const std::uint32_t v = d_->digit_table[a * nc + c];
    out += (v == 0 ? 0 : mod - v) * d_->weights[c];
  }
  return out;
}

std::size_t FiniteModule::scalar_index(const RingElement& r) const {
  if (r.arity() != d_->scalar_moduli.size()) throw SpecError("scalar from a different ring");
  std::size_t out = 0;
  for (std::size_t i = 0; i < r.arity(); ++i) {
    const Int e = d_->scalar_moduli[i];
    out = out * static_cast<std::size_t>(e) + static_cast<std::size_t>(((r[i] % e) + e) % e);
  }
  return out;
}

std::size_t FiniteModule::factor_generator(std::size_t j) const {
  std::vector<Int> digits(d_->coords.size(), 0);
  for (std::size_t c = 0; c < digits.size(); ++c) {
    if (d_->coords[c].factor == j) digits[c] = 1;
  }
  return compose(digits);
}

RingElement FiniteModule::factor_coefficient(std::size_t m, std::size_t j) const {
  std::vector<Int> residues(d_->ring.arity(), 0);
  const std::size_t nc = d_->coords.size();
  for (std::size_t c = 0; c < nc; ++c) {
    if (d_->coords[c].factor == j) residues[d_->coords[c].component] = d_->digit_table[m * nc + c];
  }
  return RingElement(std::move(residues));
}

std::string FiniteModule::element_text(std::size_t m) const {
  const std::size_t nc = d_->coords.size();
  if (nc == 1) return std::to_string(d_->digit_table[m]);
  std::ostringstream out;
  out << '(';
  for (std::size_t c = 0; c < nc; ++c) {
    if (c) out << ',';
    out << d_->digit_table[m * nc + c];
  }
  out << ')';
  return out.str();
}

std::string FiniteModule::text() const {
  std::string out = d_->ring.text() + " | ";
  for (std::size_t j = 0; j < d_->factors.size(); ++j) {
    if (j) out += ',';
    out += d_->factors[j].text();
  }
  return out;
}

Submodule::Submodule(FiniteModule parent, Bits elements, std::vector<std::size_t> generators)
    : parent_(std::move(parent)), bits_(std::move(elements)), gens_(std::move(generators)) {
  if (bits_.size() != parent_.size()) throw SpecError("element set over the wrong module");
  if (!bits_.test(0)) throw SpecError("a submodule must contain 0");
}

Submodule Submodule::zero(const FiniteModule& module) {
  return Submodule(module, detail::zero_bits(module), {});
}

Submodule Submodule::whole(const FiniteModule& module) {
  std::vector<std::size_t> gens;
  for (std::size_t j = 0; j < module.factors().size(); ++j) gens.push_back(module.factor_generator(j));
  return Submodule(module, full_bits(module.size()), std::move(gens));
}

Submodule Submodule::span(const FiniteModule& module, const Bits& elements) {
  Bits cur = detail::zero_bits(module);
  std::vector<std::size_t> gens;
  for (auto m = elements.find_first(); m != Bits::npos; m = elements.find_next(m)) {
    if (cur.test(m)) continue;
    gens.push_back(m);
    cur = detail::extend_by(module, cur, m);
  }
  return Submodule(module, std::move(cur), std::move(gens));
}

std::string Submodule::text() const {
  std::string out = "{";
  bool first = true;
  for (auto m = bits_.find_first(); m != Bits::npos; m = bits_.find_next(m)) {
    if (!first) out += ',';
    first = false;
    out += parent_.element_text(m);
  }
  return out + "}";
}

Submodule cyclic_submodule(const FiniteModule& module, std::size_t m) {
  if (m >= module.size()) throw SpecError("element out of range");
  if (m == 0) return Submodule::zero(module);
  return Submodule(module, detail::extend_by(module, detail::zero_bits(module), m), {m});
}

Submodule submodule_sum(const Submodule& a, const Submodule& b) {
  require_same_parent(a, b);
  const auto& module = a.parent();
  Bits cur = a.bits();
  std::vector<std::size_t> gens = a.generators();
  for (std::size_t g : b.generators()) {
    if (cur.test(g)) continue;
    gens.push_back(g);
    cur = detail::extend_by(module, cur, g);
  }
  return Submodule(module, std::move(cur), std::move(gens));
}

Submodule submodule_intersection(const Submodule& a, const Submodule& b) {
  require_same_parent(a, b);
  return Submodule::span(a.parent(), a.bits() & b.bits());
}

Submodule scalar_image(const Submodule& n, const RingElement& r) {
  const auto& module = n.parent();
  const std::size_t s = module.scalar_index(r);
  Bits out(module.size());
  for (auto m = n.bits().find_first(); m != Bits::npos; m = n.bits().find_next(m)) {
    out.set(module.act(s, m));
  }
  std::vector<std::size_t> gens;
  for (std::size_t g : n.generators()) {
    const std::size_t x = module.act(s, g);
    if (x != 0) gens.push_back(x);
  }
  return Submodule(module, std::move(out), std::move(gens));
}

Ideal annihilator_of_submodule(const Submodule& n) {
  const auto& module = n.parent();
  std::vector<Int> gens(module.ring().arity(), 1);
  for (auto m = n.bits().find_first(); m != Bits::npos; m = n.bits().find_next(m)) {
    const auto& ann = module.element_annihilator(m);
    for (std::size_t i = 0; i < gens.size(); ++i) gens[i] = std::lcm(gens[i], ann[i]);
  }
  return Ideal(module.ring(), gens);
}

Submodule annihilated_submodule(const FiniteModule& module, const Ideal& ideal) {
  if (ideal.moduli() != module.ring().moduli()) throw SpecError("ideal over a different ring");
  Bits out(module.size());
  const auto& d = ideal.generators();
  for (std::size_t m = 0; m < module.size(); ++m) {
    const auto& ann = module.element_annihilator(m);
    bool killed = true;
    for (std::size_t i = 0; i < d.size() && killed; ++i) killed = d[i] % ann[i] == 0;
    if (killed) out.set(m);
  }
  return Submodule::span(module, out);
}

namespace {

// rN = N exactly when r acts injectively on the finite set N.
bool acts_injectively(const Submodule& n, std::size_t s) {
  const auto& module = n.parent();
  for (auto m = n.bits().find_next(0); m != Bits::npos; m = n.bits().find_next(m)) {
    if (module.act(s, m) == 0) return false;
  }
  return true;
}

bool scalar_dichotomy(const Submodule& n, const Ideal& absorbing) {
  if (n.is_zero()) return false;
  const auto& module = n.parent();
  for (std::size_t s = 0; s < module.scalar_count(); ++s) {
    if (absorbing.contains(module.scalar(s))) continue;
    if (!acts_injectively(n, s)) return false;
  }
  return true;
}

}  // namespace

bool is_second(const Submodule& n) { return scalar_dichotomy(n, annihilator_of_submodule(n)); }

bool is_secondary(const Submodule& n) {
  return scalar_dichotomy(n, ideal_radical(annihilator_of_submodule(n)));
}

Submodule socle(const Submodule& n) {
  const auto& module = n.parent();
  Bits killed(module.size());
  for (const auto& max : module.maximal_scalars()) {
    for (auto m = n.bits().find_first(); m != Bits::npos; m = n.bits().find_next(m)) {
      if (module.act(max.scalar, m) == 0) killed.set(m);
    }
  }
  return Submodule::span(module, killed);
}

ModuleHom::ModuleHom(FiniteModule source, FiniteModule target, std::vector<std::size_t> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (!(source_.ring() == target_.ring())) throw SpecError("homomorphism between modules over different rings");
  if (images_.size() != source_.factors().size()) throw SpecError("one image per source factor required");
  for (std::size_t j = 0; j < images_.size(); ++j) {
    if (images_[j] >= target_.size()) throw SpecError("generator image out of range");
    const auto& ann = target_.element_annihilator(images_[j]);
    const auto& a = source_.factors()[j].generators();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] % ann[i] != 0) {
        throw SpecError("image " + target_.element_text(images_[j]) + " of generator " +
                        std::to_string(j) + " is not killed by " + source_.factors()[j].text());
      }
    }
  }
  table_.resize(source_.size());
  for (std::size_t m = 0; m < source_.size(); ++m) {
    std::size_t y = 0;
    for (std::size_t j = 0; j < images_.size(); ++j) {
      y = target_.add(y, target_.act(source_.factor_coefficient(m, j), images_[j]));
    }
    table_[m] = static_cast<std::uint32_t>(y);
  }
}

bool ModuleHom::is_injective() const {
  return std::count(table_.begin(), table_.end(), 0u) == 1;
}

Submodule ModuleHom::image(const Submodule& n) const {
  if (!(n.parent() == source_)) throw SpecError("submodule is not in the source module");
  Bits out(target_.size());
  for (auto m = n.bits().find_first(); m != Bits::npos; m = n.bits().find_next(m)) out.set(table_[m]);
  std::vector<std::size_t> gens;
  for (std::size_t g : n.generators()) {
    if (table_[g] != 0) gens.push_back(table_[g]);
  }
  return Submodule(target_, std::move(out), std::move(gens));
}

Submodule ModuleHom::preimage(const Submodule& n) const {
  if (!(n.parent() == target_)) throw SpecError("submodule is not in the target module");
  Bits out(source_.size());
  for (std::size_t m = 0; m < source_.size(); ++m) {
    if (n.contains(table_[m])) out.set(m);
  }
  return Submodule::span(source_, out);
}

std::string ModuleHom::text() const {
  std::string out = "[";
  for (std::size_t j = 0; j < images_.size(); ++j) {
    if (j) out += ", ";
    out += "g" + std::to_string(j) + "->" + target_.element_text(images_[j]);
  }
  return out + "]";
}

HomEnumeration enumerate_homomorphisms(const FiniteModule& source, const FiniteModule& target,
                                       bool injective_only, std::size_t cap, std::uint64_t seed) {
  if (!(source.ring() == target.ring())) throw SpecError("homomorphism between modules over different rings");
  const std::size_t nf = source.factors().size();
  std::vector<std::vector<std::size_t>> choices(nf);
  std::uint64_t total = 1;
  for (std::size_t j = 0; j < nf; ++j) {
    choices[j] = annihilated_submodule(target, source.factors()[j]).elements();
    total = saturating_product(total, choices[j].size());
  }

  HomEnumeration out;
  out.candidates = total;
  std::vector<std::vector<std::size_t>> tuples;
  if (total <= cap) {
    std::vector<std::size_t> pos(nf, 0);
    for (std::uint64_t t = 0; t < total; ++t) {
      std::vector<std::size_t> images(nf);
      for (std::size_t j = 0; j < nf; ++j) images[j] = choices[j][pos[j]];
      tuples.push_back(std::move(images));
      for (std::size_t j = nf; j-- > 0;) {
        if (++pos[j] < choices[j].size()) break;
        pos[j] = 0;
      }
    }
  } else {
    out.exhaustive = false;
    std::set<std::vector<std::size_t>> sample;
    if (source == target) {
      std::vector<std::size_t> identity(nf);
      for (std::size_t j = 0; j < nf; ++j) identity[j] = target.factor_generator(j);
      sample.insert(identity);
    }
    std::mt19937_64 rng(seed);
    // Rejections only come from duplicates, which are rare once total > cap.
    for (std::size_t attempt = 0; sample.size() < cap && attempt < 8 * cap; ++attempt) {
      std::vector<std::size_t> images(nf);
      for (std::size_t j = 0; j < nf; ++j) {
        std::uniform_int_distribution<std::size_t> pick(0, choices[j].size() - 1);
        images[j] = choices[j][pick(rng)];
      }
      sample.insert(std::move(images));
    }
    tuples.assign(sample.begin(), sample.end());
  }
  for (auto& images : tuples) {
    ModuleHom f(source, target, std::move(images));
    if (!injective_only || f.is_injective()) out.maps.push_back(std::move(f));
  }
  return out;
}

}  // namespace slspec
