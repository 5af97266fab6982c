#include "slspec/spectra.hpp"

#include "slspec/errors.hpp"

#include <algorithm>
#include <map>

namespace slspec {

ModuleSpectra::ModuleSpectra(const FiniteModule& module)
    : lattice_(enumerate_submodules(module)),
      quotient_(module.ring(), module.annihilator()),
      primes_(ring_spec(module.ring())) {
  facts_.reserve(lattice_.size());
  std::map<Ideal, Ideal> radicals;
  for (const auto& n : lattice_) {
    Ideal ann = annihilator_of_submodule(n);
    auto it = radicals.find(ann);
    if (it == radicals.end()) it = radicals.emplace(ann, ideal_radical(ann)).first;
    const bool second = is_second(n);
    const bool secondary = second || is_secondary(n);
    const std::size_t soc = lattice_.index_of(socle(n));
    facts_.push_back({std::move(ann), it->second, second, secondary, soc, false});
  }
  s_pos_.assign(lattice_.size(), std::nullopt);
  l_pos_.assign(lattice_.size(), std::nullopt);
  std::map<std::size_t, PointSet> by_socle;
  for (std::size_t i = 0; i < lattice_.size(); ++i) {
    auto& f = facts_[i];
    f.in_spec_l = f.secondary && facts_[f.soc].ann == f.rad_ann;
    if (f.second) {
      s_pos_[i] = spec_s_.size();
      spec_s_.push_back(i);
    }
    if (f.in_spec_l) {
      l_pos_[i] = spec_l_.size();
      spec_l_.push_back(i);
    }
  }
  for (std::size_t s : spec_s_) second_in_l_.push_back(*l_pos_[s]);
  for (std::size_t pos = 0; pos < spec_l_.size(); ++pos) {
    const auto& f = facts_[spec_l_[pos]];
    auto& cls = radical_classes_.try_emplace(f.rad_ann, PointSet(spec_l_.size())).first->second;
    cls.set(pos);
    auto& soc_cls = by_socle.try_emplace(f.soc, PointSet(spec_l_.size())).first->second;
    soc_cls.set(pos);
  }
  socle_classes_.assign(by_socle.begin(), by_socle.end());
}

std::optional<std::size_t> ModuleSpectra::spec_s_position(std::size_t index) const {
  return s_pos_.at(index);
}

std::optional<std::size_t> ModuleSpectra::spec_l_position(std::size_t index) const {
  return l_pos_.at(index);
}

PointSet ModuleSpectra::spec_s_within_l() const {
  PointSet out(spec_l_.size());
  for (std::size_t pos : second_in_l_) out.set(pos);
  return out;
}

PointSet ModuleSpectra::fiber(const Ideal& p) const {
  if (p.moduli() != ring().moduli()) throw SpecError("ideal over a different ring");
  if (!is_prime_ideal(p)) throw SpecError("fiber requested over " + p.text() + ", which is not prime");
  auto it = radical_classes_.find(p);
  if (it == radical_classes_.end()) return PointSet(spec_l_.size());
  return it->second;
}

PointSet ModuleSpectra::nu_s_of_ideal(const Ideal& ideal) const {
  PointSet out(spec_l_.size());
  for (const auto& [prime, points] : radical_classes_) {
    if (ideal.is_subset_of(prime)) out |= points;
  }
  return out;
}

PointSet ModuleSpectra::nu_s_star(std::size_t index) const {
  PointSet out(spec_l_.size());
  const Bits& n = lattice_[index].bits();
  for (const auto& [soc, points] : socle_classes_) {
    if (lattice_[soc].bits().is_subset_of(n)) out |= points;
  }
  return out;
}

PointSet ModuleSpectra::v_s(std::size_t index) const {
  PointSet out(spec_s_.size());
  const Ideal& ann = facts_[index].ann;
  for (std::size_t pos = 0; pos < spec_s_.size(); ++pos) {
    if (ann.is_subset_of(facts_[spec_s_[pos]].ann)) out.set(pos);
  }
  return out;
}

PointSet ModuleSpectra::v_s_star(std::size_t index) const {
  PointSet out(spec_s_.size());
  const Bits& n = lattice_[index].bits();
  for (std::size_t pos = 0; pos < spec_s_.size(); ++pos) {
    if (lattice_[spec_s_[pos]].bits().is_subset_of(n)) out.set(pos);
  }
  return out;
}

Submodule ModuleSpectra::socle_sum(const PointSet& y) const {
  if (y.size() != spec_l_.size()) throw SpecError("point set over the wrong spectrum");
  Submodule h = Submodule::zero(module());
  for (auto pos = y.find_first(); pos != PointSet::npos; pos = y.find_next(pos)) {
    const auto& soc = lattice_[facts_[spec_l_[pos]].soc];
    if (!soc.is_subset_of(h)) h = submodule_sum(h, soc);
  }
  return h;
}

std::vector<Submodule> ModuleSpectra::spec_l_points(const PointSet& y) const {
  std::vector<Submodule> out;
  for (auto pos = y.find_first(); pos != PointSet::npos; pos = y.find_next(pos)) {
    out.push_back(spec_l_point(pos));
  }
  return out;
}

std::string ModuleSpectra::spec_l_text(const PointSet& y) const {
  std::string out;
  for (auto pos = y.find_first(); pos != PointSet::npos; pos = y.find_next(pos)) {
    if (!out.empty()) out += ',';
    out += spec_l_point(pos).text();
  }
  return out;
}

namespace {

std::vector<Submodule> points_of(const ModuleSpectra& sp, const std::vector<std::size_t>& indices) {
  std::vector<Submodule> out;
  out.reserve(indices.size());
  for (std::size_t i : indices) out.push_back(sp.submodule(i));
  return out;
}

}  // namespace

SpectrumPointSet spec_s(const FiniteModule& module) {
  ModuleSpectra sp(module);
  return {module, SpectrumKind::Second, points_of(sp, sp.spec_s())};
}

SpectrumPointSet spec_L(const FiniteModule& module) {
  ModuleSpectra sp(module);
  return {module, SpectrumKind::SecondaryLike, points_of(sp, sp.spec_l())};
}

SpectrumPointSet spec_L_fiber(const FiniteModule& module, const Ideal& p) {
  ModuleSpectra sp(module);
  return {module, SpectrumKind::Fiber, sp.spec_l_points(sp.fiber(p))};
}

}  // namespace slspec
