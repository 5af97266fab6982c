#include "slspec/maps.hpp"

#include "slspec/errors.hpp"
#include "slspec/topology.hpp"

#include <stdexcept>
#include <unordered_map>

namespace slspec {

std::string map_label_name(MapLabel label) {
  switch (label) {
    case MapLabel::Phi: return "phi";
    case MapLabel::Psi: return "psi";
    case MapLabel::Rho: return "rho";
    case MapLabel::Custom: return "custom";
  }
  return "?";
}

SpectrumMap::SpectrumMap(FiniteTopology source, FiniteTopology target,
                         std::vector<std::size_t> assignment, MapLabel label, bool degenerate)
    : source_(std::move(source)),
      target_(std::move(target)),
      assignment_(std::move(assignment)),
      label_(label),
      degenerate_(degenerate) {
  if (assignment_.size() != source_.size()) throw SpecError("map assignment does not cover the source");
  for (std::size_t p = 0; p < assignment_.size(); ++p) {
    if (assignment_[p] >= target_.size()) {
      throw SpecError("point " + std::to_string(p) + " maps outside the target");
    }
  }
}

PointSet SpectrumMap::image(const PointSet& set) const {
  PointSet out(target_.size());
  for (auto p = set.find_first(); p != PointSet::npos; p = set.find_next(p)) out.set(assignment_[p]);
  return out;
}

PointSet SpectrumMap::preimage(const PointSet& set) const {
  PointSet out(source_.size());
  for (std::size_t p = 0; p < assignment_.size(); ++p) {
    if (set.test(assignment_[p])) out.set(p);
  }
  return out;
}

namespace {

std::string braces(const PointSet& s) { return "{" + compact_indices(s) + "}"; }

}  // namespace

MapReport map_report(const SpectrumMap& map) {
  MapReport r;
  const auto& src = map.source();
  const auto& tgt = map.target();

  std::unordered_map<std::size_t, std::size_t> first_hit;
  for (std::size_t p = 0; p < src.size(); ++p) {
    auto [it, fresh] = first_hit.emplace(map(p), p);
    if (!fresh && r.injective) {
      r.injective = false;
      r.witnesses.push_back({"injective", {it->second, p}, std::nullopt,
                             "points " + std::to_string(it->second) + " and " + std::to_string(p) +
                                 " both map to " + std::to_string(map(p))});
    }
  }
  for (std::size_t t = 0; t < tgt.size(); ++t) {
    if (!first_hit.contains(t)) {
      r.surjective = false;
      r.witnesses.push_back({"surjective", {t}, std::nullopt, "point " + std::to_string(t) + " is not hit"});
      break;
    }
  }
  for (const auto& c : tgt.closed_sets()) {
    if (!src.is_closed(map.preimage(c))) {
      r.continuous = false;
      r.witnesses.push_back({"continuous", {}, c, "preimage of closed " + braces(c) + " is not closed"});
      break;
    }
  }
  for (const auto& u : src.open_sets()) {
    if (!tgt.is_open(map.image(u))) {
      r.open_map = false;
      r.witnesses.push_back({"open_map", {}, u, "image of open " + braces(u) + " is not open"});
      break;
    }
  }
  for (const auto& c : src.closed_sets()) {
    if (!tgt.is_closed(map.image(c))) {
      r.closed_map = false;
      r.witnesses.push_back({"closed_map", {}, c, "image of closed " + braces(c) + " is not closed"});
      break;
    }
  }
  r.homeomorphism = r.injective && r.surjective && r.continuous && r.open_map;
  if (!r.homeomorphism) {
    std::string why;
    for (const auto& w : r.witnesses) {
      if (w.property == "closed_map") continue;
      why += (why.empty() ? "not " : ", not ") + w.property;
    }
    r.witnesses.push_back({"homeomorphism", {}, std::nullopt, why});
  }
  return r;
}

bool witness_holds(const SpectrumMap& map, const MapWitness& w) {
  const auto& src = map.source();
  const auto& tgt = map.target();
  if (w.property == "injective") {
    return w.points.size() == 2 && w.points[0] != w.points[1] && w.points[0] < src.size() &&
           w.points[1] < src.size() && map(w.points[0]) == map(w.points[1]);
  }
  if (w.property == "surjective") {
    if (w.points.size() != 1 || w.points[0] >= tgt.size()) return false;
    for (std::size_t p = 0; p < src.size(); ++p) {
      if (map(p) == w.points[0]) return false;
    }
    return true;
  }
  if (w.property == "homeomorphism") {
    const MapReport r = map_report(map);
    return !r.homeomorphism;
  }
  if (!w.set) return false;
  if (w.property == "continuous") return tgt.is_closed(*w.set) && !src.is_closed(map.preimage(*w.set));
  if (w.property == "open_map") return src.is_open(*w.set) && !tgt.is_open(map.image(*w.set));
  if (w.property == "closed_map") return src.is_closed(*w.set) && !tgt.is_closed(map.image(*w.set));
  return false;
}

namespace {

std::size_t prime_position(const std::vector<Ideal>& primes, const Ideal& p) {
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (primes[i] == p) return i;
  }
  throw std::logic_error("image " + p.text() + " is not a prime of the quotient ring");
}

}  // namespace

SpectrumMap phi_map(const ModuleSpectra& spectra, const FiniteTopology& sl_space,
                    const FiniteTopology& base_space) {
  const auto& q = spectra.quotient();
  const auto primes = ring_spec(q.ring());
  std::vector<std::size_t> assignment;
  for (std::size_t index : spectra.spec_l()) {
    assignment.push_back(prime_position(primes, q.image(spectra.facts(index).rad_ann)));
  }
  return SpectrumMap(sl_space, base_space, std::move(assignment), MapLabel::Phi, sl_space.empty());
}

SpectrumMap phi_map(const ModuleSpectra& spectra) {
  return phi_map(spectra, build_space(spectra, SpaceKind::SecondaryLike),
                 build_space(spectra, SpaceKind::BaseRingSpec));
}

SpectrumMap psi_map(const ModuleSpectra& spectra, const FiniteTopology& second_space,
                    const FiniteTopology& base_space) {
  const auto& q = spectra.quotient();
  const auto primes = ring_spec(q.ring());
  std::vector<std::size_t> assignment;
  for (std::size_t index : spectra.spec_s()) {
    assignment.push_back(prime_position(primes, q.image(spectra.facts(index).ann)));
  }
  return SpectrumMap(second_space, base_space, std::move(assignment), MapLabel::Psi, second_space.empty());
}

SpectrumMap psi_map(const ModuleSpectra& spectra) {
  return psi_map(spectra, build_space(spectra, SpaceKind::SecondZariski),
                 build_space(spectra, SpaceKind::BaseRingSpec));
}

PointSet preimage_closed(const ModuleSpectra& spectra, const SpectrumMap& map, const Ideal& ideal) {
  if (map.label() != MapLabel::Phi && map.label() != MapLabel::Psi) {
    throw SpecError("preimage_closed needs phi or psi, got " + map_label_name(map.label()));
  }
  if (!spectra.module_annihilator().is_subset_of(ideal)) {
    throw SpecError("ideal " + ideal.text() + " does not contain Ann_R(M) = " +
                    spectra.module_annihilator().text());
  }
  const auto& q = spectra.quotient();
  const PointSet closed = zariski_closed(q.ring(), ring_spec(q.ring()), q.image(ideal));
  PointSet pre = map.preimage(closed);

  const Submodule killed = annihilated_submodule(spectra.module(), ideal);
  const std::size_t index = spectra.lattice().index_of(killed);
  const PointSet expected = map.label() == MapLabel::Phi ? spectra.nu_s(index) : spectra.v_s(index);
  if (pre != expected) {
    throw std::logic_error("preimage of V(" + ideal.text() + ") is {" + compact_indices(pre) +
                           "}, expected {" + compact_indices(expected) + "}");
  }
  return pre;
}

std::optional<std::pair<std::size_t, std::size_t>> injectivity_witness(const ModuleHom& f) {
  // Additive, so injective iff the kernel is zero.
  for (std::size_t m = 1; m < f.source().size(); ++m) {
    if (f(m) == 0) return std::make_pair(std::size_t{0}, m);
  }
  return std::nullopt;
}

SpectrumMap induced_rho(const ModuleSpectra& source, const FiniteTopology& source_space,
                        const ModuleSpectra& target, const FiniteTopology& target_space,
                        const ModuleHom& f) {
  if (!(f.source() == source.module()) || !(f.target() == target.module())) {
    throw SpecError("homomorphism does not match the given modules");
  }
  if (auto w = injectivity_witness(f)) {
    const auto& m = f.source();
    throw SpecError("not a monomorphism: " + m.element_text(w->first) + " and " +
                    m.element_text(w->second) + " both map to " + f.target().element_text(f(w->first)));
  }
  std::vector<std::size_t> assignment;
  for (std::size_t index : source.spec_l()) {
    const Submodule image = f.image(source.submodule(index));
    const auto pos = target.spec_l_position(target.lattice().index_of(image));
    if (!pos) throw std::logic_error("f(" + source.submodule(index).text() + ") = " + image.text() +
                                     " is not in Spec^L of the target");
    assignment.push_back(*pos);
  }
  return SpectrumMap(source_space, target_space, std::move(assignment), MapLabel::Rho, source_space.empty());
}

SpectrumMap induced_rho(const ModuleSpectra& source, const ModuleSpectra& target, const ModuleHom& f) {
  return induced_rho(source, build_space(source, SpaceKind::SecondaryLike), target,
                     build_space(target, SpaceKind::SecondaryLike), f);
}

Submodule preimage_point_spectrum(const ModuleSpectra& source, const ModuleSpectra& target,
                                  const ModuleHom& f, const Submodule& n) {
  const auto index = target.lattice().find(n.bits());
  if (!index || !target.spec_l_position(*index)) {
    throw SpecError(n.text() + " is not in Spec^L of the target");
  }
  const Submodule image = f.image(Submodule::whole(f.source()));
  if (!n.is_subset_of(image)) throw SpecError(n.text() + " is not inside f(M) = " + image.text());
  Submodule pre = f.preimage(n);
  if (!source.spec_l_position(source.lattice().index_of(pre))) {
    throw std::logic_error("f^-1(" + n.text() + ") = " + pre.text() + " is not in Spec^L");
  }
  return pre;
}

}  // namespace slspec
