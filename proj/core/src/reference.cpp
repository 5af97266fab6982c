#include "slspec/reference.hpp"

#include <stdexcept>

namespace slspec {

Reference::Reference(const SubmoduleLattice& lattice)
    : lattice_(lattice),
      ring_(lattice.module().ring()),
      ring_elements_(ring_.elements()),
      ann_(lattice.size()),
      rad_(lattice.size()),
      second_(lattice.size()),
      secondary_(lattice.size()),
      socle_(lattice.size()) {
  for (const auto& ideal : all_ideals(ring_)) {
    Bits members(ring_.order());
    for (std::size_t i = 0; i < ring_elements_.size(); ++i) {
      if (ideal.contains(ring_elements_[i])) members.set(i);
    }
    ideals_.emplace_back(std::move(members), ideal);
  }
}

std::size_t Reference::act(const RingElement& r, std::size_t m) const {
  const auto& coords = module().coordinates();
  std::vector<Int> d = module().digits(m);
  for (std::size_t c = 0; c < coords.size(); ++c) {
    d[c] = (d[c] * r[coords[c].component]) % coords[c].modulus;
  }
  return module().compose(d);
}

Bits Reference::scaled(const Bits& n, const RingElement& r) const {
  Bits out(n.size());
  for (auto m = n.find_first(); m != Bits::npos; m = n.find_next(m)) out.set(act(r, m));
  return out;
}

Ideal Reference::ideal_of(const Bits& elements) const {
  for (const auto& [members, ideal] : ideals_) {
    if (members == elements) return ideal;
  }
  throw std::logic_error("element set is not an ideal");
}

Ideal Reference::ann_of(const Bits& n) const {
  Bits members(ring_.order());
  for (std::size_t i = 0; i < ring_elements_.size(); ++i) {
    bool kills = true;
    for (auto m = n.find_first(); m != Bits::npos && kills; m = n.find_next(m)) kills = act(ring_elements_[i], m) == 0;
    if (kills) members.set(i);
  }
  return ideal_of(members);
}

Ideal Reference::ann(std::size_t index) const {
  if (!ann_[index]) ann_[index] = ann_of(lattice_[index].bits());
  return *ann_[index];
}

Ideal Reference::rad_ann(std::size_t index) const {
  if (!rad_[index]) rad_[index] = radical(ann(index));
  return *rad_[index];
}

Ideal Reference::radical(const Ideal& ideal) const {
  Bits members(ring_.order());
  for (std::size_t i = 0; i < ring_elements_.size(); ++i) {
    RingElement power = ring_elements_[i];
    for (std::size_t k = 1; k <= ring_.order(); ++k) {
      if (ideal.contains(power)) {
        members.set(i);
        break;
      }
      power = ring_.mul(power, ring_elements_[i]);
    }
  }
  return ideal_of(members);
}

std::size_t Reference::ann_m(const Ideal& ideal) const {
  Bits out(module().size());
  for (std::size_t m = 0; m < module().size(); ++m) {
    bool killed = true;
    for (const auto& r : ring_elements_) {
      if (ideal.contains(r) && act(r, m) != 0) {
        killed = false;
        break;
      }
    }
    if (killed) out.set(m);
  }
  return lattice_.index_of(out);
}

bool Reference::second(std::size_t index) const {
  if (!second_[index]) {
    const Bits& n = lattice_[index].bits();
    bool ok = n.count() > 1;
    for (std::size_t i = 0; i < ring_elements_.size() && ok; ++i) {
      const Bits rn = scaled(n, ring_elements_[i]);
      ok = rn == n || rn.count() == 1;
    }
    second_[index] = ok;
  }
  return *second_[index];
}

bool Reference::secondary(std::size_t index) const {
  if (!secondary_[index]) {
    const Bits& n = lattice_[index].bits();
    bool ok = n.count() > 1;
    for (std::size_t i = 0; i < ring_elements_.size() && ok; ++i) {
      Bits power = scaled(n, ring_elements_[i]);
      if (power == n) continue;
      bool nilpotent = false;
      for (std::size_t k = 1; k <= ring_.order(); ++k) {
        if (power.count() == 1) {
          nilpotent = true;
          break;
        }
        power = scaled(power, ring_elements_[i]);
      }
      ok = nilpotent;
    }
    secondary_[index] = ok;
  }
  return *secondary_[index];
}

std::size_t Reference::sum_index(std::size_t a, std::size_t b) const {
  const auto& x = lattice_[a].bits();
  const auto& y = lattice_[b].bits();
  Bits out(x.size());
  for (auto i = x.find_first(); i != Bits::npos; i = x.find_next(i)) {
    for (auto j = y.find_first(); j != Bits::npos; j = y.find_next(j)) out.set(module().add(i, j));
  }
  return lattice_.index_of(out);
}

std::size_t Reference::socle(std::size_t index) const {
  if (!socle_[index]) {
    std::size_t acc = lattice_.zero_index();
    const Bits& n = lattice_[index].bits();
    for (std::size_t j = 0; j < lattice_.size(); ++j) {
      if (lattice_[j].bits().is_subset_of(n) && second(j)) acc = sum_index(acc, j);
    }
    socle_[index] = acc;
  }
  return *socle_[index];
}

bool Reference::in_spec_l(std::size_t index) const {
  return secondary(index) && ann(socle(index)) == rad_ann(index);
}

const std::vector<std::size_t>& Reference::spec_l() const {
  if (!spec_l_) {
    spec_l_.emplace();
    for (std::size_t i = 0; i < lattice_.size(); ++i) {
      if (in_spec_l(i)) spec_l_->push_back(i);
    }
  }
  return *spec_l_;
}

const std::vector<std::size_t>& Reference::spec_s() const {
  if (!spec_s_) {
    spec_s_.emplace();
    for (std::size_t i = 0; i < lattice_.size(); ++i) {
      if (second(i)) spec_s_->push_back(i);
    }
  }
  return *spec_s_;
}

PointSet Reference::nu_s(std::size_t index) const {
  const auto& pts = spec_l();
  PointSet out(pts.size());
  const Ideal a = ann(index);
  for (std::size_t p = 0; p < pts.size(); ++p) {
    if (a.is_subset_of(rad_ann(pts[p]))) out.set(p);
  }
  return out;
}

PointSet Reference::nu_s_star(std::size_t index) const {
  const auto& pts = spec_l();
  PointSet out(pts.size());
  for (std::size_t p = 0; p < pts.size(); ++p) {
    if (lattice_[socle(pts[p])].bits().is_subset_of(lattice_[index].bits())) out.set(p);
  }
  return out;
}

PointSet Reference::v_s(std::size_t index) const {
  const auto& pts = spec_s();
  PointSet out(pts.size());
  const Ideal a = ann(index);
  for (std::size_t p = 0; p < pts.size(); ++p) {
    if (a.is_subset_of(ann(pts[p]))) out.set(p);
  }
  return out;
}

PointSet Reference::v_s_star(std::size_t index) const {
  const auto& pts = spec_s();
  PointSet out(pts.size());
  for (std::size_t p = 0; p < pts.size(); ++p) {
    if (lattice_[pts[p]].bits().is_subset_of(lattice_[index].bits())) out.set(p);
  }
  return out;
}

std::size_t Reference::h(const PointSet& y) const {
  std::size_t acc = lattice_.zero_index();
  for (auto p = y.find_first(); p != PointSet::npos; p = y.find_next(p)) {
    acc = sum_index(acc, socle(spec_l()[p]));
  }
  return acc;
}

PointSet Reference::sl_closure(const PointSet& y) const {
  PointSet out = full_bits(spec_l().size());
  for (std::size_t i = 0; i < lattice_.size(); ++i) {
    PointSet v = nu_s(i);
    if (y.is_subset_of(v)) out &= v;
  }
  return out;
}

Ideal Reference::phi(std::size_t spec_l_pos) const { return rad_ann(spec_l()[spec_l_pos]); }

}  // namespace slspec
