#include "slspec/space.hpp"

#include "slspec/errors.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <unordered_set>

namespace slspec {

namespace {

using SetIndex = std::unordered_set<PointSet>;

void sort_unique(std::vector<PointSet>& family) {
  std::sort(family.begin(), family.end(), canonical_less);
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

}  // namespace

std::optional<std::string> FiniteTopology::axiom_violation(std::size_t points,
                                                          const std::vector<PointSet>& closed_sets) {
  SetIndex index(closed_sets.begin(), closed_sets.end());
  for (const auto& c : closed_sets) {
    if (c.size() != points) return "closed set over the wrong number of points";
  }
  if (!index.contains(PointSet(points))) return "the empty set is not closed";
  if (!index.contains(full_bits(points))) return "the whole space is not closed";
  for (std::size_t i = 0; i < closed_sets.size(); ++i) {
    for (std::size_t j = i + 1; j < closed_sets.size(); ++j) {
      if (!index.contains(closed_sets[i] | closed_sets[j])) {
        return "union of closed sets {" + compact_indices(closed_sets[i]) + "} and {" +
               compact_indices(closed_sets[j]) + "} is not closed";
      }
      if (!index.contains(closed_sets[i] & closed_sets[j])) {
        return "intersection of closed sets {" + compact_indices(closed_sets[i]) + "} and {" +
               compact_indices(closed_sets[j]) + "} is not closed";
      }
    }
  }
  return std::nullopt;
}

FiniteTopology::FiniteTopology(std::size_t points, PointKind kind, std::vector<PointSet> closed_sets,
                               std::vector<BaseEntry> base)
    : points_(points), kind_(kind), closed_(std::move(closed_sets)), base_(std::move(base)) {
  sort_unique(closed_);
  if (auto violation = axiom_violation(points_, closed_)) {
    throw SpecError("not a topology: " + *violation);
  }

  // A point's closure is the intersection of the closed sets containing it,
  // so it is determined by its membership signature over the family.
  std::vector<Bits> signature(points_, Bits(closed_.size()));
  for (std::size_t i = 0; i < closed_.size(); ++i) {
    const auto& c = closed_[i];
    for (auto p = c.find_first(); p != PointSet::npos; p = c.find_next(p)) signature[p].set(i);
  }
  std::unordered_map<Bits, std::size_t> class_of_signature;
  point_class_.resize(points_);
  for (std::size_t p = 0; p < points_; ++p) {
    auto [it, inserted] = class_of_signature.try_emplace(signature[p], class_members_.size());
    if (inserted) {
      class_members_.emplace_back();
      PointSet cl = full_bits(points_);
      for (auto i = signature[p].find_first(); i != Bits::npos; i = signature[p].find_next(i)) {
        cl &= closed_[i];
      }
      class_closures_.push_back(std::move(cl));
    }
    point_class_[p] = it->second;
    class_members_[it->second].push_back(p);
  }

  if (!base_.empty()) {
    for (const auto& entry : base_) {
      if (!is_open(entry.open)) {
        throw SpecError("base element " + entry.label + " is not open");
      }
    }
    for (const auto& open : open_sets()) {
      PointSet covered(points_);
      for (const auto& entry : base_) {
        if (entry.open.is_subset_of(open)) covered |= entry.open;
      }
      if (covered != open) {
        throw SpecError("base does not generate the open set {" + compact_indices(open) + "}");
      }
    }
  }
}

std::vector<PointSet> FiniteTopology::open_sets() const {
  std::vector<PointSet> out;
  out.reserve(closed_.size());
  for (const auto& c : closed_) out.push_back(~c);
  sort_unique(out);
  return out;
}

PointSet FiniteTopology::singleton(std::size_t point) const {
  PointSet s(points_);
  s.set(point);
  return s;
}

bool FiniteTopology::is_closed(const PointSet& set) const {
  return std::binary_search(closed_.begin(), closed_.end(), set, canonical_less);
}

bool FiniteTopology::is_open(const PointSet& set) const { return is_closed(~set); }

PointSet FiniteTopology::closure(const PointSet& set) const {
  PointSet cl = full_set();
  for (const auto& c : closed_) {
    if (set.is_subset_of(c)) cl &= c;
  }
  return cl;
}

bool FiniteTopology::is_irreducible(const PointSet& set) const {
  if (set.none()) return false;
  std::vector<const PointSet*> missing;
  for (const auto& c : closed_) {
    if (!set.is_subset_of(c)) missing.push_back(&c);
  }
  for (std::size_t i = 0; i < missing.size(); ++i) {
    for (std::size_t j = i; j < missing.size(); ++j) {
      if (set.is_subset_of(*missing[i] | *missing[j])) return false;
    }
  }
  return true;
}

std::vector<PointSet> FiniteTopology::irreducible_components() const {
  std::vector<PointSet> irreducible;
  for (const auto& c : closed_) {
    if (is_irreducible(c)) irreducible.push_back(c);
  }
  std::vector<PointSet> out;
  for (const auto& c : irreducible) {
    bool maximal = std::none_of(irreducible.begin(), irreducible.end(), [&](const PointSet& d) {
      return d != c && c.is_subset_of(d);
    });
    if (maximal) out.push_back(c);
  }
  return out;
}

std::vector<std::size_t> FiniteTopology::generic_points(const PointSet& closed) const {
  if (!is_closed(closed)) throw SpecError("generic points requested for a set that is not closed");
  std::vector<std::size_t> out;
  for (auto p = closed.find_first(); p != PointSet::npos; p = closed.find_next(p)) {
    if (point_closure(p) == closed) out.push_back(p);
  }
  return out;
}

TopoProperties FiniteTopology::properties() const {
  TopoProperties props;
  for (const auto& c : closed_) {
    if (c.any() && c.count() != points_ && is_closed(~c)) {
      props.connected = false;
      break;
    }
  }
  props.t0 = class_members_.size() == points_;
  props.t1 = std::all_of(class_closures_.begin(), class_closures_.end(),
                         [](const PointSet& c) { return c.count() == 1; });
  for (const auto& c : closed_) {
    if (is_irreducible(c) && generic_points(c).size() != 1) {
      props.sober = false;
      break;
    }
  }
  props.spectral = props.t0 && props.sober;
  props.quasi_compact = true;
  return props;
}

bool FiniteTopology::is_indiscrete() const { return closed_.size() <= 2; }

bool FiniteTopology::is_discrete() const {
  return std::all_of(class_closures_.begin(), class_closures_.end(),
                     [](const PointSet& c) { return c.count() == 1; });
}

namespace {

// Kolmogorov quotient: points with equal closures form a class; the classes
// are partially ordered by specialisation (x below y when x lies in Cl{y}).
struct ClassStructure {
  std::vector<std::vector<std::size_t>> members;
  std::vector<std::vector<bool>> below;  // below[x][y]: class x in the closure of class y
  std::vector<std::vector<std::size_t>> fingerprint;
};

ClassStructure classes_of(const FiniteTopology& space) {
  ClassStructure s;
  s.members = space.classes();
  const std::size_t k = s.members.size();
  s.below.assign(k, std::vector<bool>(k, false));
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      s.below[x][y] = space.class_closure(y).test(s.members[x].front());
    }
  }
  s.fingerprint.resize(k);
  for (std::size_t x = 0; x < k; ++x) {
    std::size_t up = 0;
    std::size_t down = 0;
    for (std::size_t y = 0; y < k; ++y) {
      up += s.below[x][y];
      down += s.below[y][x];
    }
    s.fingerprint[x] = {s.members[x].size(), space.class_closure(x).count(), up, down};
  }
  return s;
}

}  // namespace

std::optional<std::vector<std::size_t>> find_homeomorphism(const FiniteTopology& a,
                                                           const FiniteTopology& b) {
  if (a.size() != b.size() || a.closed_sets().size() != b.closed_sets().size()) return std::nullopt;
  const ClassStructure ca = classes_of(a);
  const ClassStructure cb = classes_of(b);
  const std::size_t k = ca.members.size();
  if (cb.members.size() != k) return std::nullopt;

  std::vector<std::size_t> assign(k, k);
  std::vector<bool> used(k, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t x) -> bool {
    if (x == k) return true;
    for (std::size_t y = 0; y < k; ++y) {
      if (used[y] || ca.fingerprint[x] != cb.fingerprint[y]) continue;
      bool consistent = ca.below[x][x] == cb.below[y][y];
      for (std::size_t prev = 0; prev < x && consistent; ++prev) {
        consistent = ca.below[prev][x] == cb.below[assign[prev]][y] &&
                     ca.below[x][prev] == cb.below[y][assign[prev]];
      }
      if (!consistent) continue;
      assign[x] = y;
      used[y] = true;
      if (extend(x + 1)) return true;
      used[y] = false;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;

  std::vector<std::size_t> map(a.size());
  for (std::size_t x = 0; x < k; ++x) {
    const auto& from = ca.members[x];
    const auto& to = cb.members[assign[x]];
    for (std::size_t i = 0; i < from.size(); ++i) map[from[i]] = to[i];
  }
  // Image of every closed set of a must be closed in b.
  for (const auto& c : a.closed_sets()) {
    PointSet image(b.size());
    for (auto p = c.find_first(); p != PointSet::npos; p = c.find_next(p)) image.set(map[p]);
    if (!b.is_closed(image)) return std::nullopt;
  }
  return map;
}

}  // namespace slspec
