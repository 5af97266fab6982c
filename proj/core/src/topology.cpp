#include "slspec/topology.hpp"

#include "slspec/errors.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace slspec {

std::string variety_name(VarietyKind kind) {
  switch (kind) {
    case VarietyKind::NuS: return "nu_s";
    case VarietyKind::NuSStar: return "nu_s_star";
    case VarietyKind::VS: return "V_s";
    case VarietyKind::VSStar: return "V_s_star";
  }
  return "?";
}

VarietyResult variety(const ModuleSpectra& spectra, VarietyKind kind, const Submodule& n) {
  const std::size_t index = spectra.lattice().index_of(n);
  VarietyResult out{kind, n, PointSet(), {}};
  switch (kind) {
    case VarietyKind::NuS: out.set = spectra.nu_s(index); break;
    case VarietyKind::NuSStar: out.set = spectra.nu_s_star(index); break;
    case VarietyKind::VS: out.set = spectra.v_s(index); break;
    case VarietyKind::VSStar: out.set = spectra.v_s_star(index); break;
  }
  const bool over_l = kind == VarietyKind::NuS || kind == VarietyKind::NuSStar;
  for (auto pos = out.set.find_first(); pos != PointSet::npos; pos = out.set.find_next(pos)) {
    out.points.push_back(over_l ? spectra.spec_l_point(pos) : spectra.spec_s_point(pos));
  }
  return out;
}

namespace {

std::set<Ideal> distinct_annihilators(const ModuleSpectra& spectra) {
  std::set<Ideal> out;
  for (std::size_t i = 0; i < spectra.lattice().size(); ++i) out.insert(spectra.facts(i).ann);
  return out;
}

std::vector<BaseEntry> e_base(const ModuleSpectra& spectra) {
  const auto& module = spectra.module();
  std::vector<BaseEntry> base;
  std::unordered_set<PointSet> seen;
  for (std::size_t s = 0; s < module.scalar_count(); ++s) {
    PointSet e = base_E(spectra, module.scalar(s));
    if (seen.insert(e).second) base.push_back({"E_" + module.scalar(s).text(), std::move(e)});
  }
  return base;
}

}  // namespace

PointSet base_E(const ModuleSpectra& spectra, const RingElement& r) {
  const auto& module = spectra.module();
  const Submodule killed = annihilated_submodule(module, Ideal::principal(module.ring(), r));
  return ~spectra.nu_s_of_ideal(annihilator_of_submodule(killed));
}

FiniteTopology build_space(const ModuleSpectra& spectra, SpaceKind which) {
  switch (which) {
    case SpaceKind::SecondaryLike: {
      std::vector<PointSet> closed;
      for (const auto& ann : distinct_annihilators(spectra)) closed.push_back(spectra.nu_s_of_ideal(ann));
      return FiniteTopology(spectra.spec_l().size(), PointKind::Submodule, std::move(closed), e_base(spectra));
    }
    case SpaceKind::SecondZariski: {
      std::vector<PointSet> closed;
      std::map<Ideal, bool> done;
      for (std::size_t i = 0; i < spectra.lattice().size(); ++i) {
        if (done.emplace(spectra.facts(i).ann, true).second) closed.push_back(spectra.v_s(i));
      }
      return FiniteTopology(spectra.spec_s().size(), PointKind::Submodule, std::move(closed));
    }
    case SpaceKind::BaseRingSpec:
      return zariski_on_spec(spectra.quotient().ring());
  }
  throw SpecError("unknown space kind");
}

PointSet zariski_closed(const FiniteRing& ring, const std::vector<Ideal>& primes, const Ideal& ideal) {
  if (ideal.moduli() != ring.moduli()) throw SpecError("ideal over a different ring");
  PointSet out(primes.size());
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (ideal.is_subset_of(primes[i])) out.set(i);
  }
  return out;
}

FiniteTopology zariski_on_spec(const FiniteRing& ring) {
  const auto primes = ring_spec(ring);
  std::vector<PointSet> closed;
  for (const auto& ideal : all_ideals(ring)) closed.push_back(zariski_closed(ring, primes, ideal));
  std::vector<BaseEntry> base;
  std::unordered_set<PointSet> seen;
  for (std::size_t i = 0; i < ring.order(); ++i) {
    const RingElement r = ring.element(i);
    PointSet d = ~zariski_closed(ring, primes, Ideal::principal(ring, r));
    if (seen.insert(d).second) base.push_back({"D_" + r.text(), std::move(d)});
  }
  return FiniteTopology(primes.size(), PointKind::Ideal, std::move(closed), std::move(base));
}

namespace {

template <typename VarietyFn>
CotopResult union_closure(const ModuleSpectra& spectra, std::size_t points, VarietyFn variety_of) {
  const auto& lattice = spectra.lattice();
  std::vector<PointSet> family;
  std::vector<std::size_t> first_arg;
  std::unordered_map<PointSet, std::size_t> index;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    PointSet v = variety_of(i);
    if (index.emplace(v, family.size()).second) {
      family.push_back(std::move(v));
      first_arg.push_back(i);
    }
  }
  CotopResult out;
  for (std::size_t a = 0; a < family.size() && out.holds; ++a) {
    for (std::size_t b = a + 1; b < family.size(); ++b) {
      if (!index.contains(family[a] | family[b])) {
        out.holds = false;
        out.witness.emplace(lattice[first_arg[a]], lattice[first_arg[b]]);
        break;
      }
    }
  }
  if (out.holds) out.topology.emplace(points, PointKind::Submodule, family);
  return out;
}

}  // namespace

CotopResult is_secondary_cotop(const ModuleSpectra& spectra) {
  return union_closure(spectra, spectra.spec_l().size(), [&](std::size_t i) { return spectra.nu_s_star(i); });
}

CotopResult is_cotop(const ModuleSpectra& spectra) {
  return union_closure(spectra, spectra.spec_s().size(), [&](std::size_t i) { return spectra.v_s_star(i); });
}

Submodule socle_sum_H(const ModuleSpectra& spectra, const PointSet& y) { return spectra.socle_sum(y); }

PointSet sl_closure(const ModuleSpectra& spectra, const FiniteTopology& sl_space, const PointSet& y) {
  PointSet cl = sl_space.closure(y);
  PointSet formula = spectra.nu_s_of_ideal(annihilator_of_submodule(spectra.socle_sum(y)));
  if (cl != formula) {
    throw std::logic_error("closure {" + compact_indices(cl) + "} differs from nu_s(H(Y)) = {" +
                           compact_indices(formula) + "}");
  }
  return cl;
}

bool verify_base(const ModuleSpectra& spectra, const FiniteTopology& sl_space) {
  const auto& ring = spectra.ring();
  if (base_E(spectra, ring.zero()).any()) return false;
  if (!base_E(spectra, ring.one()).all()) return false;
  std::vector<PointSet> base;
  for (const auto& entry : e_base(spectra)) base.push_back(entry.open);
  for (const auto& open : sl_space.open_sets()) {
    PointSet covered(open.size());
    for (const auto& e : base) {
      if (!sl_space.is_open(e)) return false;
      if (e.is_subset_of(open)) covered |= e;
    }
    if (covered != open) return false;
  }
  return true;
}

}  // namespace slspec
