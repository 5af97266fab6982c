#include "slspec/errors.hpp"
#include "slspec/module.hpp"
#include "module_detail.hpp"

#include <algorithm>
#include <numeric>

namespace slspec {

SubmoduleLattice::SubmoduleLattice(FiniteModule module, std::vector<Submodule> submodules)
    : module_(std::move(module)), subs_(std::move(submodules)) {
  std::sort(subs_.begin(), subs_.end());
  index_.reserve(subs_.size());
  for (std::size_t i = 0; i < subs_.size(); ++i) {
    if (!index_.emplace(subs_[i].bits(), i).second) throw SpecError("duplicate submodule in lattice");
  }
}

std::optional<std::size_t> SubmoduleLattice::find(const Bits& elements) const {
  auto it = index_.find(elements);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t SubmoduleLattice::index_of(const Bits& elements) const {
  if (auto i = find(elements)) return *i;
  throw SpecError("not a submodule of " + module_.text() + ": {" + compact_indices(elements) + "}");
}

namespace {

// Drops chain generators already spanned by later ones.
std::vector<std::size_t> prune_generators(const FiniteModule& module,
                                          const std::vector<std::size_t>& chain) {
  Bits cur = detail::zero_bits(module);
  std::vector<std::size_t> kept;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    if (cur.test(*it)) continue;
    kept.push_back(*it);
    cur = detail::extend_by(module, cur, *it);
  }
  std::reverse(kept.begin(), kept.end());
  return kept;
}

}  // namespace

SubmoduleLattice enumerate_submodules(const FiniteModule& module) {
  const std::size_t n = module.size();
  const auto& maximal = module.maximal_scalars();

  std::vector<Bits> found{detail::zero_bits(module)};
  std::vector<std::vector<std::size_t>> chains{{}};
  std::unordered_map<Bits, std::size_t> index{{found[0], 0}};

  // Every submodule sits at the top of a composition series from 0, and each
  // step X < X + Rm is a cover exactly when m(max ideal) lies in X.
  for (std::size_t head = 0; head < found.size(); ++head) {
    const Bits x = found[head];
    const std::vector<std::size_t> x_elements = bits_to_indices(x);
    Bits seen = x;
    for (std::size_t m = 0; m < n; ++m) {
      if (seen.test(m)) continue;
      const bool simple_step = std::any_of(maximal.begin(), maximal.end(), [&](const MaximalScalar& p) {
        return x.test(module.act(p.scalar, m));
      });
      if (!simple_step) continue;
      Bits y = detail::extend_by(module, x, x_elements, m);
      // Any other element of y generates the same cover over x.
      seen |= y;
      if (index.contains(y)) continue;
      index.emplace(y, found.size());
      auto chain = chains[head];
      chain.push_back(m);
      found.push_back(std::move(y));
      chains.push_back(std::move(chain));
    }
  }

  std::vector<Submodule> subs;
  subs.reserve(found.size());
  for (std::size_t i = 0; i < found.size(); ++i) {
    subs.emplace_back(module, std::move(found[i]), prune_generators(module, chains[i]));
  }
  return SubmoduleLattice(module, std::move(subs));
}

std::vector<Submodule> minimal_submodules(const SubmoduleLattice& lattice) {
  // A minimal submodule is R/m for a maximal ideal m, i.e. has prime order.
  std::vector<Submodule> out;
  for (const auto& s : lattice) {
    if (is_prime(static_cast<Int>(s.size()))) out.push_back(s);
  }
  return out;
}

bool is_comultiplication(const SubmoduleLattice& lattice) {
  const auto& module = lattice.module();
  return std::all_of(lattice.begin(), lattice.end(), [&](const Submodule& n) {
    return annihilated_submodule(module, annihilator_of_submodule(n)) == n;
  });
}

}  // namespace slspec
