#pragma once

#include "slspec/module.hpp"

#include <vector>

namespace slspec::detail {

/// S + Rg for a submodule S given as bits and as its element list.
inline Bits extend_by(const FiniteModule& module, const Bits& s,
                      const std::vector<std::size_t>& s_elements, std::size_t g) {
  Bits out = s;
  for (std::size_t t = 0; t < module.scalar_count(); ++t) {
    const std::size_t x = module.act(t, g);
    if (out.test(x)) continue;
    // x + S is a whole coset missing from `out`.
    for (std::size_t y : s_elements) out.set(module.add(x, y));
  }
  return out;
}

inline Bits extend_by(const FiniteModule& module, const Bits& s, std::size_t g) {
  return extend_by(module, s, bits_to_indices(s), g);
}

inline Bits zero_bits(const FiniteModule& module) {
  Bits b(module.size());
  b.set(0);
  return b;
}

}  // namespace slspec::detail
