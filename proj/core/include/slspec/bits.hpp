#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace slspec {

/// Fixed-universe subset: element sets of a module, point sets of a finite space.
using Bits = boost::dynamic_bitset<std::uint64_t>;

Bits bits_from_indices(std::size_t universe, const std::vector<std::size_t>& indices);
std::vector<std::size_t> bits_to_indices(const Bits& bits);

inline Bits full_bits(std::size_t universe) {
  Bits b(universe);
  b.set();
  return b;
}

/// Canonical set order: by cardinality, then lexicographically on the sorted
/// index lists. Two sets of equal size first differ at the smallest element of
/// their symmetric difference; the set holding it sorts first.
bool canonical_less(const Bits& a, const Bits& b);

/// Compact range text, e.g. "0-3,5,7-9"; empty set renders as "".
std::string compact_indices(const Bits& bits);

}  // namespace slspec
