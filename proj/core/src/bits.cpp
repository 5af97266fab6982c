#include "slspec/bits.hpp"

#include <sstream>

namespace slspec {

Bits bits_from_indices(std::size_t universe, const std::vector<std::size_t>& indices) {
  Bits b(universe);
  for (std::size_t i : indices) b.set(i);
  return b;
}

std::vector<std::size_t> bits_to_indices(const Bits& bits) {
  std::vector<std::size_t> out;
  out.reserve(bits.count());
  for (auto i = bits.find_first(); i != Bits::npos; i = bits.find_next(i)) out.push_back(i);
  return out;
}

bool canonical_less(const Bits& a, const Bits& b) {
  const auto ca = a.count();
  const auto cb = b.count();
  if (ca != cb) return ca < cb;
  if (a.size() != b.size()) return a.size() < b.size();
  const auto first = (a ^ b).find_first();
  if (first == Bits::npos) return false;
  return a.test(first);
}

std::string compact_indices(const Bits& bits) {
  std::ostringstream out;
  bool first = true;
  auto i = bits.find_first();
  while (i != Bits::npos) {
    auto j = i;
    while (j + 1 < bits.size() && bits.test(j + 1)) ++j;
    if (!first) out << ',';
    first = false;
    out << i;
    if (j > i) out << '-' << j;
    i = j + 1 < bits.size() ? bits.find_next(j) : Bits::npos;
  }
  return out.str();
}

}  // namespace slspec
