#pragma once

#include "slspec/module.hpp"
#include "slspec/ring.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace slspec {

/// A parsed "RING | MODULE" line. Factor generators are kept as written except
/// that a generator equal to its modulus is stored as 0.
struct InstanceSpec {
  std::vector<Int> moduli;
  std::vector<std::vector<Int>> factors;
  bool over_z = false;

  friend bool operator==(const InstanceSpec&, const InstanceSpec&) = default;
};

/// ring := "Z" INT ("x" "Z" INT)* ; module := factor ("," factor)* ;
/// factor := "(" INT ("," INT)* ")". Whitespace is ignored. Throws ParseError
/// with the 1-based column of the offending token.
InstanceSpec parse_instance(std::string_view text, bool over_z = false);

/// Canonical "Z6xZ2 | (0,0),(2,1)" form.
std::string print_instance(const InstanceSpec& spec);

struct BuiltInstance {
  FiniteModule module;
  /// Set when an over-Z instance was reduced to a residue ring.
  std::vector<std::string> notes;
};

/// Builds the module. Over Z the module is rewritten as a sum of cyclic groups
/// Z/d and realized over Z mod its exponent. Throws SpecError for a zero
/// module and SizeGuardError past `max_elements`.
BuiltInstance build_instance(const InstanceSpec& spec, std::size_t max_elements = kDefaultMaxElements);

/// parse_instance followed by build_instance.
BuiltInstance load_instance(std::string_view text, bool over_z = false,
                            std::size_t max_elements = kDefaultMaxElements);

/// The InstanceSpec that prints as this module.
InstanceSpec describe(const FiniteModule& module);

}  // namespace slspec
