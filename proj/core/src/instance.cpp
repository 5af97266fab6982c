#include "slspec/instance.hpp"

#include "slspec/errors.hpp"

#include <cctype>
#include <limits>
#include <numeric>

namespace slspec {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  InstanceSpec run(bool over_z) {
    InstanceSpec spec;
    spec.over_z = over_z;
    skip_space();
    if (at_end()) fail("empty instance");
    parse_ring(spec);
    expect('|', "expected '|' between ring and module");
    parse_module(spec);
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return spec;
  }

 private:
  void parse_ring(InstanceSpec& spec) {
    for (;;) {
      expect('Z', "expected 'Z' to start a ring component");
      skip_space();
      const std::size_t col = column();
      const Int n = integer();
      if (n < 2) fail_at(col, "ring modulus must be at least 2, got " + std::to_string(n));
      spec.moduli.push_back(n);
      skip_space();
      if (peek() != 'x') break;
      ++pos_;
    }
  }

  void parse_module(InstanceSpec& spec) {
    for (;;) {
      skip_space();
      const std::size_t start = column();
      expect('(', "expected '(' to start a factor");
      std::vector<Int> gens;
      for (;;) {
        skip_space();
        const std::size_t col = column();
        const Int g = integer();
        const std::size_t i = gens.size();
        if (i >= spec.moduli.size()) {
          fail_at(col, "factor has more generators than the ring's " + std::to_string(spec.moduli.size()) +
                           " components");
        }
        const Int n = spec.moduli[i];
        if (g != 0 && n % g != 0) {
          fail_at(col, "generator " + std::to_string(g) + " does not divide modulus " + std::to_string(n));
        }
        gens.push_back(g == n ? 0 : g);
        skip_space();
        if (peek() != ',') break;
        ++pos_;
      }
      if (gens.size() != spec.moduli.size()) {
        fail_at(start, "factor has " + std::to_string(gens.size()) + " generators, ring has " +
                           std::to_string(spec.moduli.size()) + " components");
      }
      expect(')', "expected ')' to close a factor");
      bool whole = true;
      for (Int g : gens) whole = whole && g == 1;
      if (whole) fail_at(start, "zero cyclic factor: the ideal is the whole ring");
      spec.factors.push_back(std::move(gens));
      skip_space();
      if (peek() != ',') break;
      ++pos_;
    }
  }

  Int integer() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected an integer");
    const std::size_t col = column();
    Int value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const Int digit = text_[pos_] - '0';
      if (value > (std::numeric_limits<Int>::max() - digit) / 10) fail_at(col, "integer out of range");
      value = value * 10 + digit;
      ++pos_;
    }
    return value;
  }

  void expect(char c, const std::string& message) {
    skip_space();
    if (peek() != c) fail(message);
    ++pos_;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  std::size_t column() const { return pos_ + 1; }
  [[noreturn]] void fail(const std::string& message) const { fail_at(column(), message); }
  [[noreturn]] void fail_at(std::size_t col, const std::string& message) const { throw ParseError(col, message); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string tuple(const std::vector<Int>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
  return out + ")";
}

}  // namespace

InstanceSpec parse_instance(std::string_view text, bool over_z) { return Parser(text).run(over_z); }

std::string print_instance(const InstanceSpec& spec) {
  std::string out;
  for (std::size_t i = 0; i < spec.moduli.size(); ++i) out += (i ? "x" : "") + ("Z" + std::to_string(spec.moduli[i]));
  out += " | ";
  for (std::size_t j = 0; j < spec.factors.size(); ++j) out += (j ? "," : "") + tuple(spec.factors[j]);
  return out;
}

BuiltInstance build_instance(const InstanceSpec& spec, std::size_t max_elements) {
  if (spec.factors.empty()) throw SpecError("zero module excluded");
  if (!spec.over_z) {
    FiniteRing ring(spec.moduli);
    std::vector<Ideal> factors;
    for (const auto& gens : spec.factors) {
      std::vector<Int> g(gens);
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] == 0) g[i] = spec.moduli[i];
      }
      factors.emplace_back(ring, std::move(g));
    }
    return {FiniteModule(ring, std::move(factors), max_elements), {}};
  }

  // Each factor splits into cyclic groups Z/d, one per ring component.
  std::vector<Int> orders;
  for (const auto& gens : spec.factors) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Int d = gens[i] == 0 ? spec.moduli[i] : gens[i];
      if (d > 1) orders.push_back(d);
    }
  }
  if (orders.empty()) throw SpecError("zero module excluded");
  Int exponent = 1;
  for (Int d : orders) exponent = std::lcm(exponent, d);
  if (exponent < 2) throw SpecError("zero module excluded");
  FiniteRing ring({exponent});
  std::vector<Ideal> factors;
  for (Int d : orders) factors.emplace_back(ring, std::vector<Int>{d});
  FiniteModule module(ring, std::move(factors), max_elements);
  std::vector<std::string> notes{"over Z: computed over Z" + std::to_string(exponent) + ", the exponent of the module (" +
                                 module.text() + ")"};
  return {std::move(module), std::move(notes)};
}

BuiltInstance load_instance(std::string_view text, bool over_z, std::size_t max_elements) {
  return build_instance(parse_instance(text, over_z), max_elements);
}

InstanceSpec describe(const FiniteModule& module) {
  InstanceSpec spec;
  spec.moduli = module.ring().moduli();
  for (const auto& f : module.factors()) {
    std::vector<Int> g = f.generators();
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] == spec.moduli[i]) g[i] = 0;
    }
    spec.factors.push_back(std::move(g));
  }
  return spec;
}

}  // namespace slspec
