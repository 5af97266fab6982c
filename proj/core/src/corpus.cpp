#include "slspec/corpus.hpp"

#include "slspec/errors.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace slspec {

namespace {

std::vector<Int> divisors(Int n) {
  std::vector<Int> out;
  for (Int d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

// Nonincreasing tuples (by position in `options`) of 1..max_len options whose
// sizes multiply to at most `limit`.
void multisets(const std::vector<std::pair<std::vector<Int>, Int>>& options, std::size_t max_len, Int limit,
               std::vector<std::vector<Int>>& current, Int size, std::size_t from,
               std::vector<std::vector<std::vector<Int>>>& out) {
  if (!current.empty()) out.push_back(current);
  if (current.size() == max_len) return;
  for (std::size_t i = from; i < options.size(); ++i) {
    const Int s = options[i].second;
    if (size * s > limit) continue;
    current.push_back(options[i].first);
    multisets(options, max_len, limit, current, size * s, i, out);
    current.pop_back();
  }
}

std::vector<InstanceSpec> modules_over(const std::vector<Int>& moduli, Int max_elements, std::size_t max_factors) {
  // Cyclic factors R/(g): one generator per component, size = product of g (0 read as the modulus).
  std::vector<std::pair<std::vector<Int>, Int>> options;
  std::vector<std::vector<Int>> divs;
  for (Int n : moduli) divs.push_back(divisors(n));
  std::vector<std::size_t> idx(moduli.size(), 0);
  for (;;) {
    std::vector<Int> gens;
    Int size = 1;
    for (std::size_t i = 0; i < moduli.size(); ++i) {
      const Int g = divs[i][idx[i]];
      size *= g;
      gens.push_back(g == moduli[i] ? 0 : g);
    }
    if (size > 1) options.emplace_back(std::move(gens), size);
    std::size_t i = 0;
    while (i < moduli.size() && ++idx[i] == divs[i].size()) idx[i++] = 0;
    if (i == moduli.size()) break;
  }
  // Largest factors first, so a module prints with its biggest summands leading.
  std::stable_sort(options.begin(), options.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  std::vector<std::vector<std::vector<Int>>> shapes;
  std::vector<std::vector<Int>> current;
  multisets(options, max_factors, max_elements, current, 1, 0, shapes);
  std::vector<InstanceSpec> out;
  for (auto& s : shapes) out.push_back(InstanceSpec{moduli, std::move(s), false});
  return out;
}

bool is_prime_power_value(Int n) { return n >= 2 && is_prime_power(n); }

std::size_t to_size(const std::string& token, std::size_t line) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw ParseError(1, "line " + std::to_string(line) + ": expected a nonnegative integer, got '" + token + "'");
  }
}

}  // namespace

std::vector<InstanceSpec> cyclic_family(Int max_n) {
  std::vector<InstanceSpec> out;
  for (Int n = 2; n <= max_n; ++n) {
    for (Int g : divisors(n)) {
      if (g == 1) continue;
      out.push_back(InstanceSpec{{n}, {{g == n ? 0 : g}}, false});
    }
  }
  return out;
}

std::vector<InstanceSpec> prime_power_family(Int max_elements, std::size_t max_factors) {
  std::vector<InstanceSpec> out;
  for (Int q = 2; q <= max_elements; ++q) {
    if (!is_prime_power_value(q)) continue;
    auto mods = modules_over({q}, max_elements, max_factors);
    out.insert(out.end(), mods.begin(), mods.end());
  }
  return out;
}

std::vector<InstanceSpec> ring_pair_family(Int max_ring, Int max_elements, std::size_t max_factors) {
  std::vector<InstanceSpec> out;
  for (Int a = 2; a * a <= max_ring; ++a) {
    for (Int b = a; a * b <= max_ring; ++b) {
      auto mods = modules_over({a, b}, max_elements, max_factors);
      out.insert(out.end(), mods.begin(), mods.end());
    }
  }
  return out;
}

CorpusSpec parse_corpus(std::string_view text) {
  CorpusSpec spec;
  std::set<std::string> seen;
  auto add = [&](InstanceSpec s) {
    if (seen.insert(corpus_line(s)).second) spec.instances.push_back(std::move(s));
  };
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw.substr(0, raw.find('#'));
    std::istringstream words(line);
    std::vector<std::string> tok;
    for (std::string w; words >> w;) tok.push_back(w);
    if (tok.empty()) continue;
    auto bad = [&](const std::string& msg) -> ParseError {
      return ParseError(1, "line " + std::to_string(line_no) + ": " + msg);
    };
    auto arity = [&](std::size_t n) {
      if (tok.size() != n + 1) throw bad("'" + tok[0] + "' takes " + std::to_string(n) + " argument(s)");
    };
    const std::string& head = tok[0];
    if (line.find('|') != std::string::npos) {
      bool over_z = false;
      std::string body = line;
      if (head == "over-Z") {
        over_z = true;
        body = line.substr(line.find("over-Z") + 6);
      }
      try {
        add(parse_instance(body, over_z));
      } catch (const ParseError& e) {
        throw bad(e.what());
      }
    } else if (head == "seed") {
      arity(1);
      spec.seed = to_size(tok[1], line_no);
    } else if (head == "subset-cap") {
      arity(1);
      spec.subset_cap = to_size(tok[1], line_no);
    } else if (head == "max-elements") {
      arity(1);
      spec.max_elements = to_size(tok[1], line_no);
    } else if (head == "results") {
      std::vector<std::string> ids(tok.begin() + 1, tok.end());
      if (ids.size() == 1 && ids[0] == "all") {
        spec.results.reset();
        continue;
      }
      for (const auto& id : ids) {
        if (!is_registered(id)) throw UnknownResultError(id);
      }
      spec.results = ids;
    } else if (head == "cyclic") {
      arity(1);
      for (auto& s : cyclic_family(static_cast<Int>(to_size(tok[1], line_no)))) add(std::move(s));
      spec.families.push_back(line.substr(line.find_first_not_of(" \t")));
    } else if (head == "prime-power") {
      arity(2);
      for (auto& s : prime_power_family(static_cast<Int>(to_size(tok[1], line_no)), to_size(tok[2], line_no)))
        add(std::move(s));
      spec.families.push_back(line.substr(line.find_first_not_of(" \t")));
    } else if (head == "ring-pairs") {
      arity(3);
      for (auto& s : ring_pair_family(static_cast<Int>(to_size(tok[1], line_no)),
                                      static_cast<Int>(to_size(tok[2], line_no)), to_size(tok[3], line_no)))
        add(std::move(s));
      spec.families.push_back(line.substr(line.find_first_not_of(" \t")));
    } else {
      throw bad("unknown directive '" + head + "'");
    }
  }
  for (auto& f : spec.families) {
    while (!f.empty() && std::isspace(static_cast<unsigned char>(f.back()))) f.pop_back();
  }
  return spec;
}

CorpusSpec load_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot read corpus file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_corpus(buf.str());
}

std::string corpus_line(const InstanceSpec& spec) {
  return (spec.over_z ? "over-Z " : "") + print_instance(spec);
}

const std::string& default_corpus_text() {
  static const std::string text =
      "# All cyclic modules over Z mod n, n <= 60.\n"
      "cyclic 60\n"
      "# Modules over Z mod p^k with at most 3 cyclic factors and at most 64 elements.\n"
      "prime-power 64 3\n"
      "# Modules over Z mod a x Z mod b, ab <= 36, at most 2 cyclic factors, at most 64 elements.\n"
      "ring-pairs 36 64 2\n";
  return text;
}

std::size_t CorpusReport::count(Status status) const {
  std::size_t n = 0;
  for (const auto& inst : instances) {
    for (const auto& r : inst.results) n += r.status == status;
  }
  return n;
}

std::vector<FiniteModule> corpus_partners(const FiniteModule& module, const std::vector<FiniteModule>& corpus) {
  std::vector<const FiniteModule*> candidates;
  for (const auto& m : corpus) {
    if (m.ring() == module.ring() && m.size() >= module.size() && !(m == module)) candidates.push_back(&m);
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const FiniteModule* a, const FiniteModule* b) { return a->size() < b->size(); });
  std::vector<FiniteModule> out;
  for (std::size_t i = 0; i < candidates.size() && i < 3; ++i) out.push_back(*candidates[i]);
  return out;
}

CorpusReport run_corpus(const CorpusSpec& spec, const std::function<void(std::size_t, std::size_t)>& progress) {
  CorpusReport report;
  report.seed = spec.seed;
  report.subset_cap = spec.subset_cap;
  report.families = spec.families;
  report.ids = spec.results ? *spec.results : result_registry();

  std::vector<std::optional<BuiltInstance>> built;
  std::vector<std::string> errors(spec.instances.size());
  std::vector<FiniteModule> modules;
  for (std::size_t k = 0; k < spec.instances.size(); ++k) {
    try {
      built.emplace_back(build_instance(spec.instances[k], spec.max_elements));
      modules.push_back(built.back()->module);
    } catch (const SizeGuardError& e) {
      built.emplace_back(std::nullopt);
      errors[k] = e.what();
    }
  }

  for (std::size_t k = 0; k < spec.instances.size(); ++k) {
    InstanceOutcome outcome;
    outcome.instance = corpus_line(spec.instances[k]);
    if (!built[k]) {
      outcome.error = errors[k];
    } else {
      outcome.notes = built[k]->notes;
      if (!report.ids.empty()) {
        VerifyOptions options;
        options.seed = spec.seed;
        options.subset_cap = spec.subset_cap;
        options.partners = corpus_partners(built[k]->module, modules);
        InstanceVerifier verifier(built[k]->module, std::move(options));
        outcome.results = verifier.verify_all(report.ids);
      }
    }
    report.instances.push_back(std::move(outcome));
    if (progress) progress(k + 1, spec.instances.size());
  }
  return report;
}

}  // namespace slspec
