#include "slspec/theorems.hpp"

#include "slspec/maps.hpp"
#include "slspec/reference.hpp"
#include "slspec/space.hpp"
#include "slspec/spectra.hpp"
#include "slspec/topology.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace slspec {

std::string status_name(Status status) {
  switch (status) {
    case Status::Pass: return "PASS";
    case Status::PassBounded: return "PASS-BOUNDED";
    case Status::Fail: return "FAIL";
    case Status::SkippedHypothesis: return "SKIPPED-HYPOTHESIS";
  }
  return "?";
}

const std::vector<std::string>& result_registry() {
  static const std::vector<std::string> ids{
      "T2.1", "T2.2",  "T2.3",  "L2.4", "C2.5", "P2.6", "C2.7", "L2.8", "P2.9",
      "P2.10", "C2.11", "T2.12", "L2.13", "T2.14", "C2.15", "T3.1", "P3.2", "C3.3",
      "T3.4", "T3.5",  "P4.1",  "T4.2", "C4.3", "T4.4", "T4.5", "T4.6", "C4.7",
      "C4.8", "T4.9",  "C4.10", "T4.11", "C4.12", "P4.13", "L4.14", "L4.15", "C4.16"};
  return ids;
}

bool is_registered(const std::string& id) {
  const auto& ids = result_registry();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

namespace {

std::string registry_text() {
  std::string out;
  for (const auto& id : result_registry()) out += (out.empty() ? "" : " ") + id;
  return out;
}

}  // namespace

UnknownResultError::UnknownResultError(const std::string& id)
    : SpecError("unknown result id '" + id + "'; valid ids: " + registry_text()), id_(id) {}

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string set_text(const PointSet& s) { return "{" + compact_indices(s) + "}"; }

// Everything a check asks about one module. Two implementations: the fast
// paths, and the definition-level checker used to re-validate failures.
class Facts {
 public:
  Facts(const SubmoduleLattice& lattice, const QuotientRing& quotient)
      : lattice_(lattice), quotient_(quotient) {}
  virtual ~Facts() = default;

  const SubmoduleLattice& lattice() const { return lattice_; }
  const FiniteModule& module() const { return lattice_.module(); }
  const FiniteRing& ring() const { return module().ring(); }
  const QuotientRing& quotient() const { return quotient_; }

  virtual const std::vector<std::size_t>& spec_l() const = 0;
  virtual const std::vector<std::size_t>& spec_s() const = 0;
  virtual Ideal ann(std::size_t i) const = 0;
  virtual Ideal rad_ann(std::size_t i) const = 0;
  virtual Ideal radical(const Ideal& ideal) const = 0;
  virtual std::size_t soc(std::size_t i) const = 0;
  virtual bool secondary(std::size_t i) const = 0;
  virtual bool minimal(std::size_t i) const = 0;
  virtual PointSet nu_s(std::size_t i) const = 0;
  virtual PointSet nu_s_star(std::size_t i) const = 0;
  virtual PointSet v_s(std::size_t i) const = 0;
  virtual PointSet v_s_star(std::size_t i) const = 0;
  virtual std::size_t ann_m(const Ideal& ideal) const = 0;
  virtual std::size_t sum(std::size_t a, std::size_t b) const = 0;
  virtual std::size_t h(const PointSet& y) const = 0;
  virtual bool comultiplication() const = 0;

  std::size_t intersect(std::size_t a, std::size_t b) const {
    return lattice_.index_of(lattice_[a].bits() & lattice_[b].bits());
  }

  std::optional<std::size_t> l_pos(std::size_t i) const {
    positions();
    return l_pos_[i];
  }
  std::optional<std::size_t> s_pos(std::size_t i) const {
    positions();
    return s_pos_[i];
  }
  PointSet full_l() const { return full_bits(spec_l().size()); }
  PointSet full_s() const { return full_bits(spec_s().size()); }

  /// Lattice indices of Spec^L points to a point set.
  PointSet l_set(const std::vector<std::size_t>& indices) const {
    PointSet out(spec_l().size());
    for (std::size_t i : indices) {
      auto p = l_pos(i);
      if (!p) throw std::logic_error(lattice_[i].text() + " is not a Spec^L point");
      out.set(*p);
    }
    return out;
  }
  std::vector<std::size_t> l_indices(const PointSet& set) const {
    std::vector<std::size_t> out;
    for (auto p = set.find_first(); p != PointSet::npos; p = set.find_next(p)) out.push_back(spec_l()[p]);
    return out;
  }
  std::string l_text(const PointSet& set) const {
    std::string out = "{";
    for (std::size_t i : l_indices(set)) out += (out.size() > 1 ? "," : "") + lattice_[i].text();
    return out + "}";
  }
  PointSet restrict_to_s(const PointSet& over_l) const {
    PointSet out(spec_s().size());
    for (std::size_t s = 0; s < spec_s().size(); ++s) {
      auto p = l_pos(spec_s()[s]);
      if (!p) throw std::logic_error(lattice_[spec_s()[s]].text() + " is second but not in Spec^L");
      if (over_l.test(*p)) out.set(s);
    }
    return out;
  }

  PointSet fiber(const Ideal& p) const {
    PointSet out(spec_l().size());
    for (std::size_t pos = 0; pos < spec_l().size(); ++pos) {
      if (rad_ann(spec_l()[pos]) == p) out.set(pos);
    }
    return out;
  }
  /// |Spec^L_p(M)| <= 1 for every prime p of R.
  bool fibers_at_most_one() const {
    for (const auto& p : ring_spec(ring())) {
      if (fiber(p).count() > 1) return false;
    }
    return true;
  }
  bool nu_s_injective() const {
    std::set<PointSet> seen;
    for (std::size_t k : spec_l()) {
      if (!seen.insert(nu_s(k)).second) return false;
    }
    return true;
  }

  const FiniteTopology& sl() const {
    if (!sl_) sl_.emplace(make_sl());
    return *sl_;
  }
  const FiniteTopology& ss() const {
    if (!ss_) ss_.emplace(make_ss());
    return *ss_;
  }
  const FiniteTopology& rbar() const {
    if (!rbar_) rbar_.emplace(zariski_on_spec(quotient_.ring()));
    return *rbar_;
  }
  const std::vector<Ideal>& rbar_primes() const {
    if (!rbar_primes_) rbar_primes_ = ring_spec(quotient_.ring());
    return *rbar_primes_;
  }
  /// V(I/Ann M) in Spec(R/Ann M), for I containing Ann M.
  PointSet v_bar(const Ideal& ideal) const {
    return zariski_closed(quotient_.ring(), rbar_primes(), quotient_.image(ideal));
  }
  PointSet d_bar(const RingElement& r) const {
    const auto& q = quotient_.ring();
    return ~zariski_closed(q, rbar_primes(), Ideal::principal(q, quotient_.image(r)));
  }
  std::size_t rbar_position(const Ideal& ideal_of_r) const {
    const Ideal image = quotient_.image(ideal_of_r);
    const auto& primes = rbar_primes();
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (primes[i] == image) return i;
    }
    throw std::logic_error(ideal_of_r.text() + " does not map to a prime of R/Ann(M)");
  }

  const SpectrumMap& phi() const {
    if (!phi_) {
      std::vector<std::size_t> a;
      for (std::size_t k : spec_l()) a.push_back(rbar_position(rad_ann(k)));
      phi_.emplace(sl(), rbar(), std::move(a), MapLabel::Phi, spec_l().empty());
    }
    return *phi_;
  }
  const SpectrumMap& psi() const {
    if (!psi_) {
      std::vector<std::size_t> a;
      for (std::size_t s : spec_s()) a.push_back(rbar_position(ann(s)));
      psi_.emplace(ss(), rbar(), std::move(a), MapLabel::Psi, spec_s().empty());
    }
    return *psi_;
  }
  const MapReport& phi_report() const {
    if (!phi_report_) phi_report_ = map_report(phi());
    return *phi_report_;
  }
  const MapReport& psi_report() const {
    if (!psi_report_) psi_report_ = map_report(psi());
    return *psi_report_;
  }

  /// E_r for the ring element with index `r` in R.
  const PointSet& e(std::size_t r) const {
    if (e_.empty()) e_.resize(ring().order());
    if (!e_[r]) e_[r] = ~nu_s(ann_m(Ideal::principal(ring(), ring().element(r))));
    return *e_[r];
  }

 protected:
  virtual FiniteTopology make_sl() const {
    std::vector<PointSet> closed;
    for (std::size_t i = 0; i < lattice_.size(); ++i) closed.push_back(nu_s(i));
    return FiniteTopology(spec_l().size(), PointKind::Submodule, std::move(closed));
  }
  virtual FiniteTopology make_ss() const {
    std::vector<PointSet> closed;
    for (std::size_t i = 0; i < lattice_.size(); ++i) closed.push_back(v_s(i));
    return FiniteTopology(spec_s().size(), PointKind::Submodule, std::move(closed));
  }

 private:
  void positions() const {
    if (!l_pos_.empty() || lattice_.size() == 0) return;
    l_pos_.assign(lattice_.size(), std::nullopt);
    s_pos_.assign(lattice_.size(), std::nullopt);
    for (std::size_t p = 0; p < spec_l().size(); ++p) l_pos_[spec_l()[p]] = p;
    for (std::size_t p = 0; p < spec_s().size(); ++p) s_pos_[spec_s()[p]] = p;
  }

  const SubmoduleLattice& lattice_;
  const QuotientRing& quotient_;
  mutable std::vector<std::optional<std::size_t>> l_pos_;
  mutable std::vector<std::optional<std::size_t>> s_pos_;
  mutable std::optional<FiniteTopology> sl_;
  mutable std::optional<FiniteTopology> ss_;
  mutable std::optional<FiniteTopology> rbar_;
  mutable std::optional<std::vector<Ideal>> rbar_primes_;
  mutable std::optional<SpectrumMap> phi_;
  mutable std::optional<SpectrumMap> psi_;
  mutable std::optional<MapReport> phi_report_;
  mutable std::optional<MapReport> psi_report_;
  mutable std::vector<std::optional<PointSet>> e_;
};

class FastFacts final : public Facts {
 public:
  explicit FastFacts(const ModuleSpectra& sp) : Facts(sp.lattice(), sp.quotient()), sp_(sp) {}

  const std::vector<std::size_t>& spec_l() const override { return sp_.spec_l(); }
  const std::vector<std::size_t>& spec_s() const override { return sp_.spec_s(); }
  Ideal ann(std::size_t i) const override { return sp_.facts(i).ann; }
  Ideal rad_ann(std::size_t i) const override { return sp_.facts(i).rad_ann; }
  Ideal radical(const Ideal& ideal) const override { return ideal_radical(ideal); }
  std::size_t soc(std::size_t i) const override { return sp_.facts(i).soc; }
  bool secondary(std::size_t i) const override { return sp_.facts(i).secondary; }
  bool minimal(std::size_t i) const override { return is_prime(static_cast<Int>(sp_.submodule(i).size())); }
  PointSet nu_s(std::size_t i) const override { return sp_.nu_s(i); }
  PointSet nu_s_star(std::size_t i) const override { return sp_.nu_s_star(i); }
  PointSet v_s(std::size_t i) const override { return sp_.v_s(i); }
  PointSet v_s_star(std::size_t i) const override { return sp_.v_s_star(i); }
  std::size_t ann_m(const Ideal& ideal) const override {
    return sp_.lattice().index_of(annihilated_submodule(module(), ideal));
  }
  std::size_t sum(std::size_t a, std::size_t b) const override {
    if (a > b) std::swap(a, b);
    const std::uint64_t key = static_cast<std::uint64_t>(a) * sp_.lattice().size() + b;
    auto it = sums_.find(key);
    if (it != sums_.end()) return it->second;
    const std::size_t s = sp_.lattice().index_of(submodule_sum(sp_.submodule(a), sp_.submodule(b)));
    sums_.emplace(key, s);
    return s;
  }
  std::size_t h(const PointSet& y) const override { return sp_.socle_sum_index(y); }
  bool comultiplication() const override {
    if (!comult_) comult_ = is_comultiplication(sp_.lattice());
    return *comult_;
  }

 protected:
  FiniteTopology make_sl() const override { return build_space(sp_, SpaceKind::SecondaryLike); }
  FiniteTopology make_ss() const override { return build_space(sp_, SpaceKind::SecondZariski); }

 private:
  const ModuleSpectra& sp_;
  mutable std::unordered_map<std::uint64_t, std::size_t> sums_;
  mutable std::optional<bool> comult_;
};

class RefFacts final : public Facts {
 public:
  RefFacts(const Reference& ref, const QuotientRing& quotient) : Facts(ref.lattice(), quotient), ref_(ref) {}

  const std::vector<std::size_t>& spec_l() const override { return ref_.spec_l(); }
  const std::vector<std::size_t>& spec_s() const override { return ref_.spec_s(); }
  Ideal ann(std::size_t i) const override { return ref_.ann(i); }
  Ideal rad_ann(std::size_t i) const override { return ref_.rad_ann(i); }
  Ideal radical(const Ideal& ideal) const override { return ref_.radical(ideal); }
  std::size_t soc(std::size_t i) const override { return ref_.socle(i); }
  bool secondary(std::size_t i) const override { return ref_.secondary(i); }
  bool minimal(std::size_t i) const override {
    const auto& l = lattice();
    if (l[i].is_zero()) return false;
    for (std::size_t j = 0; j < l.size(); ++j) {
      if (!l[j].is_zero() && l[j].size() < l[i].size() && l[j].is_subset_of(l[i])) return false;
    }
    return true;
  }
  PointSet nu_s(std::size_t i) const override { return ref_.nu_s(i); }
  PointSet nu_s_star(std::size_t i) const override { return ref_.nu_s_star(i); }
  PointSet v_s(std::size_t i) const override { return ref_.v_s(i); }
  PointSet v_s_star(std::size_t i) const override { return ref_.v_s_star(i); }
  std::size_t ann_m(const Ideal& ideal) const override { return ref_.ann_m(ideal); }
  std::size_t sum(std::size_t a, std::size_t b) const override { return ref_.sum_index(a, b); }
  std::size_t h(const PointSet& y) const override { return ref_.h(y); }
  bool comultiplication() const override {
    for (std::size_t i = 0; i < lattice().size(); ++i) {
      if (ref_.ann_m(ref_.ann(i)) != i) return false;
    }
    return true;
  }

 private:
  const Reference& ref_;
};

// One module with both fact providers, the reference side built on demand.
struct Instance {
  explicit Instance(const FiniteModule& m) : module(m), spectra(m), fast(spectra) {}

  const Facts& ref() {
    if (!reference) {
      reference = std::make_unique<Reference>(spectra.lattice());
      ref_facts = std::make_unique<RefFacts>(*reference, spectra.quotient());
    }
    return *ref_facts;
  }

  FiniteModule module;
  ModuleSpectra spectra;
  FastFacts fast;
  std::unique_ptr<Reference> reference;
  std::unique_ptr<RefFacts> ref_facts;
};

}  // namespace

struct InstanceVerifier::Impl {
  Impl(const FiniteModule& module, VerifyOptions opts) : self(module), options(std::move(opts)) {}

  Instance& partner(std::size_t k) {
    if (partner_cache.size() < options.partners.size()) partner_cache.resize(options.partners.size());
    if (!partner_cache[k]) partner_cache[k] = std::make_unique<Instance>(options.partners[k]);
    return *partner_cache[k];
  }
  const FiniteTopology& ring_space() {
    if (!r_space) r_space.emplace(zariski_on_spec(self.module.ring()));
    return *r_space;
  }

  Instance self;
  VerifyOptions options;
  std::vector<std::unique_ptr<Instance>> partner_cache;
  std::optional<FiniteTopology> r_space;
};

namespace {

using Impl = InstanceVerifier::Impl;

class Run {
 public:
  Run(Impl& ctx, VerificationResult& result) : ctx_(ctx), r_(result) {}

  Impl& ctx() { return ctx_; }
  const Facts& f() { return ctx_.self.fast; }
  const SubmoduleLattice& lattice() { return ctx_.self.spectra.lattice(); }
  std::string sub(std::size_t i) { return lattice()[i].text(); }
  bool failed() const { return r_.status == Status::Fail; }
  VerificationResult& result() { return r_; }

  /// Evaluates `pred` on the fast facts; on failure records `text()` and
  /// re-evaluates on the definition-level facts.
  template <typename Pred, typename Text>
  bool expect(Pred&& pred, Text&& text) {
    ++r_.cases;
    if (pred(ctx_.self.fast)) return true;
    bool confirmed = false;
    try {
      confirmed = !pred(ctx_.self.ref());
    } catch (const std::exception&) {
      confirmed = false;
    }
    fail(text(), confirmed);
    return false;
  }

  /// Same, for statements about a module pair.
  template <typename Pred, typename Text>
  bool expect_pair(Instance& target, Pred&& pred, Text&& text) {
    ++r_.cases;
    if (pred(ctx_.self.fast, target.fast)) return true;
    bool confirmed = false;
    try {
      confirmed = !pred(ctx_.self.ref(), target.ref());
    } catch (const std::exception&) {
      confirmed = false;
    }
    fail(text(), confirmed);
    return false;
  }

  void fail(std::string witness, bool confirmed) {
    r_.status = Status::Fail;
    r_.witness = std::move(witness);
    r_.witness_confirmed = confirmed;
  }
  void skip(const std::string& hypothesis) {
    r_.status = Status::SkippedHypothesis;
    r_.skipped = hypothesis;
  }
  void hypothesis(const std::string& name, bool value) { r_.hypotheses[name] = value; }
  void note(std::string text) { r_.notes.push_back(std::move(text)); }
  void bounded(std::string text) {
    bounded_ = true;
    note(std::move(text));
  }
  bool is_bounded() const { return bounded_; }

  std::mt19937_64 rng() {
    return std::mt19937_64(ctx_.options.seed ^ fnv1a(r_.id) ^ (fnv1a(r_.instance) << 1));
  }

  /// Calls fn(i, j) for i <= j over [0, n), or over a seeded sample when there
  /// are more pairs than the configured limit. Stops when fn returns false.
  template <typename Fn>
  void pairs(std::size_t n, const std::string& what, Fn&& fn) {
    const std::uint64_t total = static_cast<std::uint64_t>(n) * (n + 1) / 2;
    if (total <= ctx_.options.pair_limit) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
          if (!fn(i, j)) return;
        }
      }
      return;
    }
    bounded("sampled " + std::to_string(ctx_.options.pair_limit) + " of " + std::to_string(total) + " " +
            what + " pairs");
    auto gen = rng();
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::uint64_t s = 0; s < ctx_.options.pair_limit; ++s) {
      std::size_t i = pick(gen), j = pick(gen);
      if (i > j) std::swap(i, j);
      if (!fn(i, j)) return;
    }
  }

  /// Calls fn(indices) for subsets Y of Spec^L(M), given as lattice indices:
  /// the whole powerset up to the subset cap, a seeded sample beyond it.
  template <typename Fn>
  void subsets(Fn&& fn) {
    const auto& pts = f().spec_l();
    const std::size_t n = pts.size();
    auto as_indices = [&](const PointSet& y) { return f().l_indices(y); };
    if (n <= ctx_.options.subset_cap) {
      const std::uint64_t count = std::uint64_t{1} << n;
      for (std::uint64_t mask = 0; mask < count; ++mask) {
        PointSet y(n, mask);
        if (!fn(as_indices(y))) return;
      }
      return;
    }
    bounded("Spec^L has " + std::to_string(n) + " points, above the subset cap " +
            std::to_string(ctx_.options.subset_cap) + "; checked the empty set, the whole space, the singletons and " +
            std::to_string(ctx_.options.subset_samples) + " random subsets");
    auto gen = rng();
    std::bernoulli_distribution coin(0.5);
    std::vector<PointSet> fixed{PointSet(n), full_bits(n)};
    for (std::size_t p = 0; p < n; ++p) {
      PointSet y(n);
      y.set(p);
      fixed.push_back(std::move(y));
    }
    for (const auto& y : fixed) {
      if (!fn(as_indices(y))) return;
    }
    for (std::size_t s = 0; s < ctx_.options.subset_samples; ++s) {
      PointSet y(n);
      for (std::size_t p = 0; p < n; ++p) {
        if (coin(gen)) y.set(p);
      }
      if (!fn(as_indices(y))) return;
    }
  }

 private:
  Impl& ctx_;
  VerificationResult& r_;
  bool bounded_ = false;
};

std::string y_text(Run& run, const std::vector<std::size_t>& y) {
  std::string out = "Y = {";
  for (std::size_t k = 0; k < y.size(); ++k) out += (k ? "," : "") + run.sub(y[k]);
  return out + "}";
}

bool phi_surjective(Run& run) {
  const bool s = run.f().phi_report().surjective;
  run.hypothesis(hypothesis::kPhiSurjective, s);
  return s;
}

bool psi_surjective(Run& run) {
  const bool s = run.f().psi_report().surjective;
  run.hypothesis(hypothesis::kPsiSurjective, s);
  return s;
}

std::vector<Ideal> ideals_over_annihilator(const Facts& f) {
  std::vector<Ideal> out;
  const Ideal& ann_m = f.module().annihilator();
  for (const auto& ideal : all_ideals(f.ring())) {
    if (ann_m.is_subset_of(ideal)) out.push_back(ideal);
  }
  return out;
}

std::vector<std::size_t> minimal_prime_positions(const Facts& f) {
  const auto& primes = f.rbar_primes();
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < primes.size() && minimal; ++j) {
      if (j != i && primes[j].is_subset_of(primes[i])) minimal = false;
    }
    if (minimal) out.push_back(i);
  }
  return out;
}

bool is_minimal_prime_image(const Facts& f, const Ideal& ideal_of_r) {
  const auto mins = minimal_prime_positions(f);
  const std::size_t pos = f.rbar_position(ideal_of_r);
  return std::find(mins.begin(), mins.end(), pos) != mins.end();
}


void check_T2_1(Run& run) {
  const auto& l = run.lattice();
  const std::size_t zero = l.zero_index(), whole = l.whole_index();
  if (!run.expect([&](const Facts& f) { return f.nu_s_star(whole) == f.full_l(); },
                  [] { return "nu_s*(M) != Spec^L(M)"; }))
    return;
  if (!run.expect([&](const Facts& f) { return f.nu_s_star(zero).none(); },
                  [] { return "nu_s*(0) is not empty"; }))
    return;
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (!run.expect([&](const Facts& f) { return f.nu_s_star(f.soc(i)) == f.nu_s_star(i); },
                    [&] { return "nu_s*(soc N) != nu_s*(N) for N = " + run.sub(i); }))
      return;
  }
  run.pairs(l.size(), "submodule", [&](std::size_t i, std::size_t j) {
    if (!run.expect([&](const Facts& f) {
          return (f.nu_s_star(i) & f.nu_s_star(j)) == f.nu_s_star(f.intersect(i, j));
        }, [&] { return "intersection fails for N = " + run.sub(i) + ", L = " + run.sub(j); }))
      return false;
    if (!run.expect([&](const Facts& f) {
          return (f.nu_s_star(i) | f.nu_s_star(j)).is_subset_of(f.nu_s_star(f.sum(i, j)));
        }, [&] { return "union not inside nu_s*(N+L) for N = " + run.sub(i) + ", L = " + run.sub(j); }))
      return false;
    return run.expect([&](const Facts& f) {
      const auto& lt = f.lattice();
      if (lt[i].is_subset_of(lt[j]) && !f.nu_s_star(i).is_subset_of(f.nu_s_star(j))) return false;
      if (lt[j].is_subset_of(lt[i]) && !f.nu_s_star(j).is_subset_of(f.nu_s_star(i))) return false;
      return true;
    }, [&] { return "not monotone on " + run.sub(i) + ", " + run.sub(j); });
  });
}

bool union_is_variety(const Facts& f, std::size_t a, std::size_t b, bool second_only) {
  auto var = [&](std::size_t i) { return second_only ? f.v_s_star(i) : f.nu_s_star(i); };
  const PointSet u = var(a) | var(b);
  for (std::size_t t = 0; t < f.lattice().size(); ++t) {
    if (var(t) == u) return true;
  }
  return false;
}

void check_T2_2(Run& run) {
  const bool comult = run.f().comultiplication();
  run.hypothesis(hypothesis::kComultiplication, comult);
  if (!comult) return run.skip(hypothesis::kComultiplication);
  const CotopResult cotop = is_secondary_cotop(run.ctx().self.spectra);
  if (!cotop.holds) {
    const auto& l = run.lattice();
    const std::size_t a = l.index_of(cotop.witness->first), b = l.index_of(cotop.witness->second);
    return (void)run.expect([&](const Facts& f) { return union_is_variety(f, a, b, false); }, [&] {
      return "nu_s*(" + run.sub(a) + ") u nu_s*(" + run.sub(b) + ") is not a variety";
    });
  }
  ++run.result().cases;
  run.pairs(run.lattice().size(), "submodule", [&](std::size_t i, std::size_t j) {
    return run.expect([&](const Facts& f) {
      return f.nu_s_star(f.sum(i, j)).is_subset_of(f.nu_s_star(i) | f.nu_s_star(j));
    }, [&] { return "nu_s*(N+L) not inside the union for N = " + run.sub(i) + ", L = " + run.sub(j); });
  });
}

void check_C2_5(Run& run) {
  const auto& sp = run.ctx().self.spectra;
  const CotopResult sc = is_secondary_cotop(sp);
  run.hypothesis(hypothesis::kSecondaryCotop, sc.holds);
  if (!sc.holds) return run.skip(hypothesis::kSecondaryCotop);
  const CotopResult c = is_cotop(sp);
  ++run.result().cases;
  if (!c.holds) {
    const auto& l = run.lattice();
    const std::size_t a = l.index_of(c.witness->first), b = l.index_of(c.witness->second);
    run.expect([&](const Facts& f) { return union_is_variety(f, a, b, true); }, [&] {
      return "V_s*(" + run.sub(a) + ") u V_s*(" + run.sub(b) + ") is not a variety";
    });
  }
}

void check_T2_3(Run& run) {
  const auto& l = run.lattice();
  const std::size_t zero = l.zero_index(), whole = l.whole_index();
  if (!run.expect([&](const Facts& f) { return f.nu_s(whole) == f.full_l() && f.nu_s(zero).none(); },
                  [] { return "nu_s(M) != Spec^L(M) or nu_s(0) != empty"; }))
    return;
  // The family of every nonzero submodule at once.
  if (!run.expect([&](const Facts& f) {
        PointSet lhs = f.full_l();
        Bits meet = full_bits(f.module().size());
        for (std::size_t i = 1; i < f.lattice().size(); ++i) {
          lhs &= f.nu_s(i);
          meet &= f.lattice()[f.ann_m(f.ann(i))].bits();
        }
        return lhs == f.nu_s(f.lattice().index_of(meet));
      }, [] { return "intersection over all nonzero submodules fails"; }))
    return;
  run.pairs(l.size(), "submodule", [&](std::size_t i, std::size_t j) {
    if (!run.expect([&](const Facts& f) {
          const std::size_t m = f.intersect(f.ann_m(f.ann(i)), f.ann_m(f.ann(j)));
          return (f.nu_s(i) & f.nu_s(j)) == f.nu_s(m);
        }, [&] { return "intersection identity fails for " + run.sub(i) + ", " + run.sub(j); }))
      return false;
    return run.expect([&](const Facts& f) { return (f.nu_s(i) | f.nu_s(j)) == f.nu_s(f.sum(i, j)); },
                      [&] { return "nu_s(N1) u nu_s(N2) != nu_s(N1+N2) for " + run.sub(i) + ", " + run.sub(j); });
  });
}

void check_L2_4(Run& run) {
  const auto& l = run.lattice();
  const bool comult = run.f().comultiplication();
  run.hypothesis(hypothesis::kComultiplication, comult);
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (!run.expect([&](const Facts& f) { return f.v_s(i) == f.restrict_to_s(f.nu_s(i)); },
                    [&] { return "V_s(N) != nu_s(N) n Spec^s for N = " + run.sub(i); }))
      return;
    if (!run.expect([&](const Facts& f) { return f.v_s_star(i) == f.restrict_to_s(f.nu_s_star(i)); },
                    [&] { return "V_s*(N) != nu_s*(N) n Spec^s for N = " + run.sub(i); }))
      return;
    if (!run.expect([&](const Facts& f) {
          return f.nu_s_star(i).is_subset_of(f.nu_s(i)) && (!f.comultiplication() || f.nu_s_star(i) == f.nu_s(i));
        }, [&] { return "nu_s*(N) not inside nu_s(N), or not equal under comultiplication, for N = " + run.sub(i); }))
      return;
    if (!run.expect([&](const Facts& f) {
          const std::size_t a = f.ann_m(f.ann(i)), b = f.ann_m(f.rad_ann(i));
          const PointSet v = f.nu_s(i);
          return v == f.nu_s(a) && v == f.nu_s(b) && v == f.nu_s_star(a) && v == f.nu_s_star(b);
        }, [&] { return "nu_s(N) differs from nu_s/nu_s* of Ann_M(Ann N) or Ann_M(sqrt(Ann N)) for N = " + run.sub(i); }))
      return;
    if (!run.expect([&](const Facts& f) {
          if (!f.l_pos(i) && !f.comultiplication()) return true;
          return f.nu_s(i) == f.nu_s(f.soc(i));
        }, [&] { return "nu_s(N) != nu_s(soc N) for N = " + run.sub(i); }))
      return;
  }
  // nu_s depends only on sqrt(Ann N), and separates Spec^L points with different radicals.
  std::map<Ideal, std::size_t> by_radical;
  for (std::size_t i = 0; i < l.size(); ++i) {
    const std::size_t first = by_radical.try_emplace(run.f().rad_ann(i), i).first->second;
    if (!run.expect([&](const Facts& f) { return f.rad_ann(first) != f.rad_ann(i) || f.nu_s(first) == f.nu_s(i); },
                    [&] { return "equal radicals, different nu_s: " + run.sub(first) + ", " + run.sub(i); }))
      return;
  }
  std::map<PointSet, std::size_t> by_variety;
  for (std::size_t k : run.f().spec_l()) {
    const std::size_t first = by_variety.try_emplace(run.f().nu_s(k), k).first->second;
    if (!run.expect([&](const Facts& f) { return f.nu_s(first) != f.nu_s(k) || f.rad_ann(first) == f.rad_ann(k); },
                    [&] { return "equal nu_s, different radicals: " + run.sub(first) + ", " + run.sub(k); }))
      return;
  }
  for (const auto& ideal : all_ideals(run.f().ring())) {
    if (!run.expect([&](const Facts& f) {
          const std::size_t a = f.ann_m(ideal), b = f.ann_m(f.radical(ideal));
          const PointSet v = f.nu_s(a);
          return v == f.nu_s(b) && v == f.nu_s_star(a) && v == f.nu_s_star(b);
        }, [&] { return "nu_s/nu_s* of Ann_M(I) and Ann_M(sqrt I) differ for I = " + ideal.text(); }))
      return;
  }
  if (!comult) run.note("nu_s* = nu_s and nu_s(N) = nu_s(soc N) off Spec^L not checked: not comultiplication");
}

bool spectra_nonempty(Run& run) {
  const bool ok = !run.f().spec_l().empty() && !run.f().spec_s().empty();
  run.hypothesis(hypothesis::kSpectraNonempty, ok);
  if (!ok) run.skip(hypothesis::kSpectraNonempty);
  return ok;
}

void check_P2_6(Run& run) {
  run.expect([&](const Facts& f) {
    const bool a = f.nu_s_injective(), b = f.fibers_at_most_one(), c = f.phi_report().injective;
    return a == b && b == c;
  }, [&] {
    const auto& f = run.f();
    return "nu_s separates points: " + std::string(f.nu_s_injective() ? "yes" : "no") +
           ", fibers <= 1: " + (f.fibers_at_most_one() ? "yes" : "no") +
           ", phi injective: " + (f.phi_report().injective ? "yes" : "no");
  });
  run.note(std::string("phi injective: ") + (run.f().phi_report().injective ? "yes" : "no"));
}

void check_C2_7(Run& run) {
  const auto& f = run.f();
  bool literal = true, over_ann = true;
  for (const auto& p : ring_spec(f.ring())) {
    const bool one = f.fiber(p).count() == 1;
    literal = literal && one;
    if (f.module().annihilator().is_subset_of(p)) over_ann = over_ann && one;
  }
  run.hypothesis(hypothesis::kFibersSingletons, literal);
  run.hypothesis("every fiber over a prime containing Ann_R(M) has exactly one point", over_ann);
  if (!literal && !over_ann) return run.skip(hypothesis::kFibersSingletons);
  if (!literal) run.note("checked under the fibers over primes containing Ann_R(M)");
  run.expect([&](const Facts& g) { return g.phi_report().injective && g.phi_report().surjective; },
             [] { return "phi is not bijective"; });
}

void check_L2_8(Run& run) {
  if (!run.expect([&](const Facts& f) { return f.psi_report().continuous; },
                  [] { return "psi is not continuous"; }))
    return;
  for (const auto& ideal : ideals_over_annihilator(run.f())) {
    if (!run.expect([&](const Facts& f) { return f.psi().preimage(f.v_bar(ideal)) == f.v_s(f.ann_m(ideal)); },
                    [&] { return "psi^-1(V(I)) != V_s(Ann_M(I)) for I = " + ideal.text(); }))
      return;
  }
  if (!psi_surjective(run)) return run.note("open/closed and image checks skipped: psi not surjective");
  if (!run.expect([&](const Facts& f) { return f.psi_report().open_map && f.psi_report().closed_map; },
                  [] { return "psi is surjective but not open and closed"; }))
    return;
  for (std::size_t i = 0; i < run.lattice().size(); ++i) {
    if (!run.expect([&](const Facts& f) {
          const PointSet v = f.v_bar(f.ann(i));
          return f.psi().image(f.v_s(i)) == v && f.psi().image(~f.v_s(i)) == ~v;
        }, [&] { return "image formulas fail for N = " + run.sub(i); }))
      return;
  }
}

void check_P2_9(Run& run) {
  for (const auto& ideal : ideals_over_annihilator(run.f())) {
    if (!run.expect([&](const Facts& f) { return f.phi().preimage(f.v_bar(ideal)) == f.nu_s(f.ann_m(ideal)); },
                    [&] { return "phi^-1(V(I)) != nu_s(Ann_M(I)) for I = " + ideal.text(); }))
      return;
  }
  run.expect([&](const Facts& f) { return f.phi_report().continuous; }, [] { return "phi is not continuous"; });
}

void check_P2_10(Run& run) {
  if (!phi_surjective(run)) return run.skip(hypothesis::kPhiSurjective);
  if (!run.expect([&](const Facts& f) { return f.phi_report().open_map && f.phi_report().closed_map; },
                  [] { return "phi is surjective but not open and closed"; }))
    return;
  for (std::size_t i = 0; i < run.lattice().size(); ++i) {
    if (!run.expect([&](const Facts& f) {
          const PointSet v = f.v_bar(f.ann(i));
          return f.phi().image(f.nu_s(i)) == v && f.phi().image(~f.nu_s(i)) == ~v;
        }, [&] { return "image formulas fail for N = " + run.sub(i); }))
      return;
  }
}

void check_C2_11(Run& run) {
  run.expect([&](const Facts& f) {
    const auto& r = f.phi_report();
    return (r.injective && r.surjective) == r.homeomorphism;
  }, [&] {
    const auto& r = run.f().phi_report();
    return std::string("bijective: ") + (r.injective && r.surjective ? "yes" : "no") +
           ", homeomorphism: " + (r.homeomorphism ? "yes" : "no");
  });
}

struct Connectedness {
  bool s1, s2, s3, s4;
};

Connectedness connectedness(const Facts& f) {
  return {f.ss().properties().connected, f.sl().properties().connected, f.rbar().properties().connected,
          ring_idempotents(f.quotient().ring()).size() == 2};
}

void check_T2_12(Run& run) {
  const bool phi_s = phi_surjective(run);
  const bool psi_s = psi_surjective(run);
  if (!phi_s && !psi_s) return run.skip(hypothesis::kPhiSurjective);
  const Connectedness c = connectedness(run.f());
  run.note(std::string("Spec^s connected: ") + (c.s1 ? "yes" : "no") + ", Spec^L connected: " +
           (c.s2 ? "yes" : "no") + ", Spec(R/Ann M) connected: " + (c.s3 ? "yes" : "no") +
           ", only trivial idempotents: " + (c.s4 ? "yes" : "no"));
  if (phi_s) {
    if (!run.expect([&](const Facts& f) {
          const Connectedness d = connectedness(f);
          return (!d.s1 || d.s2) && d.s2 == d.s3 && d.s3 == d.s4;
        }, [] { return "phi surjective but connectedness of Spec^s, Spec^L, Spec(R/Ann M) and idempotents do not line up"; }))
      return;
    run.note(std::string("Spec^L connected implies Spec^s connected: ") + (!c.s2 || c.s1 ? "yes" : "no"));
  }
  if (psi_s) {
    run.expect([&](const Facts& f) {
      const Connectedness d = connectedness(f);
      return d.s1 == d.s2 && d.s2 == d.s3 && d.s3 == d.s4;
    }, [] { return "psi surjective but connectedness of Spec^s, Spec^L, Spec(R/Ann M) and idempotents differ"; });
  }
}

// Monomorphisms from the instance into itself and each partner.
template <typename Fn>
void for_monomorphisms(Run& run, Fn&& fn) {
  auto& ctx = run.ctx();
  std::vector<Instance*> targets{&ctx.self};
  for (std::size_t k = 0; k < ctx.options.partners.size(); ++k) {
    const auto& p = ctx.options.partners[k];
    if (p.ring() != ctx.self.module.ring() || p.size() < ctx.self.module.size() || p == ctx.self.module) continue;
    targets.push_back(&ctx.partner(k));
  }
  std::size_t maps = 0;
  for (Instance* t : targets) {
    const HomEnumeration homs = enumerate_homomorphisms(ctx.self.module, t->module, true, ctx.options.hom_cap,
                                                        ctx.options.seed);
    if (!homs.exhaustive) {
      run.bounded("sampled " + std::to_string(ctx.options.hom_cap) + " of " + std::to_string(homs.candidates) +
                  " candidate maps into " + t->module.text());
    }
    for (const auto& f : homs.maps) {
      ++maps;
      if (!fn(*t, f)) return;
    }
  }
  run.note(std::to_string(maps) + " monomorphisms into " + std::to_string(targets.size()) + " target modules");
}

// f(K) for a Spec^L point K of the source, as a lattice index of the target.
std::size_t image_index(const Facts& src, const Facts& dst, const ModuleHom& f, std::size_t k) {
  return dst.lattice().index_of(f.image(src.lattice()[k]));
}

void check_L2_13(Run& run) {
  for_monomorphisms(run, [&](Instance& t, const ModuleHom& f) {
    for (std::size_t k : run.f().spec_l()) {
      if (!run.expect_pair(t, [&](const Facts& a, const Facts& b) {
            return b.l_pos(image_index(a, b, f, k)).has_value();
          }, [&] { return "f(N) not in Spec^L(M') for f = " + f.text() + ", N = " + run.sub(k); }))
        return false;
    }
    const Submodule fm = f.image(Submodule::whole(run.ctx().self.module));
    for (std::size_t k : t.fast.spec_l()) {
      if (!t.fast.lattice()[k].is_subset_of(fm)) continue;
      if (!run.expect_pair(t, [&](const Facts& a, const Facts& b) {
            if (!b.l_pos(k)) return true;
            return a.l_pos(a.lattice().index_of(f.preimage(b.lattice()[k]))).has_value();
          }, [&] {
            return "f^-1(N') not in Spec^L(M) for f = " + f.text() + ", N' = " + t.fast.lattice()[k].text();
          }))
        return false;
    }
    return true;
  });
}

std::optional<SpectrumMap> rho_of(const Facts& a, const Facts& b, const ModuleHom& f) {
  std::vector<std::size_t> assignment;
  for (std::size_t k : a.spec_l()) {
    auto pos = b.l_pos(image_index(a, b, f, k));
    if (!pos) return std::nullopt;
    assignment.push_back(*pos);
  }
  return SpectrumMap(a.sl(), b.sl(), std::move(assignment), MapLabel::Rho);
}

void check_T2_14(Run& run) {
  for_monomorphisms(run, [&](Instance& t, const ModuleHom& f) {
    return run.expect_pair(t, [&](const Facts& a, const Facts& b) {
      const auto rho = rho_of(a, b, f);
      if (!rho) return false;
      const MapReport r = map_report(*rho);
      if (!r.injective || !r.continuous) return false;
      return !r.surjective || find_homeomorphism(a.sl(), b.sl()).has_value();
    }, [&] { return "rho fails for f = " + f.text() + " into " + t.module.text(); });
  });
}

void check_C2_15(Run& run) {
  std::size_t isos = 0;
  for_monomorphisms(run, [&](Instance& t, const ModuleHom& f) {
    if (t.module.size() != run.ctx().self.module.size()) return true;
    ++isos;
    return run.expect_pair(t, [&](const Facts& a, const Facts& b) {
      const auto rho = rho_of(a, b, f);
      return rho && map_report(*rho).homeomorphism && find_homeomorphism(a.sl(), b.sl()).has_value();
    }, [&] { return "no homeomorphism for the isomorphism f = " + f.text() + " onto " + t.module.text(); });
  });
  run.note(std::to_string(isos) + " isomorphisms checked");
}


void check_T3_1(Run& run) {
  const auto& ring = run.f().ring();
  if (!run.expect([&](const Facts& f) {
        return f.e(ring.index_of(ring.zero())).none() && f.e(ring.index_of(ring.one())) == f.full_l();
      }, [] { return "E_0 != empty or E_1 != Spec^L(M)"; }))
    return;
  run.expect([&](const Facts& f) {
    for (std::size_t r = 0; r < ring.order(); ++r) {
      if (!f.sl().is_open(f.e(r))) return false;
    }
    for (const auto& open : f.sl().open_sets()) {
      PointSet covered(open.size());
      for (std::size_t r = 0; r < ring.order(); ++r) {
        if (f.e(r).is_subset_of(open)) covered |= f.e(r);
      }
      if (covered != open) return false;
    }
    return true;
  }, [] { return "{E_r} is not a base of open sets"; });
  ++run.result().cases;
  if (!verify_base(run.ctx().self.spectra, run.f().sl())) run.fail("verify_base rejects the E_r base", false);
}

void check_P3_2(Run& run) {
  const auto& ring = run.f().ring();
  const bool surj = phi_surjective(run);
  const auto un = units_and_nilradical(ring);
  for (std::size_t r = 0; r < ring.order(); ++r) {
    const RingElement x = ring.element(r);
    const bool unit = std::find(un.units.begin(), un.units.end(), x) != un.units.end();
    const bool nil = un.nilradical.contains(x);
    if (!run.expect([&](const Facts& f) {
          const PointSet d = f.d_bar(x);
          if (f.phi().preimage(d) != f.e(r)) return false;
          const PointSet img = f.phi().image(f.e(r));
          if (!img.is_subset_of(d) || (f.phi_report().surjective && img != d)) return false;
          if (nil && f.e(r).any()) return false;
          if (unit && f.e(r) != f.full_l()) return false;
          return true;
        }, [&] { return "phi^-1(D(r)) != E_r, phi(E_r) outside D(r), or nilpotent/unit case wrong for r = " + x.text(); }))
      return;
  }
  run.pairs(ring.order(), "ring element", [&](std::size_t a, std::size_t b) {
    const std::size_t ab = ring.index_of(ring.mul(ring.element(a), ring.element(b)));
    return run.expect([&](const Facts& f) { return (f.e(a) & f.e(b)) == f.e(ab); }, [&] {
      return "E_a n E_b != E_ab for a = " + ring.element(a).text() + ", b = " + ring.element(b).text();
    });
  });
  if (!surj) run.note("phi(E_r) = D(r) not checked: phi not surjective");
}

void check_C3_3(Run& run) {
  const bool field = run.f().ring().is_field();
  run.hypothesis(hypothesis::kField, field);
  if (!field) return run.skip(hypothesis::kField);
  run.expect([&](const Facts& f) { return f.sl().is_indiscrete(); },
             [] { return "SL-topology is not trivial over a field"; });
}

void check_T3_4(Run& run) {
  if (!phi_surjective(run)) return run.skip(hypothesis::kPhiSurjective);
  run.note("finite space: every subset is quasi-compact");
  const auto& ring = run.f().ring();
  for (std::size_t r = 0; r < ring.order(); ++r) {
    // Covering E_r by the basic opens inside it must reproduce E_r with finitely many sets.
    if (!run.expect([&](const Facts& f) {
          if (!f.sl().is_open(f.e(r))) return false;
          PointSet covered(f.e(r).size());
          for (std::size_t a = 0; a < ring.order(); ++a) {
            if (f.e(a).is_subset_of(f.e(r))) covered |= f.e(a);
          }
          return covered == f.e(r);
        }, [&] { return "E_r not covered by basic opens inside it for r = " + ring.element(r).text(); }))
      return;
  }
}

void check_T3_5(Run& run) {
  if (!phi_surjective(run)) return run.skip(hypothesis::kPhiSurjective);
  run.note("finite space: the quasi-compact opens are all opens");
  const auto opens = run.f().sl().open_sets();
  run.pairs(opens.size(), "open set", [&](std::size_t i, std::size_t j) {
    return run.expect([&](const Facts& f) { return f.sl().is_open(opens[i] & opens[j]); },
                      [&] { return "open sets " + set_text(opens[i]) + " and " + set_text(opens[j]) +
                                   " meet in a non-open set"; });
  });
}


void check_P4_1(Run& run) {
  const std::size_t whole = run.lattice().whole_index();
  run.subsets([&](const std::vector<std::size_t>& y) {
    return run.expect([&](const Facts& f) {
      const PointSet ys = f.l_set(y);
      const PointSet formula = f.nu_s(f.h(ys));
      if (f.sl().closure(ys) != formula) return false;
      if (f.sl().is_closed(ys) != (formula == ys)) return false;
      if (std::find(y.begin(), y.end(), whole) != y.end() && formula != f.full_l()) return false;
      return true;
    }, [&] { return "closure formula fails for " + y_text(run, y); });
  });
}

void check_T4_2(Run& run) {
  for (std::size_t k : run.f().spec_l()) {
    if (!run.expect([&](const Facts& f) {
          const PointSet v = f.nu_s(k);
          return f.sl().point_closure(*f.l_pos(k)) == v && f.sl().is_irreducible(v);
        }, [&] { return "Cl({K}) != nu_s(K) or not irreducible for K = " + run.sub(k); }))
      return;
  }
  const std::size_t whole = run.lattice().whole_index();
  if (run.f().l_pos(whole)) {
    run.expect([&](const Facts& f) { return f.sl().is_irreducible(f.full_l()); },
               [] { return "M in Spec^L(M) but Spec^L(M) is not irreducible"; });
  }
}

void check_C4_3(Run& run) {
  std::size_t met = 0;
  run.subsets([&](const std::vector<std::size_t>& y) {
    const auto& g = run.f();
    const Ideal p = g.radical(g.ann(g.h(g.l_set(y))));
    if (!is_prime_ideal(p) || g.fiber(p).none()) return true;
    ++met;
    return run.expect([&](const Facts& f) {
      const PointSet ys = f.l_set(y);
      const Ideal q = f.radical(f.ann(f.h(ys)));
      return !is_prime_ideal(q) || f.fiber(q).none() || f.sl().is_irreducible(ys);
    }, [&] { return "hypothesis holds but Y is not irreducible for " + y_text(run, y); });
  });
  run.note("hypothesis met by " + std::to_string(met) + " subsets");
}

void check_T4_4(Run& run) {
  const auto& r_space = run.ctx().ring_space();
  const auto primes = ring_spec(run.f().ring());
  run.subsets([&](const std::vector<std::size_t>& y) {
    return run.expect([&](const Facts& f) {
      const PointSet ys = f.l_set(y);
      const std::size_t h = f.h(ys);
      const bool irreducible = f.sl().is_irreducible(ys);
      if (f.secondary(h) && !irreducible) return false;
      if (!irreducible) return true;
      std::set<Ideal> upsilon;
      for (std::size_t k : y) upsilon.insert(f.ann(f.soc(k)));
      const std::vector<Ideal> list(upsilon.begin(), upsilon.end());
      const Ideal xi = prime_set_intersection(f.ring(), list);
      if (xi != f.ann(h) || !is_prime_ideal(xi)) return false;
      PointSet pts(primes.size());
      for (const auto& p : list) {
        auto it = std::find(primes.begin(), primes.end(), p);
        if (it == primes.end()) return false;
        pts.set(static_cast<std::size_t>(it - primes.begin()));
      }
      return r_space.is_irreducible(pts);
    }, [&] { return "fails for " + y_text(run, y); });
  });
}

void check_T4_5(Run& run) {
  if (!phi_surjective(run)) return run.skip(hypothesis::kPhiSurjective);
  const auto closed = run.f().sl().closed_sets();
  for (const auto& c : closed) {
    if (!run.expect([&](const Facts& f) {
          bool is_variety = false;
          for (std::size_t k : f.spec_l()) is_variety = is_variety || f.nu_s(k) == c;
          const bool irreducible = f.sl().is_irreducible(c);
          if (irreducible != is_variety) return false;
          return !irreducible || !f.sl().generic_points(c).empty();
        }, [&] { return "closed set " + run.f().l_text(c) + " breaks the characterization"; }))
      return;
  }
}

bool is_component(const Facts& f, const PointSet& set) {
  const auto comps = f.sl().irreducible_components();
  return std::find(comps.begin(), comps.end(), set) != comps.end();
}

void check_T4_6(Run& run) {
  const bool surj = phi_surjective(run);
  for (std::size_t k : run.f().spec_l()) {
    if (!run.expect([&](const Facts& f) {
          const bool minimal = is_minimal_prime_image(f, f.ann(f.soc(k)));
          const bool component = is_component(f, f.nu_s(k));
          if (minimal && !component) return false;
          return !(f.phi_report().surjective && component && !minimal);
        }, [&] { return "fails for K = " + run.sub(k); }))
      return;
  }
  if (!surj) run.note("converse not applicable: phi not surjective");
}

void check_C4_7(Run& run) {
  if (!phi_surjective(run)) return run.skip(hypothesis::kPhiSurjective);
  run.expect([&](const Facts& f) {
    std::set<std::size_t> hit;
    for (const auto& c : f.sl().irreducible_components()) {
      std::optional<std::size_t> image;
      for (std::size_t pos : f.sl().generic_points(c)) {
        const std::size_t q = f.rbar_position(f.ann(f.soc(f.spec_l()[pos])));
        if (image && *image != q) return false;
        image = q;
      }
      if (!image || !hit.insert(*image).second) return false;
    }
    const auto mins = minimal_prime_positions(f);
    return hit == std::set<std::size_t>(mins.begin(), mins.end());
  }, [] { return "components do not correspond bijectively to minimal primes"; });
}

void check_C4_8(Run& run) {
  if (!phi_surjective(run)) return run.skip(hypothesis::kPhiSurjective);
  run.expect([&](const Facts& f) {
    std::vector<std::size_t> a;
    for (std::size_t k : f.spec_l()) {
      if (is_minimal_prime_image(f, f.ann(f.soc(k)))) a.push_back(k);
    }
    if (a.empty()) return false;
    std::set<PointSet> b;
    PointSet cover_l(f.spec_l().size()), cover_r(f.rbar_primes().size()), cover_s(f.spec_s().size());
    for (std::size_t k : a) {
      b.insert(f.nu_s(k));
      cover_l |= f.nu_s(k);
      cover_r |= f.v_bar(f.ann(k));
      cover_s |= f.v_s(k);
    }
    const auto comps = f.sl().irreducible_components();
    if (b != std::set<PointSet>(comps.begin(), comps.end())) return false;
    if (cover_l != f.full_l() || cover_r.count() != cover_r.size() || cover_s != f.full_s()) return false;
    const std::size_t whole = f.lattice().whole_index();
    if (f.l_pos(whole) && (comps.size() != 1 || comps[0] != f.full_l())) return false;
    return true;
  }, [] { return "minimal-prime Spec^L points do not give the irreducible components and covers"; });
}

bool t0(const Facts& f) { return f.sl().properties().t0; }

void check_T4_9(Run& run) {
  run.expect([&](const Facts& f) { return t0(f) == f.fibers_at_most_one(); }, [&] {
    return std::string("T0: ") + (t0(run.f()) ? "yes" : "no") + ", fibers <= 1: " +
           (run.f().fibers_at_most_one() ? "yes" : "no");
  });
}

void check_C4_10(Run& run) {
  run.expect([&](const Facts& f) {
    const bool a = t0(f), b = f.fibers_at_most_one(), c = f.nu_s_injective(), d = f.phi_report().injective;
    return a == b && b == c && c == d;
  }, [] { return "the four conditions disagree"; });
}

void check_T4_11(Run& run) {
  if (!phi_surjective(run)) return run.skip(hypothesis::kPhiSurjective);
  run.expect([&](const Facts& f) { return f.sl().properties().spectral == t0(f); },
             [] { return "spectral and T0 disagree"; });
}

void check_C4_12(Run& run) {
  if (!phi_surjective(run)) return run.skip(hypothesis::kPhiSurjective);
  run.expect([&](const Facts& f) {
    const bool a = f.sl().properties().spectral, b = t0(f), c = f.fibers_at_most_one(),
               d = f.phi_report().injective, e = f.phi_report().homeomorphism;
    return a == b && b == c && c == d && d == e;
  }, [] { return "the five conditions disagree"; });
}

void check_P4_13(Run& run) {
  run.expect([&](const Facts& f) { return f.sl().properties().spectral == f.fibers_at_most_one(); },
             [] { return "spectral and fibers <= 1 disagree"; });
}

bool secondary_contains_minimal(Run& run) {
  const auto& f = run.f();
  const auto& l = f.lattice();
  bool ok = true;
  for (std::size_t i = 0; i < l.size() && ok; ++i) {
    if (!f.secondary(i)) continue;
    bool found = false;
    for (std::size_t j = 0; j < l.size() && !found; ++j) found = f.minimal(j) && l[j].is_subset_of(l[i]);
    ok = found;
  }
  run.hypothesis(hypothesis::kSecondaryHasMinimal, ok);
  if (!ok) run.skip(hypothesis::kSecondaryHasMinimal);
  return ok;
}

void check_L4_14(Run& run) {
  if (!secondary_contains_minimal(run)) return;
  for (std::size_t k : run.f().spec_l()) {
    if (!run.expect([&](const Facts& f) {
          const std::size_t pos = *f.l_pos(k);
          const bool closed = f.sl().is_closed(f.sl().singleton(pos));
          const bool rhs = f.minimal(k) && f.fiber(f.rad_ann(k)) == f.sl().singleton(pos);
          return closed == rhs;
        }, [&] { return "fails for K = " + run.sub(k); }))
      return;
  }
}

void check_L4_15(Run& run) {
  for (const auto& p : ring_spec(run.f().ring())) {
    const auto members = run.f().l_indices(run.f().fiber(p));
    bool go = true;
    run.pairs(members.size(), "fiber", [&](std::size_t a, std::size_t b) {
      go = run.expect([&](const Facts& f) {
        const std::size_t s = f.sum(members[a], members[b]);
        return f.l_pos(s).has_value() && f.rad_ann(s) == p;
      }, [&] { return "K1 + K2 leaves the fiber over " + p.text() + " for " + run.sub(members[a]) + ", " +
                      run.sub(members[b]); });
      return go;
    });
    if (!go) return;
  }
}

void check_C4_16(Run& run) {
  if (!secondary_contains_minimal(run)) return;
  run.expect([&](const Facts& f) {
    std::vector<std::size_t> mins;
    for (std::size_t i = 0; i < f.lattice().size(); ++i) {
      if (f.minimal(i)) mins.push_back(i);
    }
    return f.sl().properties().t1 == (mins == f.spec_l());
  }, [] { return "T1 and Min(M) = Spec^L(M) disagree"; });
}

using Check = void (*)(Run&);

const std::map<std::string, Check>& checks() {
  static const std::map<std::string, Check> table{
      {"T2.1", check_T2_1},   {"T2.2", check_T2_2},   {"T2.3", check_T2_3},   {"L2.4", check_L2_4},
      {"C2.5", check_C2_5},   {"P2.6", check_P2_6},   {"C2.7", check_C2_7},   {"L2.8", check_L2_8},
      {"P2.9", check_P2_9},   {"P2.10", check_P2_10}, {"C2.11", check_C2_11}, {"T2.12", check_T2_12},
      {"L2.13", check_L2_13}, {"T2.14", check_T2_14}, {"C2.15", check_C2_15}, {"T3.1", check_T3_1},
      {"P3.2", check_P3_2},   {"C3.3", check_C3_3},   {"T3.4", check_T3_4},   {"T3.5", check_T3_5},
      {"P4.1", check_P4_1},   {"T4.2", check_T4_2},   {"C4.3", check_C4_3},   {"T4.4", check_T4_4},
      {"T4.5", check_T4_5},   {"T4.6", check_T4_6},   {"C4.7", check_C4_7},   {"C4.8", check_C4_8},
      {"T4.9", check_T4_9},   {"C4.10", check_C4_10}, {"T4.11", check_T4_11}, {"C4.12", check_C4_12},
      {"P4.13", check_P4_13}, {"L4.14", check_L4_14}, {"L4.15", check_L4_15}, {"C4.16", check_C4_16}};
  return table;
}

// Results stated under the standing assumption that both spectra are nonempty.
bool needs_nonempty_spectra(const std::string& id) {
  const auto& ids = result_registry();
  return std::find(ids.begin(), ids.end(), id) > std::find(ids.begin(), ids.end(), "C2.5");
}

}  // namespace

InstanceVerifier::InstanceVerifier(const FiniteModule& module, VerifyOptions options)
    : impl_(std::make_unique<Impl>(module, std::move(options))) {}

InstanceVerifier::~InstanceVerifier() = default;

VerificationResult InstanceVerifier::verify(const std::string& id) {
  const auto& table = checks();
  auto it = table.find(id);
  if (it == table.end()) throw UnknownResultError(id);
  VerificationResult result;
  result.id = id;
  result.instance = impl_->self.module.text();
  Run run(*impl_, result);
  try {
    if (!needs_nonempty_spectra(id) || spectra_nonempty(run)) it->second(run);
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const SpecError*>(&e)) throw;
    run.fail(std::string("internal inconsistency: ") + e.what(), false);
  }
  if (result.status == Status::Pass && run.is_bounded()) result.status = Status::PassBounded;
  return result;
}

std::vector<VerificationResult> InstanceVerifier::verify_all(const std::vector<std::string>& ids) {
  for (const auto& id : ids) {
    if (!is_registered(id)) throw UnknownResultError(id);
  }
  std::vector<VerificationResult> out;
  out.reserve(ids.size());
  for (const auto& id : ids) out.push_back(verify(id));
  return out;
}

VerificationResult verify(const FiniteModule& module, const std::string& id, const VerifyOptions& options) {
  if (!is_registered(id)) throw UnknownResultError(id);
  InstanceVerifier v(module, options);
  return v.verify(id);
}

}  // namespace slspec
