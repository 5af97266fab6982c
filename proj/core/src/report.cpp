#include "slspec/report.hpp"

#include "slspec/maps.hpp"
#include "slspec/spectra.hpp"
#include "slspec/topology.hpp"

#include <map>
#include <sstream>

namespace slspec {

using nlohmann::json;

namespace {

// Point listings stop after `cap` entries; `cut` records that one did.
struct Lister {
  const ModuleSpectra& sp;
  std::size_t cap;
  bool cut = false;

  template <typename Text>
  json list(const PointSet& set, Text&& text) {
    json out = json::array();
    for (auto p = set.find_first(); p != PointSet::npos; p = set.find_next(p)) {
      if (out.size() == cap) {
        cut = true;
        break;
      }
      out.push_back(text(p));
    }
    return out;
  }
  json l_points(const PointSet& set) {
    return list(set, [&](std::size_t p) { return sp.spec_l_point(p).text(); });
  }
  json s_points(const PointSet& set) {
    return list(set, [&](std::size_t p) { return sp.spec_s_point(p).text(); });
  }
};

// The first scalar r with rK neither K nor 0, shown as "r*K = rK".
std::optional<std::string> not_second_witness(const Submodule& k) {
  const auto& m = k.parent();
  for (std::size_t s = 0; s < m.scalar_count(); ++s) {
    const Submodule rk = scalar_image(k, m.scalar(s));
    if (!(rk == k) && !rk.is_zero()) return m.scalar(s).text() + "*" + k.text() + " = " + rk.text();
  }
  return std::nullopt;
}

json properties_json(const FiniteTopology& t) {
  const TopoProperties p = t.properties();
  return json{{"connected", p.connected},
              {"t0", p.t0},
              {"t1", p.t1},
              {"sober", p.sober},
              {"spectral", p.spectral},
              {"quasi_compact", p.quasi_compact},
              {"irreducible", t.is_irreducible(t.full_set())},
              {"discrete", t.is_discrete()},
              {"indiscrete", t.is_indiscrete()}};
}

template <typename PointText>
json map_json(const SpectrumMap& map, PointText&& source_text, const std::vector<Ideal>& primes, Lister& lister) {
  const MapReport r = map_report(map);
  json assignment = json::array();
  for (std::size_t p = 0; p < map.assignment().size(); ++p) {
    if (p == lister.cap) {
      lister.cut = true;
      break;
    }
    assignment.push_back(json{{"point", source_text(p)}, {"image", primes[map(p)].text()}});
  }
  json failures = json::array();
  for (const auto& w : r.witnesses) failures.push_back(w.property + ": " + w.text);
  return json{{"assignment", assignment}, {"injective", r.injective},   {"surjective", r.surjective},
              {"continuous", r.continuous}, {"open", r.open_map},       {"closed", r.closed_map},
              {"homeomorphism", r.homeomorphism}, {"failures", failures}};
}

json cotop_json(const CotopResult& c) {
  json witness = nullptr;
  if (c.witness) witness = json::array({c.witness->first.text(), c.witness->second.text()});
  return json{{"holds", c.holds}, {"witness", witness}};
}

std::string yes_no(const json& b) { return b.get<bool>() ? "yes" : "no"; }

std::string list_text(const json& arr) {
  std::string out = "{";
  for (std::size_t i = 0; i < arr.size(); ++i) out += (i ? " " : "") + arr[i].get<std::string>();
  return out + "}";
}

std::string flags_text(const json& obj, const std::vector<std::string>& keys) {
  std::string out;
  for (const auto& k : keys) out += (out.empty() ? "" : ", ") + k + " " + yes_no(obj.at(k));
  return out;
}

}  // namespace

std::string json_text(const json& doc) { return doc.dump(2) + "\n"; }

json analysis_document(const BuiltInstance& instance, const AnalyzeOptions& options) {
  const FiniteModule& m = instance.module;
  const ModuleSpectra sp(m);
  const auto& lattice = sp.lattice();
  const FiniteTopology sl = build_space(sp, SpaceKind::SecondaryLike);
  const FiniteTopology ss = build_space(sp, SpaceKind::SecondZariski);
  const FiniteTopology base = build_space(sp, SpaceKind::BaseRingSpec);
  const auto rbar_primes = ring_spec(sp.quotient().ring());

  json doc;
  doc["kind"] = "analysis";
  doc["version"] = kReportVersion;
  doc["instance"] = m.text();
  doc["notes"] = instance.notes;
  doc["ring"] = m.ring().text();
  doc["module_size"] = m.size();
  doc["annihilator"] = m.annihilator().text();
  doc["quotient_ring"] = sp.quotient().ring().text();
  doc["submodule_count"] = lattice.size();

  Lister lister{sp, options.max_listed};
  doc["spec_s_count"] = sp.spec_s().size();
  doc["spec_s"] = lister.s_points(full_bits(sp.spec_s().size()));
  doc["spec_l_count"] = sp.spec_l().size();

  json spec_l = json::array();
  for (std::size_t i : sp.spec_l()) {
    if (spec_l.size() == options.max_listed) {
      lister.cut = true;
      break;
    }
    const auto& f = sp.facts(i);
    json entry{{"submodule", lattice[i].text()},
               {"second", f.second},
               {"ann", f.ann.text()},
               {"rad_ann", f.rad_ann.text()},
               {"socle", lattice[f.soc].text()},
               {"not_second_witness", nullptr}};
    if (!f.second) {
      if (auto w = not_second_witness(lattice[i])) entry["not_second_witness"] = *w;
    }
    spec_l.push_back(std::move(entry));
  }
  doc["spec_l"] = spec_l;

  json fibers = json::array();
  for (const auto& p : sp.ring_primes()) {
    const PointSet f = sp.fiber(p);
    fibers.push_back(json{{"prime", p.text()}, {"count", f.count()}, {"points", lister.l_points(f)}});
  }
  doc["fibers"] = fibers;

  json closed = json::array();
  for (std::size_t c = 0; c < sl.closed_sets().size() && c < options.max_listed; ++c) {
    closed.push_back(lister.l_points(sl.closed_sets()[c]));
  }
  json base_list = json::array();
  for (std::size_t b = 0; b < sl.base().size() && b < options.max_listed; ++b) {
    base_list.push_back(json{{"label", sl.base()[b].label}, {"set", lister.l_points(sl.base()[b].open)}});
  }
  doc["topology"] = json{{"points", sl.size()},
                         {"closed_set_count", sl.closed_sets().size()},
                         {"closed_sets", closed},
                         {"base_count", sl.base().size()},
                         {"base", base_list},
                         {"truncated", sl.closed_sets().size() > options.max_listed ||
                                           sl.base().size() > options.max_listed},
                         {"properties", properties_json(sl)}};

  json components = json::array();
  for (const auto& c : sl.irreducible_components()) {
    json generic = json::array();
    for (std::size_t p : sl.generic_points(c)) {
      if (generic.size() == options.max_listed) {
        lister.cut = true;
        break;
      }
      generic.push_back(sp.spec_l_point(p).text());
    }
    components.push_back(json{{"size", c.count()}, {"set", lister.l_points(c)}, {"generic_points", generic}});
  }
  doc["components"] = components;

  json varieties = json::array();
  for (std::size_t i = 0; i < lattice.size() && i < options.max_listed; ++i) {
    varieties.push_back(json{{"submodule", lattice[i].text()},
                             {"nu_s", lister.l_points(sp.nu_s(i))},
                             {"nu_s_star", lister.l_points(sp.nu_s_star(i))},
                             {"v_s", lister.s_points(sp.v_s(i))},
                             {"v_s_star", lister.s_points(sp.v_s_star(i))}});
  }
  doc["varieties"] = varieties;
  doc["varieties_truncated"] = lattice.size() > options.max_listed;

  const SpectrumMap phi = phi_map(sp, sl, base);
  const SpectrumMap psi = psi_map(sp, ss, base);
  bool agree = true;
  for (std::size_t s = 0; s < sp.spec_s().size(); ++s) agree = agree && phi(sp.second_in_spec_l()[s]) == psi(s);
  doc["maps"] = json{
      {"phi", map_json(phi, [&](std::size_t p) { return sp.spec_l_point(p).text(); }, rbar_primes, lister)},
      {"psi", map_json(psi, [&](std::size_t p) { return sp.spec_s_point(p).text(); }, rbar_primes, lister)},
      {"phi_restricts_to_psi", agree}};
  doc["listing"] = json{{"max_listed", options.max_listed}, {"truncated", lister.cut}};

  doc["flags"] = json{{"comultiplication", is_comultiplication(lattice)},
                      {"secondary_cotop", cotop_json(is_secondary_cotop(sp))},
                      {"cotop", cotop_json(is_cotop(sp))},
                      {"secondary", sp.facts(lattice.whole_index()).secondary},
                      {"second", sp.facts(lattice.whole_index()).second}};
  return doc;
}

json result_json(const VerificationResult& r, bool witnesses) {
  json out{{"id", r.id},
           {"status", status_name(r.status)},
           {"cases", r.cases},
           {"hypotheses", r.hypotheses},
           {"skipped", r.skipped.empty() ? json(nullptr) : json(r.skipped)},
           {"notes", r.notes}};
  if (witnesses && r.status == Status::Fail) {
    out["witness"] = json{{"text", r.witness}, {"confirmed", r.witness_confirmed}};
  }
  return out;
}

json verification_document(const BuiltInstance& instance, const std::vector<VerificationResult>& results,
                           bool witnesses) {
  json list = json::array();
  std::map<std::string, std::size_t> counts{
      {"PASS", 0}, {"PASS-BOUNDED", 0}, {"FAIL", 0}, {"SKIPPED-HYPOTHESIS", 0}};
  for (const auto& r : results) {
    list.push_back(result_json(r, witnesses));
    ++counts[status_name(r.status)];
  }
  return json{{"kind", "verification"}, {"version", kReportVersion},  {"instance", instance.module.text()},
              {"notes", instance.notes},  {"results", list},          {"summary", counts}};
}

json corpus_document(const CorpusReport& report, bool witnesses) {
  std::map<std::string, std::size_t> counts{
      {"PASS", 0}, {"PASS-BOUNDED", 0}, {"FAIL", 0}, {"SKIPPED-HYPOTHESIS", 0}};
  json by_result = json::object();
  for (const auto& id : report.ids) {
    by_result[id] = json{{"PASS", 0}, {"PASS-BOUNDED", 0}, {"FAIL", 0}, {"SKIPPED-HYPOTHESIS", 0},
                         {"skipped_by", json::object()}};
  }
  json instances = json::array();
  json failures = json::array();
  json errors = json::array();
  for (const auto& inst : report.instances) {
    if (inst.error) {
      errors.push_back(json{{"instance", inst.instance}, {"error", *inst.error}});
      continue;
    }
    json statuses = json::object();
    json details = json::array();
    for (const auto& r : inst.results) {
      const std::string s = status_name(r.status);
      statuses[r.id] = s;
      ++counts[s];
      auto& slot = by_result[r.id];
      slot[s] = slot[s].get<std::size_t>() + 1;
      if (r.status == Status::SkippedHypothesis) {
        auto& sk = slot["skipped_by"];
        sk[r.skipped] = sk.value(r.skipped, std::size_t{0}) + 1;
      }
      if (r.status != Status::Pass) details.push_back(result_json(r, witnesses));
      if (r.status == Status::Fail) {
        json f{{"instance", inst.instance}, {"id", r.id}};
        if (witnesses) f["witness"] = json{{"text", r.witness}, {"confirmed", r.witness_confirmed}};
        failures.push_back(std::move(f));
      }
    }
    instances.push_back(json{{"instance", inst.instance}, {"notes", inst.notes}, {"statuses", statuses},
                             {"details", details}});
  }
  return json{{"kind", "corpus"},
              {"version", kReportVersion},
              {"corpus", json{{"seed", report.seed},
                              {"subset_cap", report.subset_cap},
                              {"families", report.families},
                              {"instance_count", report.instances.size()}}},
              {"ids", report.ids},
              {"summary", counts},
              {"by_result", by_result},
              {"failures", failures},
              {"errors", errors},
              {"instances", instances}};
}

std::string analysis_text(const json& doc) {
  std::ostringstream out;
  out << "instance: " << doc["instance"].get<std::string>() << "\n";
  for (const auto& n : doc["notes"]) out << "note: " << n.get<std::string>() << "\n";
  out << "ring: " << doc["ring"].get<std::string>() << ", |M| = " << doc["module_size"].get<std::size_t>()
      << ", Ann_R(M) = " << doc["annihilator"].get<std::string>()
      << ", R/Ann_R(M) = " << doc["quotient_ring"].get<std::string>() << "\n";
  out << "submodules: " << doc["submodule_count"].get<std::size_t>() << "\n";
  out << "Spec^s (" << doc["spec_s_count"].get<std::size_t>() << "): " << list_text(doc["spec_s"]) << "\n";
  out << "Spec^L (" << doc["spec_l_count"].get<std::size_t>() << "):\n";
  for (const auto& k : doc["spec_l"]) {
    out << "  " << k["submodule"].get<std::string>() << "  Ann " << k["ann"].get<std::string>() << ", sqrt Ann "
        << k["rad_ann"].get<std::string>() << ", soc " << k["socle"].get<std::string>();
    if (k["second"].get<bool>()) {
      out << ", second";
    } else {
      out << ", not second";
      if (!k["not_second_witness"].is_null()) out << " (" << k["not_second_witness"].get<std::string>() << ")";
    }
    out << "\n";
  }
  out << "fibers:\n";
  for (const auto& f : doc["fibers"]) {
    out << "  " << f["prime"].get<std::string>() << ": " << list_text(f["points"]);
    if (f["count"].get<std::size_t>() > f["points"].size()) out << " of " << f["count"].get<std::size_t>();
    out << "\n";
  }
  const auto& t = doc["topology"];
  out << "SL-topology: " << t["points"].get<std::size_t>() << " points, "
      << t["closed_set_count"].get<std::size_t>() << " closed sets\n";
  for (const auto& c : t["closed_sets"]) {
    std::string s = "{";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + c[i].get<std::string>();
    out << "  closed " << s << "}\n";
  }
  for (const auto& b : t["base"]) out << "  " << b["label"].get<std::string>() << " = " << list_text(b["set"]) << "\n";
  if (t["truncated"].get<bool>()) out << "  (listing truncated)\n";
  out << "properties: "
      << flags_text(t["properties"], {"connected", "t0", "t1", "sober", "spectral", "quasi_compact", "irreducible",
                                      "discrete", "indiscrete"})
      << "\n";
  out << "components:\n";
  for (const auto& c : doc["components"]) {
    out << "  " << list_text(c["set"]) << " size " << c["size"].get<std::size_t>() << ", generic "
        << list_text(c["generic_points"]) << "\n";
  }
  out << "varieties:\n";
  for (const auto& v : doc["varieties"]) {
    out << "  " << v["submodule"].get<std::string>() << ": nu_s " << list_text(v["nu_s"]) << ", nu_s* "
        << list_text(v["nu_s_star"]) << "\n";
  }
  if (doc["varieties_truncated"].get<bool>()) out << "  (listing truncated)\n";
  for (const char* name : {"phi", "psi"}) {
    const auto& mp = doc["maps"][name];
    out << name << ": "
        << flags_text(mp, {"injective", "surjective", "continuous", "open", "closed", "homeomorphism"}) << "\n";
    for (const auto& a : mp["assignment"]) {
      out << "  " << a["point"].get<std::string>() << " -> " << a["image"].get<std::string>() << "\n";
    }
    for (const auto& f : mp["failures"]) out << "  " << f.get<std::string>() << "\n";
  }
  out << "phi restricts to psi: " << yes_no(doc["maps"]["phi_restricts_to_psi"]) << "\n";
  const auto& fl = doc["flags"];
  out << "comultiplication: " << yes_no(fl["comultiplication"]) << "\n";
  for (const char* name : {"secondary_cotop", "cotop"}) {
    out << name << ": " << yes_no(fl[name]["holds"]);
    if (!fl[name]["witness"].is_null()) {
      out << " (witness " << fl[name]["witness"][0].get<std::string>() << ", "
          << fl[name]["witness"][1].get<std::string>() << ")";
    }
    out << "\n";
  }
  out << "M secondary: " << yes_no(fl["secondary"]) << ", M second: " << yes_no(fl["second"]) << "\n";
  if (doc["listing"]["truncated"].get<bool>()) {
    out << "point listings cut at " << doc["listing"]["max_listed"].get<std::size_t>() << " entries\n";
  }
  return out.str();
}

namespace {

void result_lines(std::ostringstream& out, const json& r, const std::string& indent) {
  out << indent << r["id"].get<std::string>() << " " << r["status"].get<std::string>();
  if (!r["skipped"].is_null()) out << " (" << r["skipped"].get<std::string>() << ")";
  out << "\n";
  for (const auto& n : r["notes"]) out << indent << "  note: " << n.get<std::string>() << "\n";
  if (r.contains("witness")) {
    out << indent << "  witness: " << r["witness"]["text"].get<std::string>()
        << (r["witness"]["confirmed"].get<bool>() ? " (confirmed)" : " (not confirmed by the reference checker)")
        << "\n";
  }
}

std::string summary_line(const json& s) {
  return "PASS " + std::to_string(s["PASS"].get<std::size_t>()) + ", PASS-BOUNDED " +
         std::to_string(s["PASS-BOUNDED"].get<std::size_t>()) + ", FAIL " +
         std::to_string(s["FAIL"].get<std::size_t>()) + ", SKIPPED-HYPOTHESIS " +
         std::to_string(s["SKIPPED-HYPOTHESIS"].get<std::size_t>());
}

}  // namespace

std::string verification_text(const json& doc) {
  std::ostringstream out;
  out << "instance: " << doc["instance"].get<std::string>() << "\n";
  for (const auto& n : doc["notes"]) out << "note: " << n.get<std::string>() << "\n";
  for (const auto& r : doc["results"]) result_lines(out, r, "");
  out << "summary: " << summary_line(doc["summary"]) << "\n";
  return out.str();
}

std::string corpus_text(const json& doc) {
  std::ostringstream out;
  const auto& c = doc["corpus"];
  out << "corpus: " << c["instance_count"].get<std::size_t>() << " instances, seed " << c["seed"].get<std::uint64_t>()
      << ", subset cap " << c["subset_cap"].get<std::size_t>() << "\n";
  for (const auto& f : c["families"]) out << "family: " << f.get<std::string>() << "\n";
  out << "results: " << doc["ids"].size() << "\n";
  for (const auto& [id, counts] : doc["by_result"].items()) {
    out << "  " << id << ": " << summary_line(counts);
    for (const auto& [hyp, n] : counts["skipped_by"].items()) out << "; skipped " << n.get<std::size_t>() << "x (" << hyp << ")";
    out << "\n";
  }
  for (const auto& e : doc["errors"]) {
    out << "error: " << e["instance"].get<std::string>() << ": " << e["error"].get<std::string>() << "\n";
  }
  for (const auto& inst : doc["instances"]) {
    for (const auto& r : inst["details"]) {
      if (r["status"] != "FAIL") continue;
      out << "FAIL " << inst["instance"].get<std::string>() << "\n";
      result_lines(out, r, "  ");
    }
  }
  out << "summary: " << summary_line(doc["summary"]) << "\n";
  return out.str();
}

}  // namespace slspec
