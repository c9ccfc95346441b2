#include "depict/scenario.hpp"

#include <algorithm>

namespace depict {

namespace {

std::optional<std::uint64_t> parse_field(const std::string& f) {
  if (f == "rational") return std::nullopt;
  if (f.rfind("fp:", 0) == 0) {
    try {
      return std::stoull(f.substr(3));
    } catch (const std::exception&) {
      throw error("bad field spec: " + f);
    }
  }
  throw error("bad field spec: " + f + " (expected rational or fp:<p>)");
}

std::string field_string(const std::optional<std::uint64_t>& m) {
  return m ? "fp:" + std::to_string(*m) : "rational";
}

DomainPtr build_ring(const std::string& name, const Json& spec,
                     std::optional<std::uint64_t> modulus) {
  if (spec.contains("semigroup")) {
    std::vector<std::vector<long long>> gens;
    for (const auto& row : spec.at("semigroup"))
      gens.push_back(row.get<std::vector<long long>>());
    if (gens.empty()) throw error("ring " + name + ": empty semigroup");
    int rank = (int)gens[0].size();
    std::vector<std::string> tags, amb;
    if (spec.contains("tags")) tags = spec.at("tags").get<std::vector<std::string>>();
    if (spec.contains("ambient_vars"))
      amb = spec.at("ambient_vars").get<std::vector<std::string>>();
    return toric_presentation(AffineSemigroup::make(rank, std::move(gens)),
                              std::move(tags), std::move(amb), modulus);
  }
  if (!spec.contains("vars"))
    throw error("ring " + name + ": needs either vars or semigroup");
  auto ctx = VarContext::make(spec.at("vars").get<std::vector<std::string>>(), modulus);
  std::vector<Polynomial> rels;
  if (spec.contains("relations"))
    for (const auto& r : spec.at("relations"))
      rels.push_back(parse_poly(r.get<std::string>(), ctx));
  if (rels.empty()) return AffineDomain::polynomial_ring(ctx);
  return AffineDomain::presented(ctx, std::move(rels), Primality::asserted);
}

std::vector<Polynomial> parse_gens(const Json& arr, const CtxPtr& ctx) {
  std::vector<Polynomial> out;
  for (const auto& g : arr) out.push_back(parse_poly(g.get<std::string>(), ctx));
  return out;
}

std::vector<std::string> basis_strings(const IdealHandle& I) {
  std::vector<std::string> out;
  for (const auto& g : I.groebner(MonomialOrder::grevlex()).elements)
    out.push_back(g.to_string());
  return out;
}

std::string justification_string(GhtResult::Justification j) {
  switch (j) {
    case GhtResult::Justification::z_membership: return "Z-membership";
    case GhtResult::Justification::codim1_T: return "codim1-T";
    case GhtResult::Justification::bounds_only: return "bounds-only";
  }
  return "?";
}

const DepictionEntry& entry_for(const Scenario& s, const Json& q,
                                const char* key = "ring") {
  if (!q.contains(key)) return s.scene().ambient_entry();
  std::string name = q.at(key).get<std::string>();
  const DepictionEntry* e = s.scene().find(name);
  if (!e) throw error("unknown depiction: " + name);
  return *e;
}

ContractedPrime prime_for(const Scenario& s, const Json& q) {
  const DepictionEntry& e = entry_for(s, q);
  const Json& p = q.at("prime");
  if (p.is_string()) {
    if (p.get<std::string>() != "smeared")
      throw error("prime must be \"smeared\" or a generator list");
    return s.scene().smeared_prime(e);
  }
  return s.scene().contracted_prime(e, parse_gens(p, e.ring->ctx()));
}

Json ght_json(const GhtResult& g) {
  Json r;
  r["lower"] = g.lower;
  r["upper"] = g.upper;
  r["exact"] = g.exact;
  r["justification"] = justification_string(g.justification);
  return r;
}

Json entry_json(const Scenario& s, const DepictionEntry& e) {
  Json t;
  t["name"] = e.name;
  t["vars"] = e.ring->ctx()->names;
  t["relations"] = Json::array();
  for (const auto& g : e.ring->defining().generators())
    t["relations"].push_back(g.to_string());
  if (e.ring->realization()) {
    std::vector<std::string> imgs;
    for (const auto& f : e.ring->realization()->images) imgs.push_back(f.to_string());
    std::sort(imgs.begin(), imgs.end());
    t["realized_generators"] = imgs;
  }
  (void)s;
  return t;
}

}  // namespace

DomainPtr Scenario::ring(const std::string& name) const {
  for (const auto& [n, r] : rings_)
    if (n == name) return r;
  throw error("unknown ring: " + name);
}

Scenario Scenario::from_json_text(const std::string& text,
                                  std::optional<std::uint64_t> field_override,
                                  bool field_forced) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const std::exception& e) {
    throw error(std::string("scenario parse error: ") + e.what());
  }
  Scenario s;
  s.name_ = doc.value("name", "scenario");
  s.modulus_ = parse_field(doc.value("field", "rational"));
  if (field_forced) s.modulus_ = field_override;
  if (s.modulus_ && (*s.modulus_ < 2 || *s.modulus_ >= (1ull << 31)))
    throw error("field characteristic out of range");

  if (!doc.contains("rings") || !doc.at("rings").is_object())
    throw error("scenario needs a rings object");
  for (const auto& [name, spec] : doc.at("rings").items())
    s.rings_.emplace_back(name, build_ring(name, spec, s.modulus_));

  if (!doc.contains("subring")) throw error("scenario needs a subring section");
  const Json& sub = doc.at("subring");
  std::string amb_name = sub.at("ambient").get<std::string>();
  DomainPtr ambient = s.ring(amb_name);
  SubringKplusI R(ambient, parse_gens(sub.at("ideal"), ambient->ctx()));

  std::vector<DepictionEntry> entries;
  if (doc.contains("depictions"))
    for (const auto& d : doc.at("depictions")) {
      DepictionEntry e;
      e.name = d.at("ring").get<std::string>();
      if (d.contains("fact")) {
        e.rel = DepictionEntry::Rel::literature;
        e.fact = d.at("fact").get<std::string>();
        entries.push_back(std::move(e));
        continue;
      }
      e.ring = s.ring(e.name);
      if (e.name == amb_name) {
        e.rel = DepictionEntry::Rel::ambient;
      } else if (d.contains("inclusion_images")) {
        e.rel = DepictionEntry::Rel::overring;
        e.inclusion_images = parse_gens(d.at("inclusion_images"), e.ring->ctx());
      } else if (e.ring->realization()) {
        e.rel = DepictionEntry::Rel::subring;
      } else {
        throw error("depiction " + e.name +
                    ": needs inclusion_images, a realization, or a fact");
      }
      entries.push_back(std::move(e));
    }
  s.scene_.emplace(std::move(R), std::move(entries));

  if (doc.contains("queries")) s.queries_ = doc.at("queries");
  if (doc.contains("notes"))
    for (const auto& n : doc.at("notes")) s.notes_.push_back(n.get<std::string>());
  return s;
}

Json run_query(const Scenario& s, const Json& query, bool& unsupported,
               std::vector<std::string>& warnings,
               std::vector<std::string>& citations) {
  const DepictionScene& scene = s.scene();
  std::string cmd = query.at("command").get<std::string>();
  Json r;
  r["command"] = cmd;
  if (cmd == "depict-check") {
    const auto& e = entry_for(s, query);
    r["ring"] = e.name;
    r["criterion"] = "dim S/I >= 1";
    r["result"] = scene.check_depiction(e);
    citations.push_back("B2-1.3");
  } else if (cmd == "codim1") {
    const auto& e = entry_for(s, query);
    r["ring"] = e.name;
    int h = ideal_height(*scene.ideal_in(e));
    r["ideal_height"] = h;
    r["result"] = (h >= 2);
  } else if (cmd == "u-locus") {
    const auto& e = entry_for(s, query);
    r["ring"] = e.name;
    auto u = scene.u_locus(e);
    r["kind"] = "open-complement";
    r["vanishing"] = basis_strings(u.vanishing.lift);
    citations.push_back("B3-2.8");
  } else if (cmd == "in-z") {
    auto p = prime_for(s, query);
    r["ring"] = entry_for(s, query).name;
    r["prime"] = query.at("prime");
    r["result"] = in_Z(p);
  } else if (cmd == "maxdep") {
    const auto& e = entry_for(s, query);
    r["ring"] = e.name;
    auto rep = scene.maximal_depiction(e);
    r["is_depiction"] = rep.is_depiction;
    r["codim1"] = rep.codim1;
    r["T"] = rep.T ? entry_json(s, *rep.T) : Json();
    r["T_is_base"] = rep.T_is_base;
    r["T_saturated"] = rep.T_saturated;
    r["note"] = rep.note;
    if (rep.normalization_unavailable) unsupported = true;
  } else if (cmd == "ght" || cmd == "gdim") {
    auto p = prime_for(s, query);
    r["ring"] = entry_for(s, query).name;
    r["prime"] = query.at("prime");
    GhtResult g =
        cmd == "ght" ? scene.geometric_height(p) : scene.gdim_point(p);
    r.update(ght_json(g));
  } else if (cmd == "height") {
    const auto& e = entry_for(s, query);
    r["ring"] = e.name;
    r["ideal"] = query.at("ideal");
    r["result"] = ideal_height(
        RingIdeal::make(e.ring, parse_gens(query.at("ideal"), e.ring->ctx())));
  } else if (cmd == "fiber") {
    auto p = prime_for(s, query);
    const auto& t = entry_for(s, query, "target");
    r["ring"] = entry_for(s, query).name;
    r["prime"] = query.at("prime");
    r["target"] = t.name;
    auto f = scene.fiber_over(p, t);
    r["smeared"] = f.smeared;
    r["set"] = basis_strings(f.set_ideal.lift);
    r["unique_minimal"] = f.unique_minimal;
    r["minimal_element"] =
        f.minimal_element ? Json(basis_strings(f.minimal_element->lift)) : Json();
  } else if (cmd == "saturated") {
    const auto& t = entry_for(s, query, "target");
    r["target"] = t.name;
    r["test_primes"] = query.at("test_primes");
    std::vector<std::vector<Polynomial>> tests;
    for (const auto& gens : query.at("test_primes"))
      tests.push_back(parse_gens(gens, t.ring->ctx()));
    r["result"] = scene.is_saturated_on(t, tests);
  } else if (cmd == "contraction-equal") {
    const auto& e = entry_for(s, query);
    r["ring"] = e.name;
    r["prime1"] = query.at("prime1");
    r["prime2"] = query.at("prime2");
    auto p1 = scene.contracted_prime(e, parse_gens(query.at("prime1"), e.ring->ctx()));
    auto p2 = scene.contracted_prime(e, parse_gens(query.at("prime2"), e.ring->ctx()));
    r["result"] = scene.contraction_equal(p1, p2);
  } else if (cmd == "normalize") {
    std::string name = query.at("ring").get<std::string>();
    DomainPtr ring = s.ring(name);
    r["ring"] = name;
    if (ring->semigroup()) {
      AffineSemigroup A =
          AffineSemigroup::make(ring->semigroup()->rank, ring->semigroup()->gens);
      r["generators"] = A.gens;
      AffineSemigroup sat = saturate_semigroup(A);
      r["saturation"] = sat.gens;
      r["normal"] = is_normal_semigroup(A);
    } else if (ring->is_polynomial_ring()) {
      r["normal"] = true;
      r["note"] = "polynomial rings are normal";
    } else {
      r["note"] = "normalization unavailable for this presentation";
      unsupported = true;
    }
  } else {
    throw error("unknown command: " + cmd);
  }
  (void)warnings;
  return r;
}

RunResult run_queries(const Scenario& s, const Json& queries) {
  RunResult out;
  out.report["scenario"] = s.name();
  out.report["field"] = field_string(s.modulus());
  std::vector<std::string> warnings = s.notes();
  std::vector<std::string> citations;
  for (const auto& d : s.scene().depictions())
    if (d.rel == DepictionEntry::Rel::literature) {
      warnings.push_back("depiction '" + d.name +
                         "' is a literature fact (" + d.fact +
                         "); declared, not computed");
      citations.push_back(d.fact);
    }
  Json results = Json::array();
  for (const auto& q : queries)
    results.push_back(run_query(s, q, out.unsupported, warnings, citations));
  std::sort(citations.begin(), citations.end());
  citations.erase(std::unique(citations.begin(), citations.end()), citations.end());
  out.report["results"] = std::move(results);
  out.report["warnings"] = warnings;
  out.report["citations"] = citations;
  return out;
}

RunResult run_queries(const Scenario& s) { return run_queries(s, s.queries()); }

std::string render_text(const Json& report) {
  std::string out;
  out += "scenario: " + report.at("scenario").get<std::string>() + " (field " +
         report.at("field").get<std::string>() + ")\n";
  for (const auto& r : report.at("results")) {
    out += "-- " + r.at("command").get<std::string>() + "\n";
    for (const auto& [k, v] : r.items()) {
      if (k == "command") continue;
      out += "   " + k + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
    }
  }
  for (const auto& w : report.at("warnings"))
    out += "warning: " + w.get<std::string>() + "\n";
  if (!report.at("citations").empty()) out += "citations: " + report.at("citations").dump() + "\n";
  return out;
}

namespace {

const char* kPaperSn = R"json(
{
  "name": "paper-sn",
  "field": "rational",
  "rings": {
    "S_1": {"vars": ["x", "y", "z"]},
    "S_2": {"semigroup": [[1,0,0],[0,1,0],[1,0,1],[0,1,1],[0,0,2]],
            "tags": ["x", "y", "a", "b", "c"], "ambient_vars": ["x", "y", "z"]},
    "S_3": {"semigroup": [[1,0,0],[0,1,0],[1,0,1],[0,1,1],[1,0,2],[0,1,2],[0,0,3]],
            "tags": ["x", "y", "a", "b", "c", "d", "e"], "ambient_vars": ["x", "y", "z"]}
  },
  "subring": {"ambient": "S_1", "ideal": ["x", "y"]},
  "depictions": [{"ring": "S_1"}, {"ring": "S_2"}, {"ring": "S_3"}],
  "queries": [
    {"command": "depict-check", "ring": "S_1"},
    {"command": "depict-check", "ring": "S_2"},
    {"command": "depict-check", "ring": "S_3"},
    {"command": "codim1", "ring": "S_1"},
    {"command": "codim1", "ring": "S_2"},
    {"command": "codim1", "ring": "S_3"},
    {"command": "maxdep", "ring": "S_1"},
    {"command": "maxdep", "ring": "S_2"},
    {"command": "maxdep", "ring": "S_3"},
    {"command": "normalize", "ring": "S_2"},
    {"command": "ght", "prime": "smeared"},
    {"command": "gdim", "prime": "smeared"},
    {"command": "fiber", "prime": "smeared", "target": "S_1"},
    {"command": "saturated", "target": "S_1", "test_primes": [["x", "y"]]}
  ]
}
)json";

const char* kPaperNot1 = R"json(
{
  "name": "paper-not1",
  "field": "rational",
  "rings": {
    "S": {"vars": ["x", "y"]},
    "T": {"vars": ["x", "y", "w"], "relations": ["x*w - 1"]}
  },
  "subring": {"ambient": "S", "ideal": ["x^2 - x", "x*y"]},
  "depictions": [{"ring": "S"}, {"ring": "T", "inclusion_images": ["x", "y"]}],
  "queries": [
    {"command": "depict-check", "ring": "S"},
    {"command": "codim1", "ring": "S"},
    {"command": "u-locus", "ring": "S"},
    {"command": "u-locus", "ring": "T"},
    {"command": "in-z", "ring": "S", "prime": ["x"]},
    {"command": "in-z", "ring": "S", "prime": ["x - 2", "y"]},
    {"command": "maxdep", "ring": "S"},
    {"command": "ght", "prime": "smeared"},
    {"command": "gdim", "prime": "smeared"},
    {"command": "height", "ring": "T", "ideal": ["x - 1", "y"]},
    {"command": "fiber", "prime": "smeared", "target": "T"},
    {"command": "saturated", "target": "T", "test_primes": [["x - 1", "y"]]},
    {"command": "contraction-equal", "ring": "S", "prime1": ["x"], "prime2": ["x - 1", "y"]}
  ]
}
)json";

const char* kPaperFinal = R"json(
{
  "name": "paper-final",
  "field": "rational",
  "rings": {
    "T": {"vars": ["x", "y"]}
  },
  "subring": {"ambient": "T", "ideal": ["x"]},
  "depictions": [{"ring": "T"}],
  "notes": [
    "the subring is read as k + x*T: only the ring T = k[x,y] is defined in this example, so the ideal is taken in T"
  ],
  "queries": [
    {"command": "depict-check", "ring": "T"},
    {"command": "codim1", "ring": "T"},
    {"command": "u-locus", "ring": "T"},
    {"command": "ght", "prime": "smeared"},
    {"command": "saturated", "target": "T", "test_primes": [["x"]]}
  ]
}
)json";

const char* kPaperIntro = R"json(
{
  "name": "paper-intro",
  "field": "rational",
  "rings": {
    "S": {"vars": ["x", "y", "z"]}
  },
  "subring": {"ambient": "S", "ideal": ["x*y"]},
  "depictions": [
    {"ring": "S"},
    {"ring": "S_inv_x", "fact": "B3-3.19"},
    {"ring": "S_inv_y", "fact": "B3-3.19"}
  ],
  "queries": [
    {"command": "depict-check", "ring": "S"},
    {"command": "codim1", "ring": "S"},
    {"command": "maxdep", "ring": "S"}
  ]
}
)json";

}  // namespace

std::vector<std::string> Scenario::bundled_ids() {
  return {"paper-sn", "paper-not1", "paper-final", "paper-intro"};
}

Scenario Scenario::bundled(const std::string& id,
                           std::optional<std::uint64_t> field_override,
                           bool field_forced) {
  const char* text = nullptr;
  if (id == "paper-sn") text = kPaperSn;
  else if (id == "paper-not1") text = kPaperNot1;
  else if (id == "paper-final") text = kPaperFinal;
  else if (id == "paper-intro") text = kPaperIntro;
  if (!text) throw error("unknown bundled example: " + id);
  return from_json_text(text, field_override, field_forced);
}

}  // namespace depict
