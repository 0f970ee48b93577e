#include <set>

#include "tcg/error.hpp"
#include "tcg/io.hpp"

namespace tcg {

namespace {

template <typename T>
Json opt(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <typename T>
std::optional<T> get_opt(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse, std::string(what) + ": " + e.what());
  }
}

MapKind map_kind_from(const std::string& s) {
  if (s == to_string(MapKind::automorphism)) return MapKind::automorphism;
  if (s == to_string(MapKind::anti_automorphism)) return MapKind::anti_automorphism;
  throw Error(ErrorKind::parse, "unknown map kind '" + s + "'");
}

Json vertex_set_json(const VertexSet& s) { return s.members(); }

VertexSet vertex_set_from(const Json& j, int n) {
  VertexSet s(n);
  for (int v : j.get<std::vector<int>>()) {
    if (v < 0 || v >= n) throw Error(ErrorKind::parse, "vertex out of range in witness");
    s.insert(v);
  }
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------

Json to_json(const Rational& r) {
  return Json{{"num", r.num()}, {"den", r.den()}, {"decimal", r.to_double()}};
}

Rational rational_from_json(const Json& j) {
  return guarded("rational JSON", [&] {
    return Rational(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>());
  });
}

Json to_json(const SpectrumResult& s) {
  return Json{{"t", s.t},
              {"lambda", s.lambda},
              {"trivial_multiplicity", s.trivial_multiplicity},
              {"nontrivial_max", opt(s.nontrivial_max)},
              {"nontrivial_min", opt(s.nontrivial_min)},
              {"disconnected", s.disconnected()},
              {"tol", s.tol}};
}

SpectrumResult spectrum_from_json(const Json& j) {
  return guarded("spectrum JSON", [&] {
    SpectrumResult s;
    s.t = j.at("t").get<std::vector<double>>();
    s.lambda = j.at("lambda").get<std::vector<double>>();
    s.trivial_multiplicity = j.at("trivial_multiplicity").get<int>();
    s.nontrivial_max = get_opt<double>(j, "nontrivial_max");
    s.nontrivial_min = get_opt<double>(j, "nontrivial_min");
    s.tol = j.at("tol").get<double>();
    return s;
  });
}

Json to_json(const CheegerReport& c) {
  return Json{{"n", c.h_witness.universe()},
              {"h", to_json(c.h)},
              {"frak_h", to_json(c.edge_h)},
              {"h_witness", vertex_set_json(c.h_witness)},
              {"frak_h_witness", vertex_set_json(c.edge_witness)},
              {"n_subsets_scanned", c.subsets_scanned}};
}

CheegerReport cheeger_from_json(const Json& j) {
  return guarded("Cheeger JSON", [&] {
    const int n = j.at("n").get<int>();
    CheegerReport c;
    c.h = rational_from_json(j.at("h"));
    c.edge_h = rational_from_json(j.at("frak_h"));
    c.h_witness = vertex_set_from(j.at("h_witness"), n);
    c.edge_witness = vertex_set_from(j.at("frak_h_witness"), n);
    c.subsets_scanned = j.at("n_subsets_scanned").get<std::uint64_t>();
    return c;
  });
}

// ---------------------------------------------------------------------------

Json to_json(const VerificationRecord& r) {
  Json hyps = Json::array();
  for (const auto& h : r.hypotheses)
    hyps.push_back(Json{{"name", h.name}, {"passed", h.passed}, {"witness", h.witness}});
  Json extras = Json::array();
  for (const auto& x : r.extra_checks)
    extras.push_back(Json{{"name", x.name},
                          {"lower_bound", x.lower_bound},
                          {"margin", x.margin},
                          {"passed", x.passed}});
  Json sigma = nullptr;
  if (r.sigma)
    sigma = Json{{"perm", r.sigma->perm},
                 {"kind", to_string(r.sigma->kind)},
                 {"order", r.sigma->order}};
  return Json{{"case", to_string(r.theorem)},
              {"group", r.group},
              {"generators", r.generators},
              {"sigma", sigma},
              {"subgroup", opt(r.subgroup)},
              {"hypotheses", hyps},
              {"n", r.n},
              {"d", r.d},
              {"k", opt(r.k)},
              {"h", r.h ? to_json(*r.h) : Json(nullptr)},
              {"frak_h", r.edge_h ? to_json(*r.edge_h) : Json(nullptr)},
              {"bipartite", opt(r.bipartite)},
              {"lower_bound", opt(r.lower_bound)},
              {"upper_bound", opt(r.upper_bound)},
              {"lower_gap_exact", opt(r.lower_gap_exact)},
              {"nontrivial_min", opt(r.nontrivial_min)},
              {"nontrivial_max", opt(r.nontrivial_max)},
              {"margin_lower", opt(r.margin_lower)},
              {"margin_upper", opt(r.margin_upper)},
              {"extra_checks", extras},
              {"verdict", to_string(r.verdict)},
              {"note", r.note}};
}

VerificationRecord record_from_json(const Json& j) {
  return guarded("record JSON", [&] {
    VerificationRecord r;
    r.theorem = theorem_case_from_string(j.at("case").get<std::string>());
    r.group = j.at("group").get<std::string>();
    r.generators = j.at("generators").get<std::vector<Element>>();
    if (!j.at("sigma").is_null()) {
      const Json& s = j.at("sigma");
      r.sigma = SigmaInfo{s.at("perm").get<std::vector<Element>>(),
                          map_kind_from(s.at("kind").get<std::string>()),
                          s.at("order").get<int>()};
    }
    r.subgroup = get_opt<std::vector<Element>>(j, "subgroup");
    for (const Json& h : j.at("hypotheses"))
      r.hypotheses.push_back({h.at("name").get<std::string>(), h.at("passed").get<bool>(),
                              h.at("witness").get<std::string>()});
    r.n = j.at("n").get<int>();
    r.d = j.at("d").get<int>();
    r.k = get_opt<int>(j, "k");
    if (!j.at("h").is_null()) r.h = rational_from_json(j.at("h"));
    if (!j.at("frak_h").is_null()) r.edge_h = rational_from_json(j.at("frak_h"));
    r.bipartite = get_opt<bool>(j, "bipartite");
    r.lower_bound = get_opt<double>(j, "lower_bound");
    r.upper_bound = get_opt<double>(j, "upper_bound");
    r.lower_gap_exact = get_opt<std::string>(j, "lower_gap_exact");
    r.nontrivial_min = get_opt<double>(j, "nontrivial_min");
    r.nontrivial_max = get_opt<double>(j, "nontrivial_max");
    r.margin_lower = get_opt<double>(j, "margin_lower");
    r.margin_upper = get_opt<double>(j, "margin_upper");
    for (const Json& x : j.at("extra_checks"))
      r.extra_checks.push_back({x.at("name").get<std::string>(),
                                x.at("lower_bound").get<double>(),
                                x.at("margin").get<double>(), x.at("passed").get<bool>()});
    r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    r.note = j.at("note").get<std::string>();
    return r;
  });
}

// ---------------------------------------------------------------------------

Json to_json(const SweepConfig& c) {
  std::vector<std::string> cases;
  for (TheoremCase t : c.cases) cases.push_back(to_string(t));
  return Json{{"min_order", c.min_order},
              {"max_order", c.max_order},
              {"cases", cases},
              {"seed", c.seed},
              {"exhaustive_order", c.exhaustive_order},
              {"schreier_exhaustive_order", c.schreier_exhaustive_order},
              {"random_s", c.random_s},
              {"tol", c.tol},
              {"cheeger_cap", c.cheeger_cap},
              {"group_cap", c.group_cap},
              {"records", to_string(c.records)}};
}

SweepConfig sweep_config_from_json(const Json& j) {
  static const std::set<std::string> known = {
      "min_order", "max_order", "cases",   "seed",        "exhaustive_order",
      "schreier_exhaustive_order", "random_s", "tol", "cheeger_cap", "group_cap",
      "records"};
  if (!j.is_object()) throw Error(ErrorKind::usage, "sweep config must be a JSON object");
  for (const auto& [key, value] : j.items())
    if (!known.count(key)) throw Error(ErrorKind::usage, "unknown sweep config key '" + key + "'");
  return guarded("sweep config JSON", [&] {
    SweepConfig c;
    c.min_order = j.value("min_order", c.min_order);
    c.max_order = j.value("max_order", c.max_order);
    if (j.contains("cases")) {
      c.cases.clear();
      for (const auto& s : j.at("cases").get<std::vector<std::string>>())
        c.cases.push_back(theorem_case_from_string(s));
    }
    c.seed = j.value("seed", c.seed);
    c.exhaustive_order = j.value("exhaustive_order", c.exhaustive_order);
    c.schreier_exhaustive_order = j.value("schreier_exhaustive_order", c.schreier_exhaustive_order);
    c.random_s = j.value("random_s", c.random_s);
    c.tol = j.value("tol", c.tol);
    c.cheeger_cap = j.value("cheeger_cap", c.cheeger_cap);
    c.group_cap = j.value("group_cap", c.group_cap);
    if (j.contains("records"))
      c.records = record_policy_from_string(j.at("records").get<std::string>());
    if (c.max_order < 1 || c.cheeger_cap < 1 || c.group_cap < 1 || c.random_s < 0 ||
        !(c.tol >= 0))
      throw Error(ErrorKind::usage, "sweep config caps must be positive");
    return c;
  });
}

Json to_json(const SweepReport& r) {
  Json summaries = Json::array();
  for (const auto& s : r.summaries)
    summaries.push_back(Json{{"case", to_string(s.theorem)},
                             {"groups", s.groups},
                             {"maps", s.maps},
                             {"instances", s.instances},
                             {"holds", s.holds},
                             {"hypotheses_not_met", s.hypotheses_not_met},
                             {"violations", s.violations},
                             {"violations_bipartite", s.violations_bipartite},
                             {"min_margin_lower", opt(s.min_margin_lower)},
                             {"min_margin_upper", opt(s.min_margin_upper)},
                             {"min_margin_lower_non_bipartite",
                              opt(s.min_margin_lower_non_bipartite)}});
  Json records = Json::array();
  for (const auto& rec : r.records) records.push_back(to_json(rec));
  return Json{{"schema_version", r.schema_version},
              {"config", to_json(r.config)},
              {"aggregate", summaries},
              {"total_violations", r.violations()},
              {"records", records}};
}

SweepReport sweep_report_from_json(const Json& j) {
  return guarded("sweep report JSON", [&] {
    SweepReport r;
    r.schema_version = j.at("schema_version").get<int>();
    r.config = sweep_config_from_json(j.at("config"));
    for (const Json& s : j.at("aggregate")) {
      CaseSummary c;
      c.theorem = theorem_case_from_string(s.at("case").get<std::string>());
      c.groups = s.at("groups").get<std::uint64_t>();
      c.maps = s.at("maps").get<std::uint64_t>();
      c.instances = s.at("instances").get<std::uint64_t>();
      c.holds = s.at("holds").get<std::uint64_t>();
      c.hypotheses_not_met = s.at("hypotheses_not_met").get<std::uint64_t>();
      c.violations = s.at("violations").get<std::uint64_t>();
      c.violations_bipartite = s.at("violations_bipartite").get<std::uint64_t>();
      c.min_margin_lower = get_opt<double>(s, "min_margin_lower");
      c.min_margin_upper = get_opt<double>(s, "min_margin_upper");
      c.min_margin_lower_non_bipartite = get_opt<double>(s, "min_margin_lower_non_bipartite");
      r.summaries.push_back(c);
    }
    for (const Json& rec : j.at("records")) r.records.push_back(record_from_json(rec));
    return r;
  });
}

// ---------------------------------------------------------------------------

Json to_json(const ScanReport& r) {
  Json targets = Json::array();
  for (const auto& t : r.targets) {
    Json excluded = Json::array();
    for (GraphKind k : t.excluded_families) excluded.push_back(to_string(k));
    Json matches = Json::array();
    for (const auto& m : t.matches)
      matches.push_back(Json{{"family", to_string(m.family)},
                             {"group", m.group},
                             {"generators", m.generators},
                             {"sigma", opt(m.sigma)},
                             {"witness", m.witness}});
    targets.push_back(Json{{"name", t.name},
                           {"family", to_string(t.family)},
                           {"group", t.group},
                           {"generators", t.generators},
                           {"sigma", t.sigma},
                           {"n", t.n},
                           {"d", t.d},
                           {"undirected", t.undirected},
                           {"connected", t.connected},
                           {"excluded_families", excluded},
                           {"candidates_compared", t.candidates_compared},
                           {"match_count", t.matches.size()},
                           {"matches", matches}});
  }
  return Json{{"schema_version", r.schema_version},
              {"p", r.p},
              {"groups", r.groups},
              {"candidates_built", r.candidates_built},
              {"ambiguity_note", r.ambiguity_note},
              {"targets", targets}};
}

ScanReport scan_report_from_json(const Json& j) {
  return guarded("scan report JSON", [&] {
    ScanReport r;
    r.schema_version = j.at("schema_version").get<int>();
    r.p = j.at("p").get<int>();
    r.groups = j.at("groups").get<std::vector<std::string>>();
    r.candidates_built = j.at("candidates_built").get<std::uint64_t>();
    r.ambiguity_note = j.at("ambiguity_note").get<std::string>();
    for (const Json& tj : j.at("targets")) {
      ScanTarget t;
      t.name = tj.at("name").get<std::string>();
      t.family = graph_kind_from_string(tj.at("family").get<std::string>());
      t.group = tj.at("group").get<std::string>();
      t.generators = tj.at("generators").get<std::vector<Element>>();
      t.sigma = tj.at("sigma").get<std::vector<Element>>();
      t.n = tj.at("n").get<int>();
      t.d = tj.at("d").get<int>();
      t.undirected = tj.at("undirected").get<bool>();
      t.connected = tj.at("connected").get<bool>();
      for (const auto& k : tj.at("excluded_families").get<std::vector<std::string>>())
        t.excluded_families.push_back(graph_kind_from_string(k));
      t.candidates_compared = tj.at("candidates_compared").get<std::uint64_t>();
      for (const Json& mj : tj.at("matches")) {
        ScanMatch m;
        m.family = graph_kind_from_string(mj.at("family").get<std::string>());
        m.group = mj.at("group").get<std::string>();
        m.generators = mj.at("generators").get<std::vector<Element>>();
        m.sigma = get_opt<std::vector<Element>>(mj, "sigma");
        m.witness = mj.at("witness").get<std::vector<int>>();
        t.matches.push_back(std::move(m));
      }
      r.targets.push_back(std::move(t));
    }
    return r;
  });
}

}  // namespace tcg
