#include "tcg/error.hpp"
#include "tcg/io.hpp"

namespace tcg {

namespace {

MapKind map_kind_from_string(const std::string& s) {
  if (s == to_string(MapKind::automorphism)) return MapKind::automorphism;
  if (s == to_string(MapKind::anti_automorphism)) return MapKind::anti_automorphism;
  throw Error(ErrorKind::parse, "unknown map kind '" + s + "'");
}

Json provenance_json(const Provenance& p) {
  Json j{{"group", p.group}, {"generators", p.generators}};
  if (p.sigma)
    j["sigma"] = Json{{"perm", p.sigma->perm},
                      {"kind", to_string(p.sigma->kind)},
                      {"order", p.sigma->order}};
  if (p.subgroup) j["subgroup"] = *p.subgroup;
  if (p.power) j["power"] = *p.power;
  return j;
}

Provenance provenance_from_json(const Json& j) {
  Provenance p;
  p.group = j.value("group", std::string{});
  if (j.contains("generators")) p.generators = j.at("generators").get<std::vector<Element>>();
  if (j.contains("sigma")) {
    const Json& s = j.at("sigma");
    p.sigma = SigmaInfo{s.at("perm").get<std::vector<Element>>(),
                        map_kind_from_string(s.at("kind").get<std::string>()),
                        s.at("order").get<int>()};
  }
  if (j.contains("subgroup")) p.subgroup = j.at("subgroup").get<std::vector<Element>>();
  if (j.contains("power")) p.power = j.at("power").get<int>();
  return p;
}

}  // namespace

Json to_json(const RegularMultigraph& g) {
  return Json{{"n", g.n()},
              {"d", g.d()},
              {"kind", to_string(g.kind())},
              {"theta", g.theta()},
              {"provenance", provenance_json(g.provenance())}};
}

RegularMultigraph graph_from_json(const Json& j) {
  try {
    const int n = j.at("n").get<int>();
    auto theta = j.at("theta").get<std::vector<std::vector<int>>>();
    if (j.contains("d") && j.at("d").get<int>() != static_cast<int>(theta.size()))
      throw Error(ErrorKind::validation, "graph JSON: d does not match theta");
    return RegularMultigraph(n, std::move(theta),
                             graph_kind_from_string(j.at("kind").get<std::string>()),
                             j.contains("provenance")
                                 ? provenance_from_json(j.at("provenance"))
                                 : Provenance{});
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse, std::string("graph JSON: ") + e.what());
  }
}

}  // namespace tcg
