#include "tcg/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "tcg/bounds.hpp"
#include "tcg/cheeger.hpp"
#include "tcg/counterexample.hpp"
#include "tcg/error.hpp"
#include "tcg/io.hpp"
#include "tcg/spectra.hpp"
#include "tcg/sweep.hpp"
#include "tcg/verify.hpp"

namespace tcg {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const std::size_t at = s.find(sep);
    out.push_back(s.substr(0, at));
    if (at == std::string_view::npos) break;
    s.remove_prefix(at + 1);
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

int to_int(std::string_view s, const char* what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(std::string(s), &used);
    if (used != s.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::parse, std::string("expected an integer for ") + what +
                                      ", got '" + std::string(s) + "'");
  }
}

// Extends generator images to the whole group along a breadth-first word
// tree, either multiplicatively or anti-multiplicatively.
std::optional<std::vector<Element>> extend_images(
    const FiniteGroup& g, const std::vector<std::pair<Element, Element>>& images,
    bool anti) {
  const int n = g.order();
  std::vector<Element> f(n, -1);
  f[g.identity()] = g.identity();
  std::vector<Element> queue{g.identity()};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Element x = queue[i];
    for (const auto& [gen, img] : images) {
      const Element y = g.mul(x, gen);
      const Element fy = anti ? g.mul(img, f[x]) : g.mul(f[x], img);
      if (f[y] < 0) {
        f[y] = fy;
        queue.push_back(y);
      } else if (f[y] != fy) {
        return std::nullopt;
      }
    }
  }
  if (static_cast<int>(queue.size()) != n) return std::nullopt;
  return f;
}

}  // namespace

GroupMap parse_sigma(const FiniteGroup& g, std::string_view text) {
  text = trim(text);
  if (text == "identity" || text == "id") return identity_map(g);
  if (text == "neg" || text == "inv") return inversion_map(g);
  auto starts = [&](std::string_view p) { return text.substr(0, p.size()) == p; };
  if (starts("mul:")) {
    const int k = to_int(text.substr(4), "mul:K");
    std::vector<Element> perm(g.order());
    for (int x = 0; x < g.order(); ++x)
      perm[x] = static_cast<Element>(((static_cast<long long>(k) * x) % g.order() +
                                      g.order()) % g.order());
    if (g.label() != "Z" + std::to_string(g.order()))
      throw Error(ErrorKind::invalid_map, "mul:K applies to cyclic groups only");
    return require_map(g, perm);
  }
  if (starts("aut:") || starts("anti:")) {
    const bool anti = starts("anti:");
    const int i = to_int(text.substr(anti ? 5 : 4), "map index");
    auto maps = anti ? enumerate_anti_automorphisms(g) : enumerate_automorphisms(g);
    if (i < 0 || i >= static_cast<int>(maps.size()))
      throw Error(ErrorKind::invalid_map, "map index " + std::to_string(i) +
                                              " out of range (" +
                                              std::to_string(maps.size()) + " maps)");
    return maps[i];
  }
  if (starts("perm:")) {
    std::vector<Element> perm;
    for (auto tok : split(text.substr(5), ',')) perm.push_back(to_int(trim(tok), "perm entry"));
    return require_map(g, perm);
  }
  if (text.find("->") != std::string_view::npos) {
    std::vector<std::pair<Element, Element>> images;
    for (auto part : split(text, ',')) {
      const std::size_t arrow = part.find("->");
      if (arrow == std::string_view::npos)
        throw Error(ErrorKind::parse, "expected 'x->y' in sigma, got '" + std::string(part) + "'");
      images.emplace_back(parse_element(g, trim(part.substr(0, arrow))),
                          parse_element(g, trim(part.substr(arrow + 2))));
    }
    for (bool anti : {false, true})
      if (auto f = extend_images(g, images, anti)) {
        auto c = classify_map(g, *f);
        if (std::holds_alternative<GroupMap>(c)) return std::get<GroupMap>(c);
      }
    throw Error(ErrorKind::invalid_map, "generator images '" + std::string(text) +
                                            "' extend to no automorphism or anti-automorphism");
  }
  throw Error(ErrorKind::parse, "unrecognised sigma '" + std::string(text) + "'");
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::usage, "cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw Error(ErrorKind::usage, "cannot write '" + out_path + "'");
  f << text;
}

struct GraphArgs {
  std::string family = "cayley";
  std::string group;
  std::string group_file;
  std::string gens;
  std::string sigma;
  std::string subgroup;
  std::string graph_file;
  int power = 1;
};

void add_group_options(CLI::App* cmd, GraphArgs& a) {
  cmd->add_option("--group", a.group,
                  "cyclic:N, dihedral:P, product:A,B,..., q8, s3 or a catalog label");
  cmd->add_option("--group-file", a.group_file, "group table (text or JSON)");
}

void add_graph_options(CLI::App* cmd, GraphArgs& a) {
  add_group_options(cmd, a);
  cmd->add_option("--family", a.family,
                  "cayley, cayley-sum, twisted-cayley, twisted-cayley-sum, schreier");
  cmd->add_option("--gens", a.gens, "generating set S, comma separated");
  cmd->add_option("--sigma", a.sigma, "twist map");
  cmd->add_option("--subgroup", a.subgroup, "elements generating H (Schreier)");
  cmd->add_option("--power", a.power, "take the k-th graph power")->check(CLI::PositiveNumber);
  cmd->add_option("--graph", a.graph_file, "graph JSON instead of a construction");
}

FiniteGroup load_group(const GraphArgs& a) {
  if (!a.group_file.empty()) {
    const std::string text = read_file(a.group_file);
    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
      return group_from_json(parse_json(text));
    return parse_group(text);
  }
  if (a.group.empty()) throw Error(ErrorKind::usage, "--group or --group-file is required");
  return group_from_descriptor(a.group);
}

std::string normalize_family(std::string f) {
  for (char& c : f)
    if (c == '-') c = '_';
  return f;
}

Subgroup load_subgroup(const FiniteGroup& g, const std::string& text) {
  if (text.empty()) return subgroup_closure(g, std::span<const Element>{});
  return subgroup_closure(g, parse_element_set(g, text));
}

RegularMultigraph load_graph(const GraphArgs& a) {
  if (!a.graph_file.empty()) {
    RegularMultigraph g = graph_from_json(parse_json(read_file(a.graph_file)));
    return a.power > 1 ? graph_power(g, a.power) : g;
  }
  const FiniteGroup g = load_group(a);
  const ElementSet s = parse_element_set(g, a.gens);
  const GraphKind kind = graph_kind_from_string(normalize_family(a.family));
  std::optional<RegularMultigraph> graph;
  switch (kind) {
    case GraphKind::cayley: graph = build_cayley(g, s); break;
    case GraphKind::cayley_sum: graph = build_cayley_sum(g, s); break;
    case GraphKind::twisted_cayley:
    case GraphKind::twisted_cayley_sum: {
      if (a.sigma.empty()) throw Error(ErrorKind::usage, "--sigma is required for twisted families");
      const GroupMap sigma = parse_sigma(g, a.sigma);
      graph = kind == GraphKind::twisted_cayley ? build_twisted_cayley(g, s, sigma)
                                                : build_twisted_cayley_sum(g, s, sigma);
      break;
    }
    case GraphKind::schreier: graph = build_schreier(g, load_subgroup(g, a.subgroup), s); break;
    default: throw Error(ErrorKind::usage, "family '" + a.family + "' cannot be constructed");
  }
  return a.power > 1 ? graph_power(*graph, a.power) : *graph;
}

Json validation_json(const ValidationReport& r) {
  Json out = Json::array();
  for (const auto& c : r.checks)
    out.push_back(Json{{"axiom", c.axiom},
                       {"passed", c.passed},
                       {"witness", c.witness},
                       {"detail", c.detail}});
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Twisted Cayley, Cayley sum and Schreier graph verification toolkit", "tcg"};
  app.require_subcommand(0, 1);
  bool version = false;
  app.add_flag("--version", version, "print toolkit and schema versions");

  std::string out_path;
  std::string format = "json";
  double tol = 1e-9;
  int cheeger_cap = kDefaultCheegerCap;
  GraphArgs ga;

  // group
  auto* group_cmd = app.add_subcommand("group", "build, validate and inspect a group");
  add_group_options(group_cmd, ga);
  group_cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  group_cmd->add_option("--out", out_path);

  // build
  auto* build_cmd = app.add_subcommand("build", "construct a graph and export it");
  add_graph_options(build_cmd, ga);
  build_cmd->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  build_cmd->add_option("--out", out_path);

  // spectrum
  auto* spectrum_cmd = app.add_subcommand("spectrum", "normalized adjacency spectrum");
  add_graph_options(spectrum_cmd, ga);
  double solver_tol = kDefaultSolverTol;
  spectrum_cmd->add_option("--tol", solver_tol, "Jacobi off-diagonal tolerance");
  spectrum_cmd->add_option("--out", out_path);

  // cheeger
  auto* cheeger_cmd = app.add_subcommand("cheeger", "exact vertex and edge Cheeger constants");
  add_graph_options(cheeger_cmd, ga);
  cheeger_cmd->add_option("--cap", cheeger_cap, "largest vertex count enumerated")
      ->check(CLI::PositiveNumber);
  cheeger_cmd->add_option("--out", out_path);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "check one theorem instance");
  std::string case_name;
  verify_cmd->add_option("--case", case_name, "theorem case id")->required();
  add_group_options(verify_cmd, ga);
  verify_cmd->add_option("--gens", ga.gens, "generating set S")->required();
  verify_cmd->add_option("--sigma", ga.sigma, "twist map");
  verify_cmd->add_option("--subgroup", ga.subgroup, "elements generating H (Schreier)");
  verify_cmd->add_option("--tol", tol);
  verify_cmd->add_option("--cheeger-cap", cheeger_cap)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--out", out_path);

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "verify every catalog instance of the chosen cases");
  SweepConfig sc;
  std::string config_path;
  std::string cases = "all";
  std::string records = "violations";
  sweep_cmd->add_option("--config", config_path, "sweep configuration JSON");
  sweep_cmd->add_option("--min-order", sc.min_order);
  sweep_cmd->add_option("--max-order", sc.max_order)->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--cases", cases, "comma separated case ids, or all");
  sweep_cmd->add_option("--seed", sc.seed);
  sweep_cmd->add_option("--exhaustive-order", sc.exhaustive_order);
  sweep_cmd->add_option("--schreier-exhaustive-order", sc.schreier_exhaustive_order);
  sweep_cmd->add_option("--random-s", sc.random_s)->check(CLI::NonNegativeNumber);
  sweep_cmd->add_option("--tol", sc.tol);
  sweep_cmd->add_option("--cheeger-cap", sc.cheeger_cap)->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--group-cap", sc.group_cap)->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--records", records, "none, violations or all");
  sweep_cmd->add_option("--out", out_path);

  // counterexample
  auto* scan_cmd = app.add_subcommand("counterexample", "isomorphism scan of the order-2p constructions");
  int p = 3;
  scan_cmd->add_option("--p", p, "odd prime, 3 or 5");
  scan_cmd->add_option("--out", out_path);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (version) {
      out << "tcg " << kToolkitVersion << " (report schema " << kReportSchemaVersion << ")\n";
      return 0;
    }
    if (app.get_subcommands().empty()) {
      err << "usage error: a subcommand is required\n" << app.help();
      return 1;
    }

    if (group_cmd->parsed()) {
      const FiniteGroup g = load_group(ga);
      if (format == "text") {
        emit(format_group(g), out_path, out);
        return 0;
      }
      std::vector<int> orders;
      for (Element x = 0; x < g.order(); ++x) orders.push_back(g.element_order(x));
      Json subgroups = Json::array();
      for (const Subgroup& h : index_two_subgroups(g)) subgroups.push_back(h.members);
      Json j{{"group", to_json(g)},
             {"validation", validation_json(validate_group(g.table()))},
             {"abelian", g.is_abelian()},
             {"element_orders", orders},
             {"fingerprint", g.fingerprint()},
             {"index_two_subgroups", subgroups}};
      if (g.order() <= kDefaultGroupCap) {
        j["automorphisms"] = enumerate_automorphisms(g).size();
      }
      emit(dump(j), out_path, out);
      return 0;
    }

    if (build_cmd->parsed()) {
      const RegularMultigraph g = load_graph(ga);
      emit(format == "dot" ? to_dot(g) : dump(to_json(g)), out_path, out);
      return 0;
    }

    if (spectrum_cmd->parsed()) {
      emit(dump(to_json(spectrum(load_graph(ga), solver_tol))), out_path, out);
      return 0;
    }

    if (cheeger_cmd->parsed()) {
      const RegularMultigraph g = load_graph(ga);
      Json j = to_json(cheeger_constants(g, cheeger_cap));
      j["d"] = g.d();
      emit(dump(j), out_path, out);
      return 0;
    }

    if (verify_cmd->parsed()) {
      const TheoremCase theorem = theorem_case_from_string(case_name);
      const FiniteGroup g = load_group(ga);
      const ElementSet s = parse_element_set(g, ga.gens);
      std::optional<GroupMap> sigma;
      std::optional<Subgroup> h;
      if (theorem == TheoremCase::schreier)
        h = load_subgroup(g, ga.subgroup);
      else if (!ga.sigma.empty())
        sigma = parse_sigma(g, ga.sigma);
      VerifyOptions options;
      options.tol = tol;
      options.cheeger_cap = cheeger_cap;
      const VerificationRecord rec = verify_instance(theorem, g, s, sigma ? &*sigma : nullptr,
                                                    h ? &*h : nullptr, options);
      emit(dump(to_json(rec)), out_path, out);
      return rec.verdict == Verdict::violation ? 2 : 0;
    }

    if (sweep_cmd->parsed()) {
      SweepConfig config = sc;
      if (!config_path.empty()) {
        config = sweep_config_from_json(parse_json(read_file(config_path)));
      } else {
        config.records = record_policy_from_string(records);
        config.cases.clear();
        if (cases == "all") {
          config.cases = all_theorem_cases();
        } else if (!cases.empty()) {
          for (auto c : split(cases, ',')) config.cases.push_back(theorem_case_from_string(trim(c)));
        }
      }
      const auto start = std::chrono::steady_clock::now();
      const SweepReport report = sweep(config, &err);
      err << "runtime: "
          << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()
          << " s\n";
      emit(dump(to_json(report)), out_path, out);
      return report.exit_status();
    }

    if (scan_cmd->parsed()) {
      emit(dump(to_json(counterexample_scan(p))), out_path, out);
      return 0;
    }
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace tcg
