#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "tcg/cli.hpp"
#include "tcg/error.hpp"
#include "tcg/io.hpp"

using namespace tcg;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "tcg_cli_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("version and usage errors") {
  const Result v = call({"--version"});
  CHECK(v.status == 0);
  CHECK(v.out == "tcg 1.0.0 (report schema 1)\n");

  const Result unknown = call({"frobnicate"});
  CHECK(unknown.status == 1);
  CHECK(unknown.err.find("usage error") != std::string::npos);

  CHECK(call({"spectrum", "--group", "cyclic:5", "--bogus"}).status == 1);
  CHECK(call({"verify", "--group", "cyclic:5", "--gens", "1,4"}).status == 1);
  CHECK(call({}).status == 1);
}

TEST_CASE("group subcommand") {
  const Result text = call({"group", "--group", "cyclic:3", "--format", "text"});
  CHECK(text.status == 0);
  CHECK(text.out == "3\n0 1 2\n1 2 0\n2 0 1\n# Z3\n");

  const auto path = scratch("bad_group.txt");
  std::ofstream(path) << "2\n0 1\n1 1\n";
  const Result bad = call({"group", "--group-file", path.string()});
  CHECK(bad.status == 1);
  CHECK(bad.err.find("validation") != std::string::npos);

  const Result json = call({"group", "--group", "dihedral:3"});
  CHECK(json.status == 0);
  const Json report = parse_json(json.out);
  CHECK(group_from_json(report.at("group")) == make_dihedral(3));
  CHECK(report.at("index_two_subgroups") == Json::parse("[[0, 1, 2]]"));
}

TEST_CASE("build subcommand") {
  const auto path = scratch("g.json");
  const Result r = call({"build", "--family", "twisted-cayley", "--group", "dihedral:3", "--gens",
                         "s", "--sigma", "r->r^-1,s->s", "--out", path.string()});
  CHECK(r.status == 0);
  const RegularMultigraph g = graph_from_json(parse_json(slurp(path)));
  CHECK(g.n() == 6);
  CHECK(g.theta()[0] == std::vector<int>{3, 5, 4, 0, 2, 1});

  const Result dot = call({"build", "--family", "cayley", "--group", "cyclic:6", "--gens", "3",
                           "--format", "dot"});
  CHECK(dot.status == 0);
  CHECK(dot.out.find("0 -- 3 [multiplicity=1]") != std::string::npos);

  const Result sch = call({"build", "--family", "schreier", "--group", "cyclic:8", "--subgroup",
                           "4", "--gens", "1,7"});
  CHECK(sch.status == 0);
  CHECK(graph_from_json(parse_json(sch.out)).n() == 4);

  const Result pw = call({"build", "--graph", path.string(), "--power", "3"});
  CHECK(pw.status == 0);

  CHECK(call({"build", "--family", "cayley", "--group", "cyclic:6", "--gens", ""}).status == 1);
  CHECK(call({"build", "--family", "twisted-cayley", "--group", "cyclic:6", "--gens", "1",
              "--sigma", "perm:1,0,2,3,4,5"})
            .status == 1);
}

TEST_CASE("spectrum and cheeger subcommands") {
  const Result s = call({"spectrum", "--family", "cayley", "--group", "cyclic:4", "--gens", "1,2,3"});
  CHECK(s.status == 0);
  const SpectrumResult sr = spectrum_from_json(parse_json(s.out));
  CHECK(sr.trivial_multiplicity == 1);

  const Result c = call({"cheeger", "--family", "cayley", "--group", "cyclic:6", "--gens", "1,5"});
  CHECK(c.status == 0);
  const CheegerReport cr = cheeger_from_json(parse_json(c.out));
  CHECK(cr.h == Rational(2, 3));
  CHECK(cr.edge_h == Rational(1, 3));
  CHECK(call({"cheeger", "--family", "cayley", "--group", "cyclic:12", "--gens", "1,11",
              "--cap", "8"})
            .status == 1);
}

TEST_CASE("verify subcommand exit codes") {
  const Result ok = call({"verify", "--case", "tc-auto-involution", "--group", "cyclic:5",
                          "--gens", "1,4", "--sigma", "neg"});
  CHECK(ok.status == 0);
  const VerificationRecord r = record_from_json(parse_json(ok.out));
  CHECK(r.verdict == Verdict::holds);

  const Result v = call({"verify", "--case", "schreier", "--group", "cyclic:8", "--subgroup", "4",
                         "--gens", "1,7"});
  CHECK(v.status == 2);
  CHECK(record_from_json(parse_json(v.out)).verdict == Verdict::violation);

  const Result unmet = call({"verify", "--case", "tc-auto-involution", "--group", "dihedral:3",
                             "--gens", "s", "--sigma", "r->r^-1,s->s"});
  CHECK(unmet.status == 0);
  CHECK(record_from_json(parse_json(unmet.out)).verdict == Verdict::hypotheses_not_met);

  CHECK(call({"verify", "--case", "nope", "--group", "cyclic:5", "--gens", "1,4"}).status == 1);
}

TEST_CASE("sweep subcommand is deterministic") {
  const auto a = scratch("sweep_a.json");
  const auto b = scratch("sweep_b.json");
  const std::vector<std::string> base = {"sweep", "--max-order", "6", "--cases",
                                         "tc-auto-involution,tcs-auto", "--seed", "7"};
  auto with_out = [&](const std::filesystem::path& p) {
    auto args = base;
    args.push_back("--out");
    args.push_back(p.string());
    return args;
  };
  const Result ra = call(with_out(a));
  const Result rb = call(with_out(b));
  CHECK(ra.status == rb.status);
  CHECK(ra.status != 1);
  CHECK(slurp(a) == slurp(b));
  CHECK_FALSE(slurp(a).empty());

  const auto cfg = scratch("config.json");
  std::ofstream(cfg) << R"({"max_order": 5, "cases": ["tcs-auto"], "colour": "blue"})";
  const Result bad = call({"sweep", "--config", cfg.string()});
  CHECK(bad.status == 1);
  CHECK(bad.err.find("colour") != std::string::npos);

  const Result empty = call({"sweep", "--cases", ""});
  CHECK(empty.status == 0);
  CHECK(sweep_report_from_json(parse_json(empty.out)).summaries.empty());
}

TEST_CASE("counterexample subcommand") {
  const Result r = call({"counterexample", "--p", "3"});
  CHECK(r.status == 0);
  CHECK(scan_report_from_json(parse_json(r.out)).targets.size() == 5);
  CHECK(call({"counterexample", "--p", "7"}).status == 1);
}

TEST_CASE("sigma parsing") {
  const FiniteGroup d6 = make_dihedral(3);
  CHECK(parse_sigma(d6, "r->r^-1,s->s").perm()[1] == 2);
  CHECK(parse_sigma(d6, "inv").kind() == MapKind::anti_automorphism);
  CHECK(parse_sigma(d6, "identity").is_identity());
  CHECK(parse_sigma(make_cyclic(7), "mul:3").order() == 6);
  CHECK_THROWS_AS(parse_sigma(d6, "mul:2"), Error);
  CHECK_THROWS_AS(parse_sigma(d6, "r->s"), Error);
  CHECK(parse_sigma(d6, "aut:0").is_identity());
}
