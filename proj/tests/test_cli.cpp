#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "hhwb/cli.hpp"
#include "hhwb/error.hpp"

using namespace hhwb;
using io::Json;

namespace {

namespace fs = std::filesystem;

const fs::path corpus = HHWB_CORPUS_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
  Json report() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string in(const std::string& name) { return (corpus / name).string(); }

Run run_json(std::vector<std::string> args) {
  args.push_back("--json");
  return run(args);
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / "hhwb_test_cli";
  fs::create_directories(dir);
  return dir / name;
}

fs::path write_doc(const std::string& name, const Json& doc) {
  auto p = scratch(name);
  std::ofstream(p) << doc.dump(2);
  return p;
}

Json error_of(const Run& r) { return r.report()["error"]; }

using Dims = std::vector<std::size_t>;

}  // namespace

TEST_CASE("corpus fixtures replay byte for byte") {
  auto manifest = Json::parse(slurp(corpus / "expected" / "manifest.json"));
  REQUIRE(manifest.size() >= 40);
  for (const auto& c : manifest) {
    std::vector<std::string> args;
    for (const auto& a : c["args"]) {
      std::string s = a.get<std::string>();
      args.push_back(s.ends_with(".json") ? in(s) : s);
    }
    auto r = run_json(args);
    INFO(c["name"].get<std::string>());
    CHECK(r.code == c["exit"].get<int>());
    CHECK(r.out == slurp(corpus / "expected" / (c["name"].get<std::string>() + ".json")));
  }
}

TEST_CASE("hh examples") {
  auto d = run_json({"hh", in("dual_numbers.json")});
  CHECK(d.code == 0);
  CHECK(d.report()["results"]["dims"].get<Dims>() == Dims{2, 1, 1, 1, 1});
  CHECK(d.report()["results"]["commutator-quotient"] == 2);

  auto f2 = run_json({"hh", in("dual_numbers.json"), "--field", "fp:2", "--max-degree", "3"});
  CHECK(f2.report()["results"]["dims"].get<Dims>() == Dims{2, 2, 2, 2});
  CHECK(f2.report()["parameters"]["field"] == "fp:2");

  auto k = run_json({"hh", in("k.json")});
  CHECK(k.report()["results"]["dims"].get<Dims>() == Dims{1, 0, 0, 0, 0});
}

TEST_CASE("gldim examples") {
  auto a2 = run_json({"gldim", in("path_a2.json")});
  CHECK(a2.report()["results"]["value"] == 1);
  CHECK(a2.report()["verdict"] == "gldim 1");
  auto dual = run_json({"gldim", in("dual_numbers.json")});
  CHECK(dual.report()["results"]["value"].is_null());
  CHECK(dual.report()["verdict"] == "exceeds bound 12");
  CHECK(run_json({"gldim", in("k_times_k.json")}).report()["results"]["value"] == 0);

  // F_2 group algebra has no designated radical
  auto z2 = run_json({"gldim", in("group_z2.json"), "--field", "fp:2"});
  CHECK(z2.code == 2);
  CHECK(error_of(z2)["type"] == "unsupported-field");
}

TEST_CASE("build examples and errors") {
  auto a2 = run_json({"build", in("gls_a2.json")});
  CHECK(a2.code == 0);
  CHECK(a2.report()["results"]["dim"] == 3);

  auto loop = run_json({"build", in("free_loop.json")});
  CHECK(loop.code == 2);
  CHECK(error_of(loop)["type"] == "not-finite-within-cap");
  CHECK(error_of(loop)["cap"] == 2);
  CHECK(error_of(loop)["message"].get<std::string>().find("not finite within cap 2") != std::string::npos);

  auto bad = run_json({"build", in("bad_field.json")});
  CHECK(bad.code == 2);
  CHECK(error_of(bad)["type"] == "schema");
  CHECK(error_of(bad)["pointer"] == "/field/p");
  CHECK(error_of(bad)["message"] == "/field/p: p must be prime");
  CHECK(bad.report()["verdict"] == "error");
}

TEST_CASE("verify exit codes") {
  auto s = run_json({"verify", "splitting", in("triangular_dual_k_k.json")});
  CHECK(s.code == 0);
  CHECK(s.report()["verdict"] == true);

  auto st = run_json({"verify", "stratifying", in("two_cycle_rad2.json")});
  CHECK(st.code == 1);
  CHECK(st.report()["results"]["failing"] == "SI1");
  CHECK(st.report()["results"]["tensor-dim"] == 4);
  CHECK(st.report()["results"]["ideal-dim"] == 3);

  auto les = run_json({"verify", "les", in("two_cycle_rad2.json")});
  CHECK(les.code == 2);
  CHECK(error_of(les)["type"] == "not-stratifying");
  CHECK(les.report()["results"]["stratifying"]["si1"] == false);

  auto m = run_json({"verify", "morita", in("morita_degenerate.json"), "--bound", "3"});
  CHECK(m.code == 1);
  CHECK(m.report()["results"]["failure"].get<std::string>().find("Tor_1 has dimension 1") != std::string::npos);

  // wrong document kind for the subcommand
  CHECK(run_json({"verify", "morita", in("k.json")}).code == 2);
  CHECK(run_json({"verify", "les", in("k.json")}).code == 2);
}

TEST_CASE("validate tables") {
  auto asym = run_json({"validate", "cartan", in("cartan_asymmetric.json")});
  CHECK(asym.code == 1);
  bool c3 = false;
  const Json rows = asym.report()["results"]["checks"];
  for (const auto& row : rows) {
    if (row["name"] == "C3") {
      c3 = true;
      CHECK(row["passed"] == false);
      CHECK(row["witnesses"] == Json::array({"(1,2)"}));
    } else {
      CHECK(row["passed"] == true);
    }
  }
  CHECK(c3);

  auto gentle = run_json({"validate", "gentle", in("gentle_a2.json")});
  CHECK(gentle.code == 0);
  CHECK(gentle.report()["results"]["checks"].size() == 4);

  auto ei = run_json({"validate", "ei", in("ei_noninvertible.json")});
  CHECK(ei.code == 1);
  CHECK(ei.report()["results"]["checks"][0]["witnesses"] == Json::array({"e"}));

  // relations that are not length-2 paths are a schema error
  Json doc = Json::parse(slurp(corpus / "dual_numbers.json"));
  doc["relations"] = Json::array({Json{{"x*x", "1"}, {"x", "1"}}});
  auto r = run_json({"validate", "gentle", write_doc("nonmono.json", doc).string()});
  CHECK(r.code == 2);
  CHECK(error_of(r)["pointer"] == "/relations/0");
}

TEST_CASE("schema errors carry JSON pointers") {
  Json k = Json::parse(slurp(corpus / "k.json"));
  auto expect = [&](const Json& doc, const std::string& pointer, const std::string& needle) {
    auto r = run_json({"build", write_doc("schema.json", doc).string()});
    INFO(doc.dump());
    CHECK(r.code == 2);
    CHECK(error_of(r)["type"] == "schema");
    CHECK(error_of(r)["pointer"] == pointer);
    CHECK(error_of(r)["message"].get<std::string>().find(needle) != std::string::npos);
  };
  Json d = k;
  d["colour"] = "red";
  expect(d, "/colour", "unknown member");
  d = k;
  d.erase("kind");
  expect(d, "", "missing member \"kind\"");
  d = k;
  d["kind"] = "lie-algebra";
  expect(d, "/kind", "unknown kind");
  d = k;
  d["unit"] = Json{{"1", "2/4"}};
  expect(d, "/unit/1", "lowest terms");
  d = k;
  d["unit"] = Json{{"1", 1}};
  expect(d, "/unit/1", "expected a string");
  d = k;
  d["products"][0]["result"] = Json{{"y", "1"}};
  expect(d, "/products/0/result/y", "unknown basis label");
  d = k;
  d["field"] = Json{{"kind", "R"}};
  expect(d, "/field/kind", "field kind");

  Json t = Json::parse(slurp(corpus / "triangular_dual_k_k.json"));
  t["m"]["right"]["x"] = Json::array({Json::array({"1", "0"})});
  expect(t, "/m/right/x/0", "expected 1 entries");
  t = Json::parse(slurp(corpus / "triangular_dual_k_k.json"));
  t["c"]["field"] = Json{{"kind", "Fp"}, {"p", 3}};
  expect(t, "/c/field", "differs");

  Json g = Json::parse(slurp(corpus / "gls_a2.json"));
  g["omega"] = Json::array({Json::array({1, 3})});
  expect(g, "/omega/0/1", "out of range");

  auto broken = scratch("broken.json");
  std::ofstream(broken) << "{\"kind\": ";
  auto r = run_json({"build", broken.string()});
  CHECK(r.code == 2);
  CHECK(error_of(r)["message"].get<std::string>().find("invalid JSON") != std::string::npos);
  CHECK(r.report()["input-digest"].is_null());

  // constructor errors come through unchanged
  Json bm = Json::parse(slurp(corpus / "triangular_dual_k_k.json"));
  bm["m"]["right"]["x"] = Json::array({Json::array({"1"})});
  auto inv = run_json({"build", write_doc("badmod.json", bm).string()});
  CHECK(inv.code == 2);
  CHECK(error_of(inv)["type"] == "invariant");
}

TEST_CASE("determinism and --out") {
  auto out = scratch("report.json");
  fs::remove(out);
  auto a = run_json({"verify", "morita", in("morita_matrix.json"), "--out", out.string()});
  auto b = run_json({"verify", "morita", in("morita_matrix.json")});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(slurp(out) == a.out);
  // reformatting the input does not change the digest
  Json doc = Json::parse(slurp(corpus / "morita_matrix.json"));
  std::ofstream(scratch("compact.json")) << doc.dump();
  auto c = run_json({"verify", "morita", scratch("compact.json").string()});
  CHECK(c.out == a.out);
  CHECK(a.report()["input-digest"] == cli::input_digest(doc));
  CHECK(cli::input_digest(Json::object()) ==
        "sha256:44136fa355b3678a1146ad16f7e8649e94fb4fc21fe77e8310c060f61caaff8a");
}

TEST_CASE("flags, environment and parse errors") {
  ::setenv("HHWB_MAX_DEGREE", "2", 1);
  auto e = run_json({"hh", in("dual_numbers.json")});
  ::unsetenv("HHWB_MAX_DEGREE");
  CHECK(e.report()["parameters"]["max-degree"] == 2);
  CHECK(e.report()["results"]["dims"].get<Dims>() == Dims{2, 1, 1});
  // an explicit flag wins over the environment
  ::setenv("HHWB_BOUND", "3", 1);
  auto f = run_json({"gldim", in("dual_numbers.json"), "--bound", "5"});
  auto g = run_json({"gldim", in("dual_numbers.json")});
  ::unsetenv("HHWB_BOUND");
  CHECK(f.report()["verdict"] == "exceeds bound 5");
  CHECK(g.report()["verdict"] == "exceeds bound 3");

  auto cap = run_json({"hh", in("triangular_dual_dual.json"), "--cap-bytes", "4"});
  CHECK(cap.code == 2);
  CHECK(error_of(cap)["type"] == "size-guard");
  CHECK(error_of(cap)["message"].get<std::string>().find("chain degree") != std::string::npos);
  CHECK(cap.report()["parameters"]["cap-bytes"] == 4);

  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate", in("k.json")}).code == 2);
  CHECK(run({"verify", in("k.json")}).code == 2);
  CHECK(run({"hh"}).code == 2);
  CHECK(run({"hh", in("missing.json")}).code == 2);
  CHECK(run({"hh", in("k.json"), "--field", "fp:6"}).code == 2);
  auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("verify") != std::string::npos);

  auto text = run({"hh", in("dual_numbers.json")});
  CHECK(text.code == 0);
  CHECK(text.out.find("dims: [2,1,1,1,1]") != std::string::npos);
}

TEST_CASE("build output round-trips through its structure constants") {
  for (const auto& entry : fs::directory_iterator(corpus)) {
    if (entry.path().extension() != ".json") continue;
    auto r = run_json({"build", entry.path().string()});
    if (r.code != 0) continue;
    INFO(entry.path().filename().string());
    Json table = r.report()["results"]["table"];
    auto original = io::build(Json::parse(slurp(entry.path())));
    auto again = io::build(table);
    CHECK(again.algebra->same_structure(*original.algebra));
    CHECK(again.algebra->labels() == original.algebra->labels());
    CHECK(again.algebra->idempotents() == original.algebra->idempotents());
    CHECK(again.algebra->designated_radical() == original.algebra->designated_radical());
    CHECK(io::algebra_table(*again.algebra) == table);
  }
}

TEST_CASE("property: algebra tables round-trip") {
  std::mt19937 rng(4242);
  const FieldSpec fields[] = {FieldSpec::rationals(), FieldSpec::prime(5)};
  for (int i = 0; i < 200; ++i) {
    const auto& f = fields[i % 2];
    auto a = fx::scramble(rng, fx::random_algebra(rng, f, 5));
    Json t = io::algebra_table(a);
    auto b = io::build(Json::parse(t.dump()));
    REQUIRE(b.algebra->same_structure(a));
    CHECK(b.algebra->labels() == a.labels());
    CHECK(cli::input_digest(t) == cli::input_digest(io::algebra_table(*b.algebra)));
  }
}
