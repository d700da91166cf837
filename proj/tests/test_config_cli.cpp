#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "hecke/cli.hpp"
#include "hecke/config.hpp"
#include "hecke/format.hpp"

using namespace hecke;

namespace {

std::string fixture(const std::string& name) {
  return std::string(HECKE_FIXTURE_DIR) + "/" + name;
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& contents) {
    path = std::string("/tmp/hecke_cfg_") + std::to_string(rand()) + ".json";
    std::ofstream(path) << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

struct CliRun {
  int code;
  std::string out, err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("all shipped fixtures load and build") {
  for (auto name :
       {"a1_root_lattice.json", "a1_weight_lattice.json", "a1_torsion.json",
        "a2_omega3.json", "c2_alternating.json", "su6_ramified.json",
        "so_ramified.json"}) {
    auto cfg = load_config(fixture(name));
    CHECK(!cfg.name.empty());
    auto a = build_algebra(cfg);
    CHECK(a->group().roots().size() > 0);
  }
}

TEST_CASE("parse and schema errors") {
  CHECK_THROWS_AS(load_config("/nonexistent/file.json"), DomainError);
  TempFile garbage("this is not json");
  CHECK_THROWS_AS(load_config(garbage.path), DomainError);
  TempFile badver(R"({"schema_version": 99, "name": "x", "free_rank": 1,
    "roots": [[2],[-2]], "simple_roots": [[2]],
    "coroots": [{"free": [1]}], "params": {"s1":1,"s0":1}})");
  try {
    load_config(badver.path);
    CHECK(false);
  } catch (const DomainError& e) {
    CHECK(e.code() == "SchemaVersionMismatch");
  }
}

TEST_CASE("validation failures list every violation") {
  // wrong cartan pairing AND an unknown parameter key
  TempFile bad(R"({"schema_version": 1, "name": "broken", "free_rank": 1,
    "roots": [[2],[-2]], "simple_roots": [[2]],
    "coroots": [{"free": [3]}], "params": {"s1": 1, "s9": 2}})");
  auto cfg = load_config(bad.path);
  try {
    build_algebra(cfg);
    CHECK(false);
  } catch (const BuildError& e) {
    CHECK(!e.problems.empty());
    bool cartan = false;
    for (auto& p : e.problems)
      if (p.find("BadCartanPairing") != std::string::npos) cartan = true;
    CHECK(cartan);
  }
  // valid group, but parameters break the stabilizer orbit constraint
  TempFile badparam(R"({"schema_version": 1, "name": "badp", "free_rank": 1,
    "roots": [[1],[-1]], "simple_roots": [[1]],
    "coroots": [{"free": [2]}], "params": {"s1": 1, "s0": 2}})");
  CHECK_THROWS_AS(build_algebra(load_config(badparam.path)), BuildError);
}

TEST_CASE("element literals round-trip") {
  auto a = build_algebra(load_config(fixture("so_ramified.json")));
  auto& g = a->group();
  for (auto& w : g.window(3)) {
    std::string lit = render_ext(g, w);
    CHECK(parse_ext(g, lit) == w);
  }
  CHECK(parse_ext(g, "1") == g.one());
  CHECK(parse_ext(g, "T[s1]") == g.delta_aff()[0].elt);
  CHECK(parse_ext(g, "(1,0,0;1)") ==
        g.translation({{1, 0, 0}, {1}}));
  CHECK(parse_ext(g, "(0,0,0;1)|s1.s2") ==
        g.mul(g.translation({{0, 0, 0}, {1}}),
              g.mul(g.delta_aff()[0].elt, g.delta_aff()[1].elt)));
  CHECK_THROWS_AS(parse_ext(g, "zork"), DomainError);
  CHECK_THROWS_AS(parse_ext(g, "(1;)"), DomainError);
}

TEST_CASE("cli: mul matches the quadratic relation, byte-stable") {
  auto r1 = cli({"mul", fixture("a1_root_lattice.json"), "T[s]", "T[s]"});
  CHECK(r1.code == 0);
  CHECK(r1.out == "v^2*T[1] + (v^2 - 1)*T[s1]\n");
  auto r2 = cli({"mul", fixture("a1_root_lattice.json"), "T[s]", "T[s]"});
  CHECK(r1.out == r2.out);
  // normalized rendering rescales by v^{L}
  auto rn = cli({"mul", fixture("a1_root_lattice.json"), "T[s]", "T[s]",
                 "--normalized"});
  CHECK(rn.code == 0);
  CHECK(rn.out == "v^2*Tn[1] + (v^3 - v)*Tn[s1]\n");
}

TEST_CASE("cli: theta prints a bernstein certificate") {
  auto r = cli({"theta", fixture("a1_root_lattice.json"), "(-1;)"});
  CHECK(r.code == 0);
  CHECK(r.out.find("bernstein certificate: Theta[(-1;)]") != std::string::npos);
}

TEST_CASE("cli: center output") {
  auto r = cli({"center", fixture("a1_root_lattice.json"), "(1;)"});
  CHECK(r.code == 0);
  CHECK(r.out.find("orbit of (1;) (size 2)") != std::string::npos);
  CHECK(r.out.find("central: true") != std::string::npos);
  CHECK(r.out.find("z[(-1;)] * (1)") != std::string::npos);
}

TEST_CASE("cli: info shows the dichotomy data") {
  auto r = cli({"info", fixture("su6_ramified.json")});
  CHECK(r.code == 0);
  CHECK(r.out.find("root system: B3") != std::string::npos);
  CHECK(r.out.find("family(1,0,0): transitive=true") != std::string::npos);
  auto r2 = cli({"info", fixture("so_ramified.json")});
  CHECK(r2.out.find("root system: C3") != std::string::npos);
  CHECK(r2.out.find("family(2,0,0): transitive=false") != std::string::npos);
}

TEST_CASE("cli: verify exit codes and json output") {
  auto ok = cli({"verify", fixture("a1_weight_lattice.json"), "--window", "3",
                 "--output", "json"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("\"all_pass\": true") != std::string::npos);
  auto bad = cli({"verify", "/nonexistent.json"});
  CHECK(bad.code == 2);
  auto usage = cli({"frobnicate"});
  CHECK(usage.code == 2);
  auto badlit = cli({"mul", fixture("a1_root_lattice.json"), "T[w]", "T[s]"});
  CHECK(badlit.code == 2);
  CHECK(badlit.err.find("BadElementLiteral") != std::string::npos);
}
