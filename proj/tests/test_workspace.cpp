#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "homext/ext.hpp"
#include "homext/reports_json.hpp"
#include "homext/workspace.hpp"

using namespace homext;
namespace fs = std::filesystem;

namespace {

const std::string kFixtures = HOMEXT_FIXTURES_DIR;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("homext_ws_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  fs::path write(const std::string& name, const std::string& text) const {
    fs::path p = path / name;
    std::ofstream out(p);
    out << text;
    return p;
  }
};

}  // namespace

TEST_CASE("empty path list gives an empty workspace") {
  Workspace ws = parse_workspace({});
  CHECK(ws.algebras.empty());
  CHECK(ws.modules.empty());
}

TEST_CASE("the shipped fixtures load and validate") {
  Workspace ws = parse_workspace({kFixtures});
  CHECK(ws.algebras.size() >= 4);
  CHECK(ws.algebras.count("k"));
  CHECK(ws.algebras.count("kx2"));
  CHECK(ws.algebras.count("kx3"));
  CHECK(ws.algebras.count("quantum_q1"));
  CHECK(ws.algebras.count("quantum_q2"));
  CHECK(ws.modules.count("schulz_M"));
  CHECK(ws.modules.count("simple_kx2"));

  const AlgebraPtr& f7 = ws.algebra("quantum_f7");
  CHECK(f7->field.spec().kind == FieldKind::Prime);
  CHECK(f7->field.spec().p == 7);
  CHECK(ws.module("schulz_f7").dim == 2);

  const ModuleRep& m = ws.module("schulz_M");
  CHECK(m.dim == 2);
  CHECK(m.algebra->name == "quantum_q2");

  // the explicit-matrix document is the regular representation
  const ModuleRep& reg = ws.module("reg_q2");
  CHECK(reg.same_presentation(free_module(ws.algebra("quantum_q2"), 1)));
}

TEST_CASE("unresolved module references are named in the error") {
  TempDir tmp;
  tmp.write("m.json", R"({"name":"m","algebra":"nowhere","cyclic":[["0","1"]]})");
  try {
    parse_workspace({tmp.path});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("nowhere") != std::string::npos);
  }
}

TEST_CASE("duplicate names are rejected") {
  TempDir tmp;
  std::string doc = R"({"name":"dup","field":{"kind":"rational"},"dim":1,
    "basis":["1"],"unit":0,"radical":[],"table":[[0,0,[[0,"1"]]]]})";
  tmp.write("a.json", doc);
  tmp.write("b.json", doc);
  CHECK_THROWS_AS(parse_workspace({tmp.path}), Error);
}

TEST_CASE("scalars outside the field are rejected with context") {
  TempDir tmp;
  tmp.write("f2.json", R"({"name":"f2alg","field":{"kind":"prime","p":2},"dim":1,
    "basis":["1"],"unit":0,"radical":[],"table":[[0,0,[[0,"1"]]]]})");
  tmp.write("m.json", R"({"name":"bad","algebra":"f2alg","cyclic":[["1/2"]]})");
  try {
    parse_workspace({tmp.path});
    FAIL("expected an error");
  } catch (const Error& e) {
    std::string msg = e.what();
    CHECK(msg.find("denominator divisible by p") != std::string::npos);
    CHECK(msg.find("m.json") != std::string::npos);
  }
}

TEST_CASE("invalid algebra documents are refused at load time") {
  TempDir tmp;
  // x*x = 1 climbs out of the declared radical
  tmp.write("bad.json", R"({"name":"bad","field":{"kind":"rational"},"dim":2,
    "basis":["1","x"],"unit":0,"radical":[1],
    "table":[[0,0,[[0,"1"]]],[0,1,[[1,"1"]]],[1,0,[[1,"1"]]],[1,1,[[0,"1"]]]]})");
  CHECK_THROWS_AS(parse_workspace({tmp.path}), Error);
}

TEST_CASE("algebra documents round-trip") {
  Workspace ws = parse_workspace({kFixtures});
  for (const auto& [name, a] : ws.algebras) {
    std::string text = algebra_to_json_text(*a);
    AlgebraPresentation back = parse_algebra_document(text, "roundtrip");
    CHECK(back == *a);
  }
  const ModuleRep& m = ws.module("schulz_M");
  ModuleRep back = parse_module_document(module_to_json_text(m), "roundtrip", ws);
  CHECK(back.same_presentation(m));
}

TEST_CASE("report JSON round-trips byte-identically") {
  Workspace ws = parse_workspace({kFixtures});
  ExtDegreeReport rep = self_ext_degree(ws.module("schulz_M"), 20, 7);
  std::string emitted = report_json(rep).dump(2);
  std::string reparsed = ojson::parse(emitted).dump(2);
  CHECK(emitted == reparsed);
  CHECK(emitted.find("\"bound\": 1") != std::string::npos);
  CHECK(emitted.find("\"certificate\": \"CutoffOnly\"") != std::string::npos);
}

TEST_CASE("identical inputs produce identical reports") {
  Workspace ws = parse_workspace({kFixtures});
  ExtDegreeReport a = self_ext_degree(ws.module("schulz_M"), 20, 7);
  ExtDegreeReport b = self_ext_degree(ws.module("schulz_M"), 20, 7);
  CHECK(report_json(a).dump() == report_json(b).dump());

  FamilyAuditReport fa = audit_family(
      ws.algebra("kx2"),
      enumerate_cyclic_family(ws.algebra("kx2"),
                              {ws.algebra("kx2")->field.zero(),
                               ws.algebra("kx2")->field.one()},
                              1, 5000, 3),
      12, 3);
  FamilyAuditReport fb = audit_family(
      ws.algebra("kx2"),
      enumerate_cyclic_family(ws.algebra("kx2"),
                              {ws.algebra("kx2")->field.zero(),
                               ws.algebra("kx2")->field.one()},
                              1, 5000, 3),
      12, 3);
  CHECK(report_json(fa).dump() == report_json(fb).dump());
}

TEST_CASE("the schulz fixture reproduces the cyclic construction") {
  Workspace ws = parse_workspace({kFixtures});
  AlgebraPtr q2 = ws.algebra("quantum_q2");
  Vec gen(4, q2->field.zero());
  gen[1] = q2->field.one();
  gen[2] = q2->field.one();
  ModuleRep direct = cyclic_quotient(q2, {gen});
  CHECK(direct.action == ws.module("schulz_M").action);
}
