#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "doctest.h"
#include "mwbs/cli.hpp"
#include "mwbs/io.hpp"

using namespace mwbs;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = 0;
  std::string out, err;
};

Run cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class Scratch {
 public:
  Scratch() : dir_(fs::temp_directory_path() / ("mwbs_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    auto p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

 private:
  fs::path dir_;
};

const char* kTriangle =
    R"({"vertices":3,"edges":[{"id":0,"tail":0,"head":1,"weight":"1/1"},{"id":1,"tail":1,"head":2,"weight":"1/1"},)"
    R"({"id":2,"tail":2,"head":0,"weight":"1/1"}],"rotation":[[{"edge":0,"end":"tail"},{"edge":2,"end":"head"}],)"
    R"([{"edge":1,"end":"tail"},{"edge":0,"end":"head"}],[{"edge":2,"end":"tail"},{"edge":1,"end":"head"}]]})";

const char* kStar =
    R"({"vertices":5,"edges":[{"id":0,"tail":1,"head":0,"weight":"1/1"},{"id":1,"tail":0,"head":2,"weight":"1/1"},)"
    R"({"id":2,"tail":3,"head":0,"weight":"1/1"},{"id":3,"tail":0,"head":4,"weight":"1/1"}],"rotation":[)"
    R"([{"edge":0,"end":"head"},{"edge":1,"end":"tail"},{"edge":2,"end":"head"},{"edge":3,"end":"tail"}],)"
    R"([{"edge":0,"end":"tail"}],[{"edge":1,"end":"head"}],[{"edge":2,"end":"tail"}],[{"edge":3,"end":"head"}]]})";

std::string k5() {
  Json edges = Json::array(), rot = Json::array();
  std::vector<Json> darts(5, Json::array());
  int id = 0;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b, ++id) {
      edges.push_back({{"id", id}, {"tail", a}, {"head", b}, {"weight", "1/1"}});
      darts[a].push_back({{"edge", id}, {"end", "tail"}});
      darts[b].push_back({{"edge", id}, {"end", "head"}});
    }
  for (auto& d : darts) rot.push_back(d);
  return Json{{"vertices", 5}, {"edges", edges}, {"rotation", rot}}.dump();
}

}  // namespace

TEST_CASE("gen is deterministic and validates") {
  Scratch s;
  Run a = cli({"gen", "--n", "12", "--seed", "4"});
  Run b = cli({"gen", "--n", "12", "--seed", "4"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(cli({"gen", "--n", "12", "--seed", "5"}).out != a.out);
  auto file = s.write("g.json", a.out);
  Run v = cli({"validate", file});
  CHECK(v.code == 0);
  CHECK(parse_json(v.out)["valid"] == true);

  Instance one = decode_instance(cli({"gen", "--n", "1"}).out);
  CHECK(one.graph.vertex_count() == 1);
  CHECK(one.edge_count() == 0);
  Instance three = decode_instance(cli({"gen", "--n", "3"}).out);
  CHECK(three.edge_count() == 3);
  Instance sparse = decode_instance(cli({"gen", "--n", "15", "--density", "sparse", "--p", "0/1"}).out);
  CHECK(sparse.edge_count() == 14);
}

TEST_CASE("validate reports the Euler failure of K5") {
  Scratch s;
  Run r = cli({"validate", s.write("k5.json", k5())});
  CHECK(r.code == 1);
  auto doc = parse_json(r.out);
  CHECK(doc["valid"] == false);
  CHECK(doc["error"] == "euler");
}

TEST_CASE("solve and re-certify") {
  Scratch s;
  auto tri = s.write("tri.json", kTriangle);
  Run r = cli({"solve", tri});
  REQUIRE(r.code == 0);
  auto doc = parse_json(r.out);
  CHECK(doc["deleted_weight"] == "0/1");
  CHECK(doc["kept"].size() == 3);

  auto star = s.write("star.json", kStar);
  for (std::string method : {"oracle", "dp", "subexp", "auto"}) {
    Run m = cli({"solve", star, "--method", method, "-o", s.path("sol.json")});
    REQUIRE(m.code == 0);
    Run v = cli({"validate", star, "--solution", s.path("sol.json")});
    CHECK(v.code == 0);
    auto vd = parse_json(v.out);
    CHECK(vd["solution"]["bimodal"] == true);
    CHECK(vd["solution"]["certificate_matches"] == true);
  }
  auto sol = parse_json(cli({"solve", star, "--method", "dp"}).out);
  CHECK(sol["deleted_weight"] == "1/1");

  // A tampered solution keeping every edge is rejected.
  sol["kept"] = Json::array({0, 1, 2, 3});
  sol["kept_weight"] = "4/1";
  sol["deleted_weight"] = "0/1";
  Run bad = cli({"validate", star, "--solution", s.write("bad.json", sol.dump())});
  CHECK(bad.code == 1);
}

TEST_CASE("decomposition, kernel, compress and eptas subcommands") {
  Scratch s;
  auto star = s.write("star.json", kStar);
  Run d = cli({"decomp", "build", star, "--strategy", "bisect", "-o", s.path("d.json")});
  REQUIRE(d.code == 0);
  Run dv = cli({"decomp", "validate", star, s.path("d.json")});
  CHECK(dv.code == 0);
  CHECK(parse_json(dv.out)["ok"] == true);
  Run dp = cli({"solve", star, "--method", "dp", "--decomp", s.path("d.json")});
  CHECK(dp.code == 0);

  Run k = cli({"kernelize", star});
  CHECK(k.code == 0);
  Run c = cli({"compress", star});
  CHECK(c.code == 0);
  Run cn = cli({"compress", star, "--no-shrink"});
  CHECK(cn.code == 0);
  Run st = cli({"stats", star});
  CHECK(parse_json(st.out)["b"] == 1);

  Run em = cli({"eptas", "max", star, "--epsilon", "1/2"});
  REQUIRE(em.code == 0);
  CHECK(parse_json(em.out)["t"] == 2);
  Run en = cli({"eptas", "min", star, "--epsilon", "1/2"});
  REQUIRE(en.code == 0);
  CHECK(parse_json(en.out)["solution"]["deleted_weight"] == "1/1");
  CHECK(cli({"eptas", "max", star, "--epsilon", "0/1"}).code != 0);
}

TEST_CASE("bench agrees with the oracle") {
  Run r = cli({"bench", "--suite", "small", "--check-oracle"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("instance,method,value,deleted,width,b,millis", 0) == 0);
}

TEST_CASE("usage and input errors") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"solve"}).code == 2);
  CHECK(cli({"solve", "x.json", "--method", "magic"}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
  Scratch s;
  CHECK(cli({"solve", s.path("missing.json")}).code == 1);
  CHECK(cli({"solve", s.write("junk.json", "{not json")}).code == 1);
}
