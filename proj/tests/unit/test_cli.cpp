#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "braidcoh/cli.hpp"
#include "braidcoh/presentation.hpp"
#include "braidcoh/resolution.hpp"

using namespace braidcoh;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << content;
  return p;
}

}  // namespace

TEST_CASE("cli examples") {
  Run h = run({"cohomology", "--algebra", "jordan", "--max-h", "3"});
  CHECK(h.code == 0);
  CHECK(h.out == "{\"H\":[1,2,1,0]}\n");

  Run nf = run({"nf", "--algebra", "jordan", "--expr", "y*x"});
  CHECK(nf.code == 0);
  CHECK(nf.out == "\"x*y - 1/2*x^2\"\n");
  CHECK(run({"nf", "--algebra", "jordan", "--expr", "y*x", "--format", "text"}).out == "x*y - 1/2*x^2\n");

  Run c = run({"verify-commutativity", "--algebra", "super-jordan", "--p", "2", "--q", "2", "--trunc", "8"});
  CHECK(c.code == 0);
  auto doc = nlohmann::json::parse(c.out);
  CHECK(doc["pass"] == true);
  REQUIRE_FALSE(doc["rows"].empty());
  for (const char* key : {"p", "q", "generator", "lhs", "rhs", "sign", "pass"}) CHECK(doc["rows"][0].contains(key));
}

TEST_CASE("cli exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"nf", "--algebra", "jordan"}).code == 2);
  CHECK(run({"nf", "--algebra", "jordan", "--expr", "y*"}).code == 2);
  CHECK(run({"cohomology", "--format", "xml"}).code == 2);
  CHECK(run({"cohomology", "--algebra", "file:/nonexistent.json"}).code == 2);
  CHECK(run({"verify-commutativity", "--p", "1"}).code == 2);
  CHECK(run({"--help"}).code == 0);

  // A resolution file whose printed t-action breaks equivariance fails validation.
  Algebra s(super_jordan_plane());
  FreeResolution bad = builtin_super_jordan(s, 3, true);
  auto path = temp_file("braidcoh_bad_resolution.json", resolution_to_json(bad).dump());
  Run v = run({"validate-resolution", "--algebra", "super-jordan", "--resolution", "file:" + path.string()});
  CHECK(v.code == 1);
  CHECK_FALSE(v.err.empty());
}

TEST_CASE("cli reports") {
  Run dec = run({"verify-dec", "--algebra", "super-jordan", "--max-h", "3", "--trunc", "4"});
  CHECK(dec.code == 0);
  CHECK(nlohmann::json::parse(dec.out)["results"].size() == 3);

  Run cod = run({"verify-coduoid", "--algebra", "jordan", "--trunc", "6"});
  CHECK(cod.code == 0);
  CHECK(nlohmann::json::parse(cod.out)["homotopy_found"] == true);

  Run val = run({"validate-resolution", "--algebra", "jordan", "--trunc", "8", "--format", "text"});
  CHECK(val.code == 0);
  CHECK(val.out.find("exact") != std::string::npos);

  Run chk = run({"check-presentation", "--algebra", "jordan", "--rng-seed", "9", "--cases", "50"});
  CHECK(chk.code == 0);
  CHECK(nlohmann::json::parse(chk.out)["braid"]["cases"] == 50);

  Run act = run({"act", "--algebra", "jordan", "--expr", "y", "--k", "-1"});
  CHECK(act.out == "\"y - x\"\n");

  Run cop = run({"coproduct", "--algebra", "jordan", "--expr", "x^2"});
  CHECK(nlohmann::json::parse(cop.out)["coproduct"] == "1 ⊗ x^2 + 2*x ⊗ x + x^2 ⊗ 1");

  Run std_order = run({"cup-table", "--algebra", "jordan", "--p", "1", "--q", "1", "--standard-order"});
  auto t = nlohmann::json::parse(std_order.out);
  CHECK(t["order"] == "standard");
  CHECK(t["tables"][0]["entries"].size() == 4);
}

TEST_CASE("cli is deterministic and honours the environment") {
  std::vector<std::string> args{"verify-commutativity", "--algebra", "super-jordan", "--max-h", "4"};
  CHECK(run(args).out == run(args).out);

  setenv("BRAIDCOH_TRUNC", "2", 1);
  Run b = run({"basis", "--algebra", "super-jordan"});
  unsetenv("BRAIDCOH_TRUNC");
  CHECK(nlohmann::json::parse(b.out)["dims"] == nlohmann::json::array({1, 2, 3}));
  setenv("BRAIDCOH_TRUNC", "many", 1);
  CHECK(run({"basis"}).code == 2);
  unsetenv("BRAIDCOH_TRUNC");
}

TEST_CASE("cli reads presentations and resolutions from files") {
  auto alg = temp_file("braidcoh_jordan.json", presentation_to_json(jordan_plane()).dump());
  Algebra j(jordan_plane());
  auto res = temp_file("braidcoh_jordan_res.json", resolution_to_json(builtin_jordan(j)).dump());
  Run h = run({"cohomology", "--algebra", "file:" + alg.string(), "--resolution", "file:" + res.string(), "--max-h",
               "3"});
  CHECK(h.code == 0);
  CHECK(h.out == "{\"H\":[1,2,1,0]}\n");
  CHECK(run({"cohomology", "--algebra", "file:" + alg.string()}).code == 2);
  CHECK(run({"nf", "--algebra", "file:" + alg.string(), "--expr", "y*x"}).out == "\"x*y - 1/2*x^2\"\n");
}
