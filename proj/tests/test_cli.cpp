#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "g3/cli.hpp"
#include "g3/export.hpp"
#include "xml_check.hpp"

namespace {

struct Result {
  int code = 0;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "g3");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Result r;
  r.code = g3::cli::run(int(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::filesystem::path temp_path(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "g3_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path write_scene(const std::string& name, const std::string& body) {
  const auto p = temp_path(name);
  std::ofstream(p) << body;
  return p;
}

const char* const kScene = R"json({
  "schema_version": 1,
  "params": {"k": 2},
  "curves": {"cubic": {"f": "s^2/2", "g": "s^3/6", "domain": [0.5, 2]}},
  "surfaces": {"cyl": {"x": "u1", "y": "sin(u2)", "z": "cos(u2)", "u1": [0, 1], "u2": [0, 6.283185307179586]},
               "helixcyl": {"x": "u1", "y": "sin(u2)", "z": "cos(u2)", "u1": [-4, 4], "u2": [-4, 4]}},
  "traces": {"helix": {"u1": "s", "u2": "s", "domain": [-3, 3]}},
  "profiles": {"fig1": {"g": "s^2/2", "domain": [0, 5], "mode": "isotropic"}},
  "axes": {"up": [0, 0, 1]},
  "queries": {"q": {"surface": "cyl", "axis": "up", "beta": 1.0471975511965976, "grid": [32, 32]}}
})json";

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"frenet"}).code == 2);
  CHECK(run({"frenet", "--curve", "s^3/6;s^2/2"}).code == 2);
  CHECK(run({"frenet", "--curve", "s^2/2,foo(s)"}).code == 2);
  CHECK(run({"frenet", "--curve", "s^2/2,s^3/6", "--domain", "1"}).code == 2);
  CHECK(run({"isophote", "--surface", "u1,u2,0", "--beta", "0.5", "--level", "0.1"}).code == 2);
  CHECK(run({"isophote", "--surface", "u1,u2,0", "--beta", "0.5", "--grid", "1x4"}).code == 2);
  CHECK(run({"revolve", "--profile", "s", "--mode", "sideways"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("frenet") {
  const Result r = run({"frenet", "--curve", "s^2/2,s^3/6", "--domain", "0.5,2", "--samples", "4", "--csv", "-"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("s,kappa,tau\n", 0) == 0);

  const Result j = run({"frenet", "--curve", "s^2/2,s^3/6", "--domain", "0.5,2", "--samples", "4", "--json", "-"});
  REQUIRE(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc.at("schema_version") == 1);
  CHECK(doc.at("command") == "frenet");
  CHECK(doc.at("parameters").at("samples") == 4);

  // straight curve: numerical failure
  CHECK(run({"frenet", "--curve", "0,0", "--samples", "3"}).code == 1);
}

TEST_CASE("darboux and classify") {
  const Result d = run({"darboux", "--surface", "u1,sin(u2),cos(u2)", "--u1", "-4,4", "--u2", "-4,4", "--trace", "s,s",
                        "--domain", "-3,3", "--samples", "5", "--json", "-"});
  REQUIRE(d.code == 0);
  const auto doc = nlohmann::json::parse(d.out);
  CHECK(doc.at("command") == "darboux");

  const Result c = run({"classify", "--surface", "u1,u2,u1^2/2", "--u1", "-2,2", "--u2", "-2,2", "--trace", "s,0",
                        "--domain", "-1,1", "--json", "-"});
  REQUIRE(c.code == 0);
  CHECK(nlohmann::json::parse(c.out).at("schema_version") == 1);

  // not admissible: x(alpha(s)) = 2s
  CHECK(run({"darboux", "--surface", "u1,u2,0", "--trace", "2*s,0"}).code == 1);
}

TEST_CASE("axis") {
  const Result bad = run({"axis", "--case", "isotropic", "--angle", "0.5", "--surface", "u1,sin(u2),cos(u2)", "--u1",
                          "-4,4", "--u2", "-4,4", "--trace", "s,s", "--domain", "-3,3"});
  CHECK(bad.code == 1);
  CHECK(run({"axis", "--case", "diagonal", "--angle", "0.5", "--trace", "s,s"}).code == 2);
}

TEST_CASE("isophote") {
  const auto svg = temp_path("cyl.svg");
  const auto obj = temp_path("cyl.obj");
  const Result r = run({"isophote", "--surface", "u1,sin(u2),cos(u2)", "--u2", "0,6.283185307179586", "--beta",
                        "1.0471975511965976", "--svg", svg.string(), "--obj", obj.string(), "--json", "-"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("schema_version") == 1);
  CHECK(doc.at("command") == "isophote");
  CHECK(doc.at("result").at("polylines").size() == 2);

  const std::string text = slurp(svg);
  CHECK(xml_check::well_formed(text));
  std::istringstream in(slurp(obj));
  CHECK(g3::parse_obj(in).lines.size() == 2);

  const Result sil = run({"isophote", "--surface", "u1,u2,0", "--axis", "0,1,0", "--silhouette", "--grid", "4x4",
                          "--json", "-"});
  REQUIRE(sil.code == 0);
  CHECK(nlohmann::json::parse(sil.out).at("result").at("constant_field").at("whole_surface") == true);
}

TEST_CASE("revolve") {
  const auto obj = temp_path("fig1.obj");
  const Result r = run({"revolve", "--profile", "s^2/2", "--domain", "0,5", "--mode", "isotropic", "--obj",
                        obj.string(), "--json", "-"});
  REQUIRE(r.code == 0);
  std::istringstream in(slurp(obj));
  const g3::ObjData mesh = g3::parse_obj(in);
  CHECK(mesh.vertices.size() == 65 * 65);
  CHECK(mesh.faces.size() == 2 * 64 * 64);
  CHECK(nlohmann::json::parse(r.out).at("command") == "revolve");

  CHECK(run({"revolve", "--profile", "s", "--domain", "1,2", "--mode", "isotropic", "--c", "0"}).code == 1);
}

TEST_CASE("verify") {
  const Result r = run({"verify", "--filter", "prop43"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);

  const Result a = run({"verify", "--json", "-"});
  const Result b = run({"verify", "--json", "-"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const auto doc = nlohmann::json::parse(a.out);
  CHECK(doc.at("schema_version") == 1);
  CHECK(doc.at("summary").at("failed") == 0);

  const Result none = run({"verify", "--filter", "no-such-check"});
  CHECK(none.code == 2);
}

TEST_CASE("scene files") {
  const auto scene = write_scene("scene.json", kScene);
  const Result q = run({"--scene", scene.string(), "isophote", "--query", "q", "--json", "-"});
  REQUIRE(q.code == 0);
  CHECK(nlohmann::json::parse(q.out).at("result").at("polylines").size() == 2);

  CHECK(run({"--scene", scene.string(), "frenet", "--curve", "cubic", "--samples", "3"}).code == 0);
  CHECK(run({"--scene", scene.string(), "darboux", "--surface", "helixcyl", "--trace", "helix"}).code == 0);
  CHECK(run({"--scene", scene.string(), "revolve", "--profile", "fig1"}).code == 0);
  CHECK(run({"--scene", scene.string(), "frenet", "--curve", "missing"}).code == 2);

  const auto bad = write_scene("bad.json", R"({"schema_version": 1, "surfaces": {}, "colour": "red"})");
  CHECK(run({"--scene", bad.string(), "verify"}).code == 2);
  const auto dangling =
      write_scene("dangling.json", R"({"queries": {"q": {"surface": "nowhere", "axis": [0, 0, 1], "silhouette": true}}})");
  CHECK(run({"--scene", dangling.string(), "isophote", "--query", "q"}).code == 2);
  const auto garbage = write_scene("garbage.json", "{ not json");
  CHECK(run({"--scene", garbage.string(), "verify"}).code == 2);
}
