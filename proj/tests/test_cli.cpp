#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json_output.hpp"
#include "poisson_ore/parse.hpp"
#include "registry.hpp"
#include "test_support.hpp"

using namespace poisson_ore;
using namespace poisson_ore::testing;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in);
  return {std::istreambuf_iterator<char>(in), {}};
}

const std::filesystem::path golden_dir = POISSON_ORE_GOLDEN_DIR;

}  // namespace

TEST_CASE("jacobi rejects (y, z, x) with residual -(x+y+z)") {
  auto r = invoke({"jacobi", "--triple", "f=y,g=z,h=x", "--json"});
  CHECK(r.code == 1);
  CHECK(r.out.find("\"poisson\": false") != std::string::npos);
  CHECK(r.out.find("\"residual\": \"-x - y - z\"") != std::string::npos);
  CHECK(invoke({"jacobi", "--triple", "f=x*y-1,g=y^3,h=0"}).code == 0);
  CHECK(invoke({"jacobi", "--delta", "x=2*y,y=y^2+x"}).code == 0);
}

TEST_CASE("darboux JSON for the gwj derivation") {
  auto r = invoke({"darboux", "--delta", "x=2*y,y=y^2+x", "--dmax", "2", "--json"});
  REQUIRE(r.code == 0);
  auto j = cli::Json::parse(r.out);
  REQUIRE(j["certificates"].size() == 1);
  CHECK(j["certificates"][0]["q"] == "y^2 + x + 1");
  CHECK(j["certificates"][0]["cofactor"] == "2*y");
  CHECK(j["complete"] == true);
}

TEST_CASE("example gwj matches its registry entry") {
  auto r = invoke({"example", "gwj"});
  CHECK(r.code == 0);
  CHECK(r.out.find("expected spectrum: match") != std::string::npos);
  CHECK(r.out.find("(y^2 + x + 1)") != std::string::npos);
}

TEST_CASE("every registry example matches and finishes") {
  auto examples = cli::load_registry(cli::default_registry_path());
  CHECK(examples.size() >= 13);
  auto listed = invoke({"example", "--list", "--json"});
  REQUIRE(listed.code == 0);
  CHECK(cli::Json::parse(listed.out).size() == examples.size());
  for (const auto& ex : examples) {
    INFO(ex.name);
    auto r = invoke({"example", ex.name});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
  }
}

TEST_CASE("bergman matches at every listed lambda") {
  for (const char* l : {"1", "-1", "2"}) {
    INFO(l);
    CHECK(invoke({"example", "bergman", "--lambda", l}).code == 0);
  }
}

TEST_CASE("golden JSON is byte identical across runs and thread counts") {
  for (const char* name : {"gwj", "new", "exact-circle", "bergman"}) {
    INFO(name);
    std::string want = slurp(golden_dir / (std::string(name) + ".json"));
    for (const char* threads : {"1", "1", "3", "8"}) {
      auto r = invoke({"example", name, "--json", "--threads", threads});
      CHECK(r.code == 0);
      CHECK(r.out == want);
    }
  }
}

TEST_CASE("JSON field order is fixed") {
  auto r = invoke({"classify", "--delta", "x=2*y,y=y^2+x", "--json"});
  REQUIRE(r.code == 0);
  auto side = r.out.find("\"side\"");
  auto comp = r.out.find("\"completeness\"");
  auto entries = r.out.find("\"entries\"");
  CHECK(side < comp);
  CHECK(comp < entries);
  auto kind = r.out.find("\"kind\"");
  auto gens = r.out.find("\"generators\"");
  auto params = r.out.find("\"parameters\"");
  auto certs = r.out.find("\"certificates\"");
  CHECK(kind < gens);
  CHECK(gens < params);
  CHECK(params < certs);
}

TEST_CASE("usage and parse errors exit 2 with a diagnostic") {
  auto bad = invoke({"bracket", "--delta", "x=1,y=0", "2x", "x"});
  CHECK(bad.code == 2);
  CHECK(bad.out.empty());
  CHECK(bad.err.find("position 1") != std::string::npos);
  auto unknown = invoke({"bracket", "--delta", "x=1,y=0", "w", "x"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("'w'") != std::string::npos);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"darboux"}).code == 2);
  CHECK(invoke({"darboux", "--delta", "x=1"}).code == 2);
  CHECK(invoke({"darboux", "--delta", "x=1,y=0", "--dmax", "-1"}).code == 2);
  CHECK(invoke({"bracket", "--order", "deglex", "--delta", "x=1,y=0", "x", "y"}).code == 2);
  CHECK(invoke({"example", "nosuch"}).code == 2);
  CHECK(invoke({"shamsuddin", "--delta", "x=x,y=1"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("subcommand outputs") {
  CHECK(invoke({"bracket", "--delta", "x=2*y,y=y^2+x", "z", "x"}).out == "2*y\n");
  CHECK(invoke({"bracket", "--exact", "x^2+y^2", "y", "z"}).out == "2*x\n");
  CHECK(invoke({"ham", "--delta", "x=2*y,y=y^2+x", "z"}).out == "x -> 2*y, y -> y^2 + x, z -> 0\n");
  CHECK(invoke({"ore-mul", "--delta", "x=1,y=0", "z", "x"}).out == "x*z + 1\n");
  CHECK(invoke({"commutator", "--delta", "x=1,y=0", "z", "x^2"}).out == "2*x\n");
  CHECK(invoke({"commutator", "--delta", "x=2*y,y=y^2+x"}).out == "J = (x, y)\n");
  CHECK(invoke({"ore-mul", "--quantum", "--delta", "x=1,y=0", "z", "x"}).out == "x*z + h\n");

  auto dec = invoke({"decompose", "--triple", "f=x*z,g=y*z,h=0"});
  CHECK(dec.code == 0);
  CHECK(dec.out == "h = z\nf1 = x\ng1 = y\n");
  CHECK(invoke({"decompose", "--triple", "f=z,g=y,h=0"}).code == 1);

  auto sc = invoke({"semiclassical", "--delta", "x=2*y,y=y^2+x", "x*z", "y*z^2"});
  CHECK(sc.code == 0);
  CHECK(sc.out.find("agree") != std::string::npos);

  auto core = invoke({"core", "--delta", "x=1,y=0", "--ideal", "x", "--max-iter", "3", "--json"});
  auto cj = cli::Json::parse(core.out);
  CHECK(cj["basis"] == cli::Json::array({"x^4"}));
  CHECK(cj["status"] == "upper_bound");

  auto sing = cli::Json::parse(invoke({"singular", "--delta", "x=y,y=x+x^2*y", "--json"}).out);
  CHECK(sing["points"] == cli::Json::parse(R"([["0","0"]])"));
  CHECK(sing["resolved"] == true);

  CHECK(invoke({"image-solve", "--delta", "x=y^3,y=1-x*y", "--target", "1", "--dmax", "3"}).code == 1);
  auto img = invoke({"image-solve", "--delta", "x=1,y=0", "--target", "x"});
  CHECK(img.code == 0);
  CHECK(img.out == "p = 1/2*x^2\n");

  CHECK(invoke({"shamsuddin", "--c", "1", "--a", "x", "--b", "1"}).out == "simple\n");
  auto fails = invoke({"shamsuddin", "--c", "1", "--a", "0", "--b", "x", "--json"});
  CHECK(fails.code == 1);
  CHECK(cli::Json::parse(fails.out)["r"] == "1/2*x^2");
}

TEST_CASE("classify and gamma across sides") {
  auto ore = invoke({"classify", "--delta", "x=2*y,y=y^2+x", "--side", "ore", "--json"});
  REQUIRE(ore.code == 0);
  auto j = cli::Json::parse(ore.out);
  CHECK(j["side"] == "ore");
  CHECK(j["entries"].size() == 4);

  auto exact = cli::Json::parse(invoke({"classify", "--exact", "x^2+y^2", "--lambda", "0,1", "--json"}).out);
  std::vector<std::string> gens;
  for (const auto& e : exact["entries"])
    if (e["generators"].size() == 1) gens.push_back(e["generators"][0]);
  CHECK(gens == std::vector<std::string>{"x + i*y", "x - i*y", "x^2 + y^2 - 1"});

  auto mapped = invoke({"gamma", "--delta", "x=2*y,y=y^2+x", "--kind", "type2", "--generators", "y^2+x+1"});
  CHECK(mapped.code == 0);
  CHECK(mapped.out == "ore [type2] (y^2 + x + 1)\n");
  CHECK(invoke({"gamma", "--delta", "x=2*y,y=y^2+x", "--kind", "type2", "--generators", "y"}).code == 1);
  CHECK(invoke({"gamma", "--delta", "x=2*y,y=y^2+x", "--kind", "type1", "--generators", "x"}).code == 1);
  auto fam = invoke({"gamma", "--delta", "x=2*y,y=y^2+x", "--kind", "type1", "--generators", "x,y,z-alpha", "--params",
                  "alpha", "--side", "ore"});
  CHECK(fam.code == 0);
  CHECK(fam.out == "poisson [type1] (x, y, z - alpha)\n");
}

TEST_CASE("order flag and environment") {
  CHECK(invoke({"bracket", "--order", "lex", "--delta", "x=2*y,y=y^2+x", "z", "y"}).out == "x + y^2\n");
  ::setenv("POISSON_ORE_ORDER", "lex", 1);
  auto env = invoke({"bracket", "--delta", "x=2*y,y=y^2+x", "z", "y"});
  ::unsetenv("POISSON_ORE_ORDER");
  CHECK(env.out == "x + y^2\n");
  CHECK(invoke({"bracket", "--delta", "x=2*y,y=y^2+x", "z", "y"}).out == "y^2 + x\n");
}

TEST_CASE("options from --file") {
  auto path = std::filesystem::temp_directory_path() / "poisson_ore_cli_test.ini";
  {
    std::ofstream f(path);
    f << "delta = \"x=2*y,y=y^2+x\"\ndmax = 2\njson = true\n";
  }
  auto r = invoke({"darboux", "--file", path.string()});
  std::filesystem::remove(path);
  REQUIRE(r.code == 0);
  CHECK(cli::Json::parse(r.out)["certificates"][0]["q"] == "y^2 + x + 1");
}

TEST_CASE("rendered polynomials parse back to themselves") {
  std::mt19937 rng(11);
  for (int k = 0; k < 200; ++k) {
    Poly p = random_poly(rng, ring_b(), 3, 5);
    std::string s = p.to_string();
    Poly q = parse_poly(s, ring_b());
    CHECK(q == p);
    CHECK(q.to_string() == s);
  }
}
