#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "bsconf/cli.hpp"
#include "bsconf/errors.hpp"

using namespace bsconf;
using nlohmann::json;

namespace {

  struct Result {
    int         rc;
    std::string out;
    std::string err;
  };

  Result run(std::vector<std::string> const& argv) {
    std::ostringstream out;
    std::ostringstream err;
    int                rc = cli::run(argv, out, err);
    return {rc, out.str(), err.str()};
  }

}  // namespace

TEST_CASE("parse examples") {
  auto c = cli::parse({"poset", "--n", "12", "--format", "dot"});
  CHECK(c.name == "poset");
  CHECK(c.params.at("n") == "12");
  CHECK(c.format == "dot");
  CHECK_FALSE(c.meta);

  auto w = cli::parse({"word-length", "--n", "6", "--h", "0.1", "--k", "0", "--ideal", "{1}"});
  CHECK(w.name == "word-length");
  CHECK(w.params.at("h") == "0.1");
  CHECK(w.params.at("ideal") == "{1}");
  CHECK(w.format == "json");

  CHECK_THROWS_AS(cli::parse({}), UsageError);
  CHECK_THROWS_AS(cli::parse({"frobnicate"}), UsageError);
  try {
    cli::parse({"poset", "--n", "12", "--bogus-flag", "3"});
    FAIL("no exception");
  } catch (UsageError const& e) {
    CHECK(std::string(e.what()).find("--bogus-flag") != std::string::npos);
  }
}

TEST_CASE("every subcommand is recognized") {
  for (auto const* name : {"poset", "ideal-contains", "ideal-normalize", "confining-verify", "ideal-of",
                           "word-length", "tree-ball", "h2", "wreath-qi", "wreath-separation",
                           "nadic-arith"}) {
    CHECK(cli::parse({name}).name == name);
    CHECK(cli::usage().find(name) != std::string::npos);
  }
}

TEST_CASE("exit codes") {
  CHECK(run({}).rc == 2);
  CHECK(run({"poset", "--nope"}).rc == 2);
  auto bad = run({"poset", "--n", "1"});
  CHECK(bad.rc == 1);
  CHECK(bad.out.empty());
  CHECK(bad.err.find("InvalidN") != std::string::npos);
  CHECK(run({"word-length", "--n", "10", "--h", "0.9a", "--ideal", "{1}"}).rc == 1);
  CHECK(run({"word-length", "--n", "10", "--h", "0.9"}).rc == 2);
  CHECK(run({"poset", "--n", "7"}).rc == 0);
}

TEST_CASE("poset output") {
  auto r = run({"poset", "--n", "5"});
  REQUIRE(r.rc == 0);
  auto j = json::parse(r.out);
  CHECK(j["elements"].size() == 4);
  auto d = run({"poset", "--n", "12", "--format", "dot"});
  CHECK(d.out.rfind("digraph", 0) == 0);
  CHECK(d.out.find("tree_1 -> tree_3") != std::string::npos);
}

TEST_CASE("h2 output") {
  auto r = run({"h2", "--n", "2", "--h", "0", "--k", "1"});
  REQUIRE(r.rc == 0);
  CHECK(std::abs(json::parse(r.out)["displacement"].get<double>() - std::log(2.0)) < 1e-9);
}

TEST_CASE("confining-verify output") {
  auto r = run({"confining-verify", "--n", "10", "--set", "qminus", "--flavor", "inverse"});
  REQUIRE(r.rc == 0);
  auto j = json::parse(r.out);
  CHECK(j["axiom_c_k0"] == 1);
  CHECK(j["strict_witness"] == "0.1");
  auto s = run({"confining-verify", "--n", "6", "--set", "s", "--ideal", "{1}"});
  REQUIRE(s.rc == 0);
  CHECK(json::parse(s.out)["axiom_c_k0"] == 0);
}

TEST_CASE("word-length, tree-ball, ideal commands") {
  auto w = run({"word-length", "--n", "6", "--h", "0.1", "--k", "0", "--ideal", "{1}", "--method", "both"});
  REQUIRE(w.rc == 0);
  auto jw = json::parse(w.out);
  CHECK(jw["exact"] == 3);
  CHECK(jw["bfs"] == 3);

  auto t = run({"tree-ball", "--n", "2", "--ideal", "{1}", "--radius", "2"});
  REQUIRE(t.rc == 0);
  CHECK(json::parse(t.out)["vertices"].size() == 10);

  auto n = run({"ideal-normalize", "--n", "12", "--exps", "3,zero", "--format", "text"});
  REQUIRE(n.rc == 0);
  CHECK(n.out.find("zero_set {2} A=3") != std::string::npos);

  auto c = run({"ideal-contains", "--n", "6", "--ideal", "{1}", "--residue", "3", "--depth", "2"});
  REQUIRE(c.rc == 0);
  CHECK(c.out.find("Out") != std::string::npos);

  auto l = run({"ideal-of", "--n", "12", "--set", "s", "--ideal", "{2}"});
  REQUIRE(l.rc == 0);
  CHECK(l.out.find("zero") != std::string::npos);

  auto a = run({"nadic-arith", "--n", "6", "--depth", "2", "--a", "10", "--op", "split", "--format", "text"});
  REQUIRE(a.rc == 0);
  CHECK(a.out == "2 1\n");
}

TEST_CASE("wreath commands") {
  auto q = run({"wreath-qi", "--i", "2", "--steps", "3", "--max-degree", "11"});
  REQUIRE(q.rc == 0);
  auto jq = json::parse(q.out);
  CHECK(jq["max_coeff"][3] == 8);
  auto s = run({"wreath-separation", "--i", "1", "--j", "2", "--r", "10"});
  REQUIRE(s.rc == 0);
  CHECK(s.out.find("16") != std::string::npos);
  CHECK(run({"wreath-separation", "--i", "2", "--j", "2", "--r", "3"}).rc == 1);
}

TEST_CASE("byte-identical output across runs") {
  std::vector<std::vector<std::string>> cmds{
      {"poset", "--n", "30", "--format", "dot"},
      {"confining-verify", "--n", "12", "--set", "s", "--ideal", "{1}"},
      {"tree-ball", "--n", "6", "--ideal", "{1,2}", "--radius", "2", "--format", "dot"},
      {"word-length", "--n", "10", "--h", "0.01", "--k", "0", "--ideal", "{1,2}", "--format", "csv"},
      {"wreath-qi", "--i", "1", "--steps", "3", "--format", "csv"},
  };
  for (auto const& c : cmds) {
    auto a = run(c);
    auto b = run(c);
    CHECK(a.rc == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("--meta goes to stderr only") {
  auto plain = run({"poset", "--n", "12"});
  auto meta  = run({"poset", "--n", "12", "--meta"});
  CHECK(plain.out == meta.out);
  CHECK(plain.err.empty());
  CHECK(meta.err.find("unix_time") != std::string::npos);
}

TEST_CASE("config file with flag override") {
  auto path = std::filesystem::temp_directory_path() / "bsconf_test_config.txt";
  {
    std::ofstream f(path);
    f << "# defaults\nn = 6\nideal = {1}\nradius=1\nmax_nonzero = 2\n";
  }
  auto from_file = run({"tree-ball", "--config", path.string()});
  REQUIRE(from_file.rc == 0);
  auto jf = json::parse(from_file.out);
  CHECK(jf["radius"] == 1);
  CHECK(jf["ideal"]["n"] == 6);

  auto overridden = run({"tree-ball", "--config", path.string(), "--radius", "2"});
  REQUIRE(overridden.rc == 0);
  CHECK(json::parse(overridden.out)["radius"] == 2);

  auto c = cli::parse({"tree-ball", "--config", path.string(), "--n", "12"});
  CHECK(c.params.at("n") == "12");
  CHECK(c.params.at("radius") == "1");
  std::filesystem::remove(path);

  CHECK(run({"poset", "--config", "/nonexistent/bsconf.cfg"}).rc != 0);
}
