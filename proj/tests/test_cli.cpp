#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "aaj/diagram.hpp"
#include "cli.hpp"
#include "support/fixtures.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code = 0;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = aaj::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("aaj-test-" + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path file(const std::string& name, const std::string& content) const {
    std::ofstream(path_ / name) << content;
    return path_ / name;
  }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

const std::string kData = AAJ_TEST_DATA_DIR;

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("jones human output") {
    const Run r = run({"jones", fixtures::kTrefoil});
    CHECK(r.code == 0);
    CHECK(r.out == "bracket: -A^(-5) - A^3 + A^7\njones: -t^(-4) + t^(-3) + t^(-1)\n");
  }

  TEST_CASE("jones of the two-component unlink") {
    const Run r = run({"jones", "loops=2"});
    CHECK(r.code == 0);
    CHECK(lines(r.out).at(1) == "jones: -t^(-1/2) - t^(1/2)");
  }

  TEST_CASE("jones of the example is bit exact") {
    const Run r = run({"jones", "--json", fixtures::kAAExample});
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["jones"] == fixtures::kAAExampleJones);
    CHECK(j["bracket"] == fixtures::kAAExampleBracket);
    CHECK(j["writhe"] == -6);
    CHECK(json::parse(j.dump()).dump() == j.dump());
    CHECK(r.out == j.dump() + "\n");
  }

  TEST_CASE("input from a file and from stdin marker") {
    TempDir tmp;
    const fs::path p = tmp.file("k.pd", fixtures::kTrefoil);
    CHECK(run({"jones", p.string()}).out == run({"jones", fixtures::kTrefoil}).out);
  }

  TEST_CASE("cap exceeded") {
    std::string pd;
    for (int i = 0; i < 25; ++i) {
      // a chain of 25 kinks on one unknotted strand
      const int a = 2 * i + 1, b = 2 * i + 2, c = i == 24 ? 1 : 2 * i + 3;
      pd += "X[" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(b) + "," +
            std::to_string(c) + "] ";
    }
    const Run r = run({"jones", pd});
    CHECK(r.code == 3);
    CHECK(r.err.find("CapError") != std::string::npos);
    const Run j = run({"jones", "--json", pd});
    CHECK(j.code == 3);
    CHECK(json::parse(j.out)["error"]["kind"] == "CapError");
    CHECK(run({"jones", "--cap", "2", fixtures::kTrefoil}).code == 3);
  }

  TEST_CASE("input errors") {
    const Run r = run({"jones", "X[1,2,3"});
    CHECK(r.code == 1);
    CHECK(r.err.find("ParseError") != std::string::npos);
    CHECK(run({"jones", "X[1,4,2,5] X[3,6,4,1] X[5,2,6,7]"}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({}).code == 1);
    const Run j = run({"jones", "--json", "X[1,2,3"});
    CHECK(json::parse(j.out)["error"]["kind"] == "ParseError");
  }

  TEST_CASE("reverse flag") {
    const Run plain = run({"jones", fixtures::kHopf});
    const Run rev = run({"jones", "--reverse", "1", fixtures::kHopf});
    CHECK(plain.code == 0);
    CHECK(rev.code == 0);
    CHECK(lines(rev.out).at(1) == "jones: -t^(1/2) - t^(5/2)");
    CHECK(lines(plain.out).at(1) == "jones: -t^(-5/2) - t^(-1/2)");
  }

  TEST_CASE("aa command") {
    const Run r = run({"aa", "--json", fixtures::kAAExample});
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    const json& rep = j["report"];
    CHECK(rep["alpha0"] == 1);
    CHECK(rep["alpha1"] == -3);
    CHECK(rep["alpha_cm4"] == 3);
    CHECK(rep["alpha_cm3"] == -2);
    CHECK(rep["minimality"] == "Minimal");
    CHECK(rep["sign_verdict"] == "Consistent");
    CHECK(rep["nontriviality"] == "NontrivialJones");
    CHECK(rep["stats"]["v"] == 7);
    CHECK(rep["stats_bar"]["S"] == 1);

    CHECK(run({"aa", fixtures::kTrefoil}).code == 10);
    CHECK(run({"aa", fixtures::kK15}).code == 12);
    // a trefoil with a non-alternating kink: the kink is a dealternator but
    // its checkerboard edge is a loop
    const aaj::LinkDiagram t = aaj::parse_pd(fixtures::kTrefoil);
    int kinked = 0;
    for (bool positive : {true, false})
      for (bool over_first : {true, false}) {
        const aaj::LinkDiagram k = aaj::add_kink(t, 1, positive, over_first);
        if (aaj::is_alternating(k)) continue;
        ++kinked;
        CHECK(run({"aa", aaj::serialize(k)}).code == 11);
      }
    CHECK(kinked == 2);

    const Run human = run({"aa", fixtures::kAAExample});
    CHECK(human.out.find("alphas: 1 -3 3 -2") != std::string::npos);
    CHECK(human.out.find("minimality: Minimal") != std::string::npos);
  }

  TEST_CASE("tait and turaev") {
    const Run t = run({"tait", "--json", fixtures::kTrefoil});
    CHECK(t.code == 0);
    const json j = json::parse(t.out);
    CHECK(j["G"]["stats"]["tau"] == 1);
    CHECK(j["Gbar"]["stats"]["mu"] == 1);
    const Run g = run({"turaev", "--json", fixtures::kAAExample});
    CHECK(json::parse(g.out)["turaev_genus"] == 1);
  }

  TEST_CASE("families command") {
    const Run r = run({"families", "--json"});
    CHECK(r.code == 0);
    const auto ls = lines(r.out);
    CHECK(ls.size() == 21);
    for (const auto& l : ls) CHECK(json::parse(l)["equations_hold"] == true);
    CHECK(lines(run({"families", "--id", "4"}).out).size() == 3);
  }

  TEST_CASE("batch with check") {
    const Run r = run({"batch", "--check", kData + "/fixtures.csv"});
    CHECK(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 5);
    const std::vector<std::string> names = {"unknot", "trefoil_std", "hopf", "fig-AAExample", "15n41133"};
    for (std::size_t i = 0; i < ls.size(); ++i) {
      const json j = json::parse(ls[i]);
      CHECK(j["name"] == names[i]);
      CHECK(j["check"] == "pass");
      CHECK(json::parse(j.dump()).dump() == ls[i]);
    }
  }

  TEST_CASE("batch failure modes") {
    TempDir tmp;
    CHECK(run({"batch", tmp.file("empty.csv", "").string()}).out.empty());
    CHECK(run({"batch", tmp.file("empty.csv", "").string()}).code == 0);
    CHECK(run({"batch", tmp.file("header.csv", "name,pd\n").string()}).code == 0);

    const Run bad = run({"batch", tmp.file("bad.csv", "name,pd\nok,\"X[1,1,2,2]\"\nbroken,\"X[1,2\"\nalso,loops=1\n").string()});
    CHECK(bad.code == 1);
    const auto ls = lines(bad.out);
    REQUIRE(ls.size() == 3);
    CHECK_FALSE(json::parse(ls[0]).contains("error"));
    CHECK(json::parse(ls[1])["error"]["kind"] == "ParseError");
    CHECK_FALSE(json::parse(ls[2]).contains("error"));

    const Run mismatch =
        run({"batch", "--check", tmp.file("mm.csv", "name,pd,expected_jones\nk,\"X[1,1,2,2]\",t\n").string()});
    CHECK(mismatch.code == 2);
    CHECK(json::parse(lines(mismatch.out).at(0))["check"] == "fail");

    const Run dup = run({"batch", tmp.file("dup.csv", "name,pd\na,loops=1\na,loops=2\n").string()});
    CHECK(dup.code == 1);
    CHECK(json::parse(lines(dup.out).at(1))["error"]["kind"] == "ValidationError");

    CHECK(run({"batch", (tmp.path() / "missing.csv").string()}).code == 1);
    CHECK(run({"batch", tmp.file("nopd.csv", "name,foo\na,b\n").string()}).code == 1);
  }

  TEST_CASE("parallel batch matches sequential") {
    const Run seq = run({"batch", kData + "/fixtures.csv"});
    const Run par = run({"batch", "--parallel", "4", kData + "/fixtures.csv"});
    auto sorted = [](std::vector<std::string> v) {
      std::sort(v.begin(), v.end());
      return v;
    };
    CHECK(sorted(lines(seq.out)) == sorted(lines(par.out)));
    CHECK(seq.out == par.out);
  }

  TEST_CASE("cache never changes output") {
    TempDir tmp;
    const std::string dir = (tmp.path() / "cache").string();
    const Run cold = run({"batch", kData + "/fixtures.csv"});
    const Run first = run({"batch", "--cache", dir, kData + "/fixtures.csv"});
    const Run second = run({"batch", "--cache", dir, kData + "/fixtures.csv"});
    CHECK(first.out == cold.out);
    CHECK(second.out == cold.out);
    CHECK(fs::exists(fs::path(dir) / "aaj-cache.jsonl"));
    CHECK(lines(run({"jones", "--cache", dir, fixtures::kTrefoil}).out) == lines(run({"jones", fixtures::kTrefoil}).out));
  }

  TEST_CASE("version") {
    const Run r = run({"--version"});
    CHECK(r.code == 0);
    CHECK(r.out.find(AAJ_VERSION) != std::string::npos);
  }
}
