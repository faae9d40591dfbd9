#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "heegaard/cli.hpp"
#include "heegaard/format.hpp"
#include "heegaard/oracle.hpp"

using namespace heegaard;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "heegaard");
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = run_command(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "heegaard-cli-test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("parity exit codes") {
  const Run holds = run({"parity", "torus-s1", "--irreducible"});
  CHECK(holds.code == kHolds);
  CHECK(contains(holds.out, "even parity holds; certificate: irreducible"));
  const Run plain = run({"parity", "torus-s1"});
  CHECK(plain.code == kHolds);
  CHECK(contains(plain.out, "certificate: non-stabilized"));
  const Run fails = run({"parity", "s3-genus2", "--irreducible"});
  CHECK(fails.code == kFails);
  CHECK(contains(fails.out, "condition not met; no conclusion"));
  CHECK_FALSE(contains(fails.out, "certificate:"));
}

TEST_CASE("invalid input exits 2") {
  CHECK(run({}).code == kInvalid);
  CHECK(run({"frobnicate"}).code == kInvalid);
  CHECK(run({"parity", "no-such-file.hd"}).code == kInvalid);
  CHECK(run({"random", "--genus", "1", "--twists", "0", "--seed", "1"}).code == kInvalid);
  CHECK(run({"surgery", "tight-genus2", "--alpha", "E1", "--power", "2"}).code == kInvalid);
  const Run level1 = run({"rectangles", "torus-s1"});
  CHECK(level1.code == kInvalid);
  CHECK(contains(level1.err, "level-2 data required"));
}

TEST_CASE("help exits 0") {
  const Run r = run({"--help"});
  CHECK(r.code == kHolds);
  CHECK(contains(r.out, "parity"));
}

TEST_CASE("matrix prints the columns") {
  const Run r = run({"matrix", "torus-s1", "--json"});
  REQUIRE(r.code == kHolds);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["columns"].size() == 6);
  CHECK(j["rows"][4][0] == 0);
  CHECK(j["rows"][0][0] == 2);
}

TEST_CASE("rectangles on the tight fixture") {
  const Run r = run({"rectangles", "tight-genus2"});
  CHECK(r.code == kHolds);
  CHECK(contains(r.out, "rectangle condition holds; certificate: strongly irreducible"));
  const Run j = run({"rectangles", "tight-genus2", "--json"});
  CHECK(nlohmann::json::parse(j.out)["holds"] == true);
  const Run one = run({"tight", "tight-genus2", "1", "Q2"});
  CHECK(one.code == kHolds);
}

TEST_CASE("batch with jobs returns the worst code") {
  const Run r = run({"parity", "torus-s1", "s3-genus2", "tight-genus2", "--jobs", "3"});
  CHECK(r.code == kFails);
  CHECK(contains(r.out, "== s3-genus2 =="));
  const Run bad = run({"validate", "torus-s1", "missing.hd", "--jobs", "2"});
  CHECK(bad.code == kInvalid);
  CHECK(contains(bad.err, "error:"));
  CHECK(run({"validate", "torus-s1", "s3-genus2", "tight-genus2", "--jobs", "2"}).code == kHolds);
}

TEST_CASE("diagram-producing commands write parseable files") {
  const auto rnd = scratch("random.hd");
  REQUIRE(run({"random", "--genus", "2", "--twists", "2", "--seed", "9", "--out", rnd.string()}).code == kHolds);
  CHECK(run({"validate", rnd.string()}).code == kHolds);
  CHECK(run({"audit", rnd.string()}).code == kHolds);

  const Run printed = run({"random", "--genus", "2", "--twists", "2", "--seed", "9"});
  std::ifstream in(rnd);
  const std::string written((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(printed.out == written);

  const auto with_alpha = scratch("alpha.hd");
  {
    Rng rng(4);
    AlphaOptions opts;
    opts.cross_every_e = true;
    const auto nd = sample_alpha(seed_diagram(2), rng, opts);
    REQUIRE(nd);
    std::ofstream file(with_alpha);
    file << serialize(make_file(*nd));
  }
  const auto twisted = scratch("twisted.hd");
  const Run t = run({"twist", with_alpha.string(), "--alpha", "alpha", "--power", "-2", "--out", twisted.string()});
  REQUIRE(t.code == kHolds);
  CHECK(contains(t.out, "written to"));
  CHECK(run({"validate", twisted.string()}).code == kHolds);
  CHECK(run({"twist", with_alpha.string(), "--alpha", "beta", "--power", "1"}).code == kInvalid);
  const Run s = run({"surgery", with_alpha.string(), "--alpha", "alpha"});
  CHECK(s.code == kHolds);
  CHECK(parse_diagram_file(s.out).level() == 2);
  const Run ex = run({"example", "torus-s1"});
  CHECK(ex.code == kHolds);
  CHECK(ex.out == *builtin_fixture("torus-s1"));
  const Run exj = run({"example", "s3-genus2", "--json"});
  CHECK(nlohmann::json::parse(exj.out)["genus"] == 2);
  std::filesystem::remove_all(rnd.parent_path());
}

TEST_CASE("waves and audit") {
  const Run w = run({"waves", "tight-genus2", "--side", "Q"});
  CHECK(w.code != kInvalid);
  CHECK(run({"waves", "tight-genus2", "--side", "R"}).code == kInvalid);
  const Run a = run({"audit", "tight-genus2", "--json"});
  CHECK(a.code == kHolds);
  CHECK(nlohmann::json::parse(a.out)["pass"] == true);
}
