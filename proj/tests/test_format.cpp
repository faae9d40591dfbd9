#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>

#include "heegaard/error.hpp"
#include "heegaard/format.hpp"
#include "heegaard/oracle.hpp"

using namespace heegaard;

namespace {

std::string text_of(const char* name) { return *builtin_fixture(name); }

std::string replace_once(std::string s, const std::string& from, const std::string& to) {
  const auto pos = s.find(from);
  REQUIRE(pos != std::string::npos);
  return s.replace(pos, from.size(), to);
}

}  // namespace

TEST_CASE("builtin fixtures parse") {
  CHECK(builtin_fixture_names() == std::vector<std::string>{"torus-s1", "s3-genus2", "tight-genus2"});
  const DiagramFile torus = parse_diagram_file(text_of("torus-s1"));
  CHECK(torus.level() == 1);
  CHECK(torus.pd().genus() == 3);
  CHECK(torus.name == "torus-s1");
  CHECK(torus.manifold == "T2 x S1");
  CHECK(torus.irreducible == true);
  CHECK(torus.sequence.names.front() == "1'");

  const DiagramFile s3 = parse_diagram_file(text_of("s3-genus2"));
  CHECK(s3.manifold == "S3");
  CHECK_FALSE(s3.irreducible);

  const DiagramFile tight = parse_diagram_file(text_of("tight-genus2"));
  REQUIRE(tight.level() == 2);
  CHECK(project_to_sequence(*tight.normal) == tight.sequence);
  CHECK_FALSE(builtin_fixture("nope"));
}

TEST_CASE("fixtures round trip byte for byte") {
  for (const auto& name : builtin_fixture_names()) {
    CAPTURE(name);
    CHECK(serialize(parse_diagram_file(text_of(name.c_str()))) == text_of(name.c_str()));
  }
}

TEST_CASE("generated files round trip") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    NormalDiagram nd = random_diagram(2 + static_cast<int>(seed % 2), static_cast<int>(seed % 4), seed);
    if (seed % 3 == 0) {
      Rng rng(seed);
      if (auto with = sample_alpha(nd, rng)) nd = *with;
    }
    const DiagramFile f = make_file(nd);
    const std::string text = serialize(f);
    const DiagramFile back = parse_diagram_file(text);
    REQUIRE(back.normal);
    CHECK(back.normal->pd == nd.pd);
    CHECK(back.normal->arr.curves.size() == nd.arr.curves.size());
    CHECK(back.normal->arr.crossings.size() == nd.arr.crossings.size());
    CHECK(intersection_matrix(*back.normal).entries == intersection_matrix(nd).entries);
    CHECK(serialize(back) == text);
  }
}

TEST_CASE("comments and blank lines are ignored") {
  const std::string text = "# leading comment\n" + replace_once(text_of("s3-genus2"), "[curves]", "[curves]  # the E-curves\n\n");
  CHECK(parse_diagram_file(text).sequence == parse_diagram_file(text_of("s3-genus2")).sequence);
}

TEST_CASE("bad token reports its line and column") {
  const std::string text = replace_once(text_of("s3-genus2"), "A = 1+ 2+ 3+", "A = 1+ 2* 3+");
  try {
    parse_diagram_file(text);
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 7);
    CHECK(e.column() == 8);
  }
}

TEST_CASE("truncated file") {
  const std::string full = text_of("tight-genus2");
  const std::string cut = full.substr(0, full.find("\n2 = ") + 1);
  const int lines = static_cast<int>(std::count(cut.begin(), cut.end(), '\n'));
  try {
    parse_diagram_file(cut);
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == lines + 1);
    CHECK(std::string(e.what()).find("truncated") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_diagram_file("heegaard-diagram 1\ngenus 2\n"), ParseError);
  CHECK_THROWS_AS(parse_diagram_file(""), ParseError);
}

TEST_CASE("header errors") {
  CHECK_THROWS_AS(parse_diagram_file(replace_once(text_of("s3-genus2"), "heegaard-diagram 1", "heegaard-diagram 9")),
                  ParseError);
  CHECK_THROWS_AS(parse_diagram_file(replace_once(text_of("s3-genus2"), "genus 2", "genus two")), ParseError);
}

TEST_CASE("data errors are invalid input") {
  CHECK_THROWS_AS(parse_diagram_file(replace_once(text_of("s3-genus2"), "B = 1- 2- 3-", "B = 1- 2- 3+")),
                  InvalidInput);
  CHECK_THROWS_AS(parse_diagram_file(replace_once(text_of("s3-genus2"), "E3 = 3", "E3 = 4")), InvalidInput);
  // level-2 projection must match the words
  CHECK_THROWS_AS(parse_diagram_file(replace_once(text_of("tight-genus2"), "E2 = 2 1 2 1", "E2 = 2 1 2 2")),
                  InvalidInput);
}

TEST_CASE("curve names") {
  CHECK(valid_curve_name("E1"));
  CHECK(valid_curve_name("1'"));
  CHECK(valid_curve_name("alpha2"));
  CHECK_FALSE(valid_curve_name("12"));
  CHECK_FALSE(valid_curve_name(""));
  CHECK_FALSE(valid_curve_name("a.b"));
  CHECK_FALSE(valid_curve_name("a b"));
}

TEST_CASE("json export mirrors the text") {
  const DiagramFile f = parse_diagram_file(text_of("torus-s1"));
  const auto j = nlohmann::json::parse(to_json(f));
  CHECK(j["format"] == "heegaard-diagram");
  CHECK(j["genus"] == 3);
  CHECK(j["level"] == 1);
  CHECK(j["irreducible"] == true);
  CHECK(j["curves"].size() == 6);
  CHECK(j["pants"].size() == 4);
  CHECK_FALSE(j.contains("strands"));
  const auto t = nlohmann::json::parse(to_json(parse_diagram_file(text_of("tight-genus2"))));
  CHECK(t["level"] == 2);
  CHECK(t["orders"].size() == 3);
}

TEST_CASE("fixture directory overrides builtins") {
  const auto dir = std::filesystem::temp_directory_path() / "heegaard-format-test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream out(dir / "torus-s1.hd");
    out << text_of("s3-genus2");
  }
  CHECK(load_diagram_text("torus-s1") == text_of("torus-s1"));
  ::setenv("HEEGAARD_FIXTURE_DIR", dir.c_str(), 1);
  CHECK(load_diagram_text("torus-s1") == text_of("s3-genus2"));
  CHECK(load_diagram_text("tight-genus2") == text_of("tight-genus2"));
  CHECK(load_diagram_text((dir / "torus-s1.hd").string()) == text_of("s3-genus2"));
  ::unsetenv("HEEGAARD_FIXTURE_DIR");
  CHECK_THROWS_AS(load_diagram_text("missing-fixture"), InvalidInput);
  std::filesystem::remove_all(dir);
}
