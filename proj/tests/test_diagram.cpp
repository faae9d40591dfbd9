#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heegaard/complex.hpp"
#include "heegaard/error.hpp"
#include "heegaard/oracle.hpp"

using namespace heegaard;

namespace {

std::vector<int> word(const std::string& digits) {
  std::vector<int> w;
  for (char ch : digits) w.push_back(ch - '1');
  return w;
}

const std::vector<std::string> kTorusWords{"1436123462", "1546351436", "1452341532",
                                           "1635261532", "5364523462", "1452615462"};

SequenceDiagram torus_s1() {
  std::vector<std::vector<int>> words;
  for (const auto& w : kTorusWords) words.push_back(word(w));
  return build_sequence_diagram(standard_decomposition(3), words,
                                {"1'", "2'", "3'", "4'", "5'", "6'"});
}

// three parallel copies of a curve crossing cuff 1 (into A) and cuff 2 (into B)
NormalDiagram parallel_copies(const std::vector<OrderToken>& cuff2_order) {
  const std::vector<StrandToken> strand{{0, 1}, {1, -1}};
  return build_normal_diagram(standard_decomposition(2), {strand, strand, strand},
                              {{{0, 0}, {1, 0}, {2, 0}}, cuff2_order, {}});
}

}  // namespace

TEST_CASE("torus words build a level-1 diagram") {
  const SequenceDiagram d = torus_s1();
  CHECK(d.curve_count() == 6);
  CHECK(d.disjoint_curves().empty());
}

TEST_CASE("matrix columns are letter counts of the words") {
  const IntersectionMatrix m = intersection_matrix(torus_s1());
  CHECK(m.rows == 6);
  CHECK(m.cols == 6);
  CHECK_FALSE(m.reduced);
  CHECK(m.column(0) == std::vector<long long>{2, 2, 2, 2, 0, 2});
  CHECK(m.column(1) == std::vector<long long>{2, 0, 2, 2, 2, 2});
}

TEST_CASE("empty words are disjoint curves with zero columns") {
  const SequenceDiagram d = build_sequence_diagram(standard_decomposition(3), std::vector<std::vector<int>>(6));
  CHECK(d.disjoint_curves().size() == 6);
  const IntersectionMatrix m = intersection_matrix(d);
  for (long long v : m.entries) CHECK(v == 0);
}

TEST_CASE("letters must share a pants") {
  const PantsDecomposition pd = standard_decomposition(3);
  std::vector<std::vector<int>> words(6);
  words[0] = word("13");  // cuffs 1 and 3 bound no common pants
  CHECK_THROWS_AS(build_sequence_diagram(pd, words), InvalidInput);
  words[0] = word("15");
  CHECK_NOTHROW(build_sequence_diagram(pd, words));
  words[0] = {0, 7};
  CHECK_THROWS_AS(build_sequence_diagram(pd, words), InvalidInput);
}

TEST_CASE("nested chords embed, interleaved chords do not") {
  // nested: the order on cuff 2 reverses the order on cuff 1
  const NormalDiagram nd = parallel_copies({{2, 1}, {1, 1}, {0, 1}});
  CHECK(nd.q_curves().size() == 3);
  CHECK(intersection_matrix(nd).column(0) == std::vector<long long>{1, 1, 0});
  CHECK_THROWS_WITH_AS(parallel_copies({{0, 1}, {1, 1}, {2, 1}}), doctest::Contains("crossing chords"),
                       InvalidInput);
}

TEST_CASE("token multisets must agree") {
  const std::vector<StrandToken> strand{{0, 1}, {1, -1}};
  CHECK_THROWS_AS(build_normal_diagram(standard_decomposition(2), {strand},
                                       {{{0, 0}}, {{0, 0}}, {}}),
                  InvalidInput);
  CHECK_THROWS_AS(build_normal_diagram(standard_decomposition(2), {strand}, {{{0, 0}}, {}, {}}),
                  InvalidInput);
}

TEST_CASE("arcs must stay inside one pants") {
  // entering A at cuff 1 then crossing cuff 2 into A again is impossible
  const std::vector<StrandToken> strand{{0, 1}, {1, 1}};
  CHECK_THROWS_AS(build_normal_diagram(standard_decomposition(2), {strand}, {{{0, 0}}, {{0, 1}}, {}}),
                  InvalidInput);
}

TEST_CASE("generated diagrams are valid level-2 data") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const NormalDiagram nd = random_diagram(2 + static_cast<int>(seed % 2), 3, seed);
    CHECK(normal_diagram_problems(nd.pd, nd.arr).empty());
  }
}

TEST_CASE("level-1 projection keeps the matrix") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const NormalDiagram nd = random_diagram(3, 2, seed);
    const SequenceDiagram s = project_to_sequence(nd);
    const SequenceDiagram rebuilt = build_sequence_diagram(s.pd, s.words, s.names);
    CHECK(intersection_matrix(rebuilt).entries == intersection_matrix(nd).entries);
    // strand tokens name the same cuffs as the words
    for (std::size_t j = 0; j < s.words.size(); ++j) {
      const auto tokens = strand_tokens(nd, nd.q_curves()[j]);
      REQUIRE(tokens.size() == s.words[j].size());
      for (std::size_t k = 0; k < tokens.size(); ++k) CHECK(tokens[k].cuff == s.words[j][k]);
    }
  }
}

TEST_CASE("cuff orders list every crossing of the cuff") {
  const NormalDiagram nd = random_diagram(2, 2, 11);
  const IntersectionMatrix m = intersection_matrix(nd);
  for (int c = 0; c < nd.cuff_count(); ++c) {
    long long row = 0;
    for (int j = 0; j < m.cols; ++j) row += m.at(c, j);
    CHECK(static_cast<long long>(cuff_order(nd, c).size()) == row);
  }
}
