#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "heegaard/error.hpp"
#include "heegaard/pants.hpp"

using namespace heegaard;

namespace {

std::vector<SlotGluing> theta() {
  std::vector<SlotGluing> g;
  for (int c = 0; c < 3; ++c) {
    g.push_back({0, static_cast<SlotLabel>(c), c, Side::Plus});
    g.push_back({1, static_cast<SlotLabel>(c), c, Side::Minus});
  }
  return g;
}

std::vector<SlotGluing> from_table(const std::vector<std::vector<int>>& table) {
  std::vector<SlotGluing> g;
  std::vector<bool> used(20, false);
  for (std::size_t p = 0; p < table.size(); ++p) {
    for (int l = 0; l < 3; ++l) {
      const int c = table[p][static_cast<std::size_t>(l)];
      g.push_back({static_cast<int>(p), static_cast<SlotLabel>(l), c, used[c] ? Side::Minus : Side::Plus});
      used[c] = true;
    }
  }
  return g;
}

bool mentions(const ValidationReport& r, const std::string& needle) {
  return std::any_of(r.problems.begin(), r.problems.end(),
                     [&](const std::string& p) { return p.find(needle) != std::string::npos; });
}

}  // namespace

TEST_CASE("genus 2 theta gluing builds") {
  const auto g = theta();
  const PantsDecomposition pd = build_pants_decomposition(2, g);
  CHECK(pd.cuff_count() == 3);
  CHECK(pd.pants_count() == 2);
  CHECK(traced_euler_characteristic(pd) == -2);
  CHECK(pd.pants_of(0, Side::Plus) == 0);
  CHECK(pd.pants_of(0, Side::Minus) == 1);
}

TEST_CASE("genus 3 with six cuffs and four pants") {
  const auto g = from_table({{0, 1, 4}, {0, 3, 5}, {1, 2, 5}, {2, 3, 4}});
  const PantsDecomposition pd = build_pants_decomposition(3, g, {"A", "B", "C", "D"});
  CHECK(pd.cuff_count() == 6);
  CHECK(pd.pants_count() == 4);
  CHECK(traced_euler_characteristic(pd) == -4);
  CHECK(pd.find_pants("C") == 2);
  CHECK(pd.cuffs_share_pants(0, 4));
  CHECK_FALSE(pd.cuffs_share_pants(0, 2));
}

TEST_CASE("duplicate cuff side is rejected") {
  auto g = theta();
  g[1].cuff = 0;
  g[1].side = Side::Plus;  // cuff 1 glued twice into its Plus side
  CHECK_THROWS_AS(build_pants_decomposition(2, g), InvalidInput);
  const ValidationReport r = validate_decomposition(2, g);
  CHECK(mentions(r, "duplicate (cuff, side): cuff 1 side +"));
}

TEST_CASE("unused cuff side is named") {
  auto g = theta();
  g[3].side = Side::Plus;  // cuff 2 used twice on +, never on -
  const ValidationReport r = validate_decomposition(2, g);
  CHECK_FALSE(r.ok());
  CHECK(mentions(r, "cuff 2 side - unused"));
}

TEST_CASE("two closed surfaces are reported disconnected") {
  std::vector<SlotGluing> g;
  for (int half = 0; half < 2; ++half) {
    for (int c = 0; c < 3; ++c) {
      g.push_back({2 * half, static_cast<SlotLabel>(c), 3 * half + c, Side::Plus});
      g.push_back({2 * half + 1, static_cast<SlotLabel>(c), 3 * half + c, Side::Minus});
    }
  }
  const ValidationReport r = validate_decomposition(3, g);
  CHECK(mentions(r, "disconnected"));
}

TEST_CASE("wrong counts are reported") {
  auto g = theta();
  g.pop_back();
  CHECK(mentions(validate_decomposition(2, g), "wrong counts"));
  CHECK_THROWS_AS(build_pants_decomposition(1, {}), InvalidInput);
}

TEST_CASE("valid decomposition has an empty report") {
  CHECK(validate_decomposition(2, theta()).ok());
  CHECK(validate_decomposition(build_pants_decomposition(2, theta())).ok());
}

TEST_CASE("standard decompositions") {
  for (int g = 2; g <= 7; ++g) {
    CAPTURE(g);
    const PantsDecomposition pd = standard_decomposition(g);
    CHECK(pd.cuff_count() == 3 * g - 3);
    CHECK(pd.pants_count() == 2 * g - 2);
    CHECK(traced_euler_characteristic(pd) == 2 - 2 * g);
    CHECK(validate_decomposition(pd).ok());
    // every cuff sits in exactly two slots, on opposite sides
    for (int c = 0; c < pd.cuff_count(); ++c) {
      int plus = 0;
      int minus = 0;
      for (const CuffSlot& s : pd.slots()) {
        if (s.cuff != c) continue;
        (s.side == Side::Plus ? plus : minus)++;
      }
      CHECK(plus == 1);
      CHECK(minus == 1);
    }
  }
}

TEST_CASE("a pants may carry both sides of one cuff") {
  // genus 2 dumbbell: cuff 1 and 3 are loops on single pants, cuff 2 joins them
  std::vector<SlotGluing> g{{0, SlotLabel::A, 0, Side::Plus}, {0, SlotLabel::B, 0, Side::Minus},
                            {0, SlotLabel::C, 1, Side::Plus}, {1, SlotLabel::A, 2, Side::Plus},
                            {1, SlotLabel::B, 2, Side::Minus}, {1, SlotLabel::C, 1, Side::Minus}};
  const PantsDecomposition pd = build_pants_decomposition(2, g);
  CHECK(traced_euler_characteristic(pd) == -2);
  CHECK(pd.slot_of(0, Side::Minus).label == SlotLabel::B);
}
