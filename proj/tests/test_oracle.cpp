#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "heegaard/complex.hpp"
#include "heegaard/error.hpp"
#include "heegaard/oracle.hpp"

using namespace heegaard;

TEST_CASE("Euler audit passes on generated data") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const CurvePairComplex c = build_complex(random_diagram(2 + static_cast<int>(seed % 2), 3, seed));
    const EulerAuditReport r = euler_audit(c);
    CHECK(r.pass());
    CHECK(r.vertices == c.vertex_count());
    CHECK(r.edges == c.edge_count());
    CHECK(r.faces == c.face_count());
    CHECK(r.degree_four);
    CHECK(r.alternating);
  }
}

TEST_CASE("Euler audit catches a mutated face structure") {
  CurvePairComplex c = build_complex(seed_diagram(2));
  c.arr.crossings[0].sign = -c.arr.crossings[0].sign;
  CHECK_FALSE(euler_audit(c).pass());
}

TEST_CASE("Euler audit on crossing-free curves") {
  const CurvePairComplex c =
      build_complex(build_normal_diagram(standard_decomposition(2), {{}, {}, {}}, {{}, {}, {}}));
  const EulerAuditReport r = euler_audit(c);
  CHECK(r.non_cellular);
  CHECK(r.skipped_curves.size() == 6);
}

TEST_CASE("census of a non-cellular diagram is empty") {
  const NormalDiagram nd = build_normal_diagram(standard_decomposition(2), {{}, {}, {}}, {{}, {}, {}});
  CHECK(independent_rectangle_scan(nd, DualPantsStructure{}).empty());
}

TEST_CASE("dual cycles visit distinct faces") {
  const CurvePairComplex c = build_complex(seed_diagram(3));
  Rng rng(11);
  for (int k = 0; k < 20; ++k) {
    const auto cycle = random_dual_cycle(c.map, rng, 12);
    if (!cycle) continue;
    std::set<int> faces;
    for (int d : *cycle) faces.insert(c.map.face_of[static_cast<std::size_t>(d)]);
    CHECK(faces.size() == cycle->size());
    CHECK(cycle->size() <= 12);
  }
}

TEST_CASE("sampled alpha is in minimal position and meets every cuff when asked") {
  AlphaOptions opts;
  opts.cross_every_cuff = true;
  opts.max_length = 16;
  Rng rng(5);
  const auto nd = sample_alpha(seed_diagram(2), rng, opts);
  REQUIRE(nd);
  const int alpha = nd->find_curve("alpha");
  REQUIRE(alpha >= 0);
  CHECK_FALSE(has_bigon_with_family(nd->arr, alpha, Family::P));
  CHECK_FALSE(has_bigon_with_family(nd->arr, alpha, Family::Q));
  const std::vector<int> counts = crossing_counts(nd->arr, alpha);
  for (int c = 0; c < nd->cuff_count(); ++c) CHECK(counts[static_cast<std::size_t>(c)] > 0);
}

TEST_CASE("random diagrams are deterministic and valid") {
  for (int budget = 0; budget <= 5; ++budget) {
    const NormalDiagram a = random_diagram(2, budget, 77);
    const NormalDiagram b = random_diagram(2, budget, 77);
    CHECK(a == b);
    CHECK(normal_diagram_problems(a.pd, a.arr).empty());
    CHECK(build_complex(a).cellular);
  }
  CHECK(seed_diagram(2) == random_diagram(2, 0, 1));
}

TEST_CASE("cut and connect: candidate disjoint from the cuffs is one loop") {
  int found = 0;
  for (std::uint64_t seed = 0; seed < 400 && found < 3; ++seed) {
    Rng rng(seed);
    AlphaOptions opts;
    opts.max_length = 4;
    const auto nd = sample_alpha(seed_diagram(2 + static_cast<int>(seed % 2)), rng, opts);
    if (!nd) continue;
    const std::vector<int> counts = crossing_counts(nd->arr, nd->find_curve("alpha"));
    bool misses = true;
    for (int c = 0; c < nd->cuff_count(); ++c) misses = misses && counts[static_cast<std::size_t>(c)] == 0;
    if (!misses) continue;
    ++found;
    const LoopFamily lf = cut_and_connect(*nd, "alpha");
    REQUIRE(lf.loops.size() == 1);
    CHECK(lf.loops[0].connectors == 0);
    CHECK(lf.loops[0].e_counts == lf.candidate_e_counts);
  }
  CHECK(found > 0);
}

TEST_CASE("cut and connect rejects odd cuff counts and cuffs") {
  const NormalDiagram nd = seed_diagram(2);
  CHECK_THROWS_AS(cut_and_connect(nd, "1"), InvalidInput);
  CHECK_THROWS_AS(cut_and_connect(nd, "nope"), InvalidInput);
}

TEST_CASE("cut and connect: parity congruence with the matrix") {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    AlphaOptions opts;
    opts.max_length = 10;
    Rng rng(seed);
    const NormalDiagram base = random_diagram(2 + static_cast<int>(seed % 2), 2, seed);
    const CurvePairComplex rc = reduce_bigons(build_complex(base));
    if (!rc.cellular) continue;
    const auto nd = sample_alpha(to_normal_diagram(rc), rng, opts);
    if (!nd) continue;
    const IntersectionMatrix m = intersection_matrix(rc);
    LoopFamily lf;
    try {
      lf = cut_and_connect(*nd, "alpha");
    } catch (const InvalidInput&) {
      continue;  // odd count on some cuff
    }
    ++checked;
    std::vector<long long> total(static_cast<std::size_t>(m.cols), 0);
    for (const Loop& loop : lf.loops) {
      for (int j = 0; j < m.cols; ++j) total[static_cast<std::size_t>(j)] += loop.e_counts[static_cast<std::size_t>(j)];
    }
    for (int j = 0; j < m.cols; ++j) {
      const auto jj = static_cast<std::size_t>(j);
      CHECK(total[jj] == lf.candidate_e_counts[jj] + 2 * lf.span_e_points[jj]);
      long long predicted = 0;
      for (const auto& [key, mult] : lf.multiplicities()) {
        if (key.first == LoopKind::CuffParallel) predicted += mult * m.at(key.second, j);
      }
      CHECK((predicted - lf.candidate_e_counts[jj]) % 2 == 0);
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("tight construction is reproducible") {
  const auto t = construct_tight_diagram(2, 2990, 1);
  REQUIRE(t);
  CHECK(t->rng_seed == 2990);
  CHECK(t->power == 2);
  const CurvePairComplex c = build_complex(t->diagram);
  CHECK(rectangle_condition(c, derive_dual_pants(c)).holds);
}
