// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "heegaard/cli.hpp"
#include "heegaard/complex.hpp"
#include "heegaard/conditions.hpp"
#include "heegaard/error.hpp"
#include "heegaard/format.hpp"
#include "heegaard/oracle.hpp"
#include "heegaard/twist.hpp"

using namespace heegaard;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

int run_cli(std::vector<std::string> args, std::string* out = nullptr) {
  args.insert(args.begin(), "heegaard");
  std::ostringstream o;
  std::ostringstream e;
  const int code = run_command(args, o, e);
  if (out) *out = o.str();
  return code;
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

// Words 1'..6' as printed; columns are their letter counts.
const std::vector<std::string> kPrintedWords{"1436123462", "1546351436", "1452341532",
                                             "1635261532", "5364523462", "1452615462"};

Verdict fixture_reproduction() {
  std::string out;
  if (run_cli({"matrix", "torus-s1", "--json"}, &out) != kHolds) return {false, "matrix command failed"};
  const auto j = nlohmann::json::parse(out);
  for (std::size_t col = 0; col < kPrintedWords.size(); ++col) {
    std::vector<long long> expected(6, 0);
    for (char ch : kPrintedWords[col]) ++expected[static_cast<std::size_t>(ch - '1')];
    for (std::size_t row = 0; row < 6; ++row) {
      if (j["rows"][row][col].get<long long>() != expected[row]) {
        return {false, "column " + std::to_string(col + 1) + " differs"};
      }
    }
  }
  const std::vector<std::vector<long long>> listed{{2, 2, 2, 2, 0, 2}, {2, 0, 2, 2, 2, 2}, {2, 2, 2, 2, 2, 0},
                                                   {2, 2, 2, 0, 2, 2}, {0, 2, 2, 2, 2, 2}, {2, 2, 0, 2, 2, 2}};
  for (std::size_t col = 0; col < 6; ++col) {
    for (std::size_t row = 0; row < 6; ++row) {
      if (j["rows"][row][col].get<long long>() != listed[col][row]) return {false, "listed column mismatch"};
    }
  }
  const int code = run_cli({"parity", "torus-s1", "--irreducible"}, &out);
  if (code != kHolds || !contains(out, "certificate: irreducible")) return {false, "parity did not certify"};
  return {true, "6 columns match, parity exit 0 with irreducible certificate"};
}

Verdict negative_control() {
  const DiagramFile f = parse_diagram_file(*builtin_fixture("s3-genus2"));
  const IntersectionMatrix m = intersection_matrix(f.sequence);
  for (int i = 0; i < m.rows; ++i) {
    for (int k = 0; k < m.cols; ++k) {
      if (m.at(i, k) != (i == k ? 1 : 0)) return {false, "matrix is not the identity"};
    }
  }
  std::string out;
  const int code = run_cli({"parity", "s3-genus2", "--irreducible"}, &out);
  if (code != kFails) return {false, "exit code " + std::to_string(code)};
  if (contains(out, "certificate:")) return {false, "certificate emitted"};
  return {true, "identity matrix, exit 1, no certificate"};
}

Verdict structural_suite() {
  int diagrams = 0;
  int steps = 0;
  for (int g = 2; g <= 3; ++g) {
    for (int budget = 0; budget <= 6; ++budget) {
      for (std::uint64_t seed = 0; seed < 72; ++seed) {
        const std::uint64_t s = 1000 * static_cast<std::uint64_t>(g) + 100 * static_cast<std::uint64_t>(budget) + seed;
        const CurvePairComplex c = build_complex(random_diagram(g, budget, s));
        ++diagrams;
        const std::string where = " (g=" + std::to_string(g) + " budget=" + std::to_string(budget) +
                                  " seed=" + std::to_string(s) + ")";
        const EulerAuditReport audit = euler_audit(c);
        if (!audit.pass() || audit.euler != 2 - 2 * g) return {false, "audit failed" + where};
        if (!audit.degree_four || !audit.alternating) return {false, "degree/alternation" + where};
        const ReductionResult r = reduce_bigons_logged(c);
        int before = c.vertex_count();
        for (const ReductionStep& step : r.steps) {
          if (step.vertices_before != before || step.vertices_after >= before) return {false, "step" + where};
          before = step.vertices_after;
        }
        steps += static_cast<int>(r.steps.size());
        if (r.complex.vertex_count() != before) return {false, "vertex count" + where};
        const IntersectionMatrix m0 = intersection_matrix(c);
        const IntersectionMatrix m1 = intersection_matrix(r.complex);
        for (std::size_t k = 0; k < m0.entries.size(); ++k) {
          if ((m0.entries[k] - m1.entries[k]) % 2 != 0) return {false, "parity changed" + where};
        }
        if (!r.stopped_non_cellular) {
          if (!reduce_bigons_logged(r.complex).steps.empty()) return {false, "not idempotent" + where};
          if (!euler_audit(r.complex).pass()) return {false, "reduced audit" + where};
        }
        for (std::uint64_t order = 1; order <= 2; ++order) {
          const ReductionResult other = reduce_bigons_logged(c, {true, s * 7 + order});
          if (intersection_matrix(other.complex).entries != m1.entries) return {false, "order dependence" + where};
        }
      }
    }
  }
  return {true, std::to_string(diagrams) + " diagrams, " + std::to_string(steps) + " bigon eliminations"};
}

Verdict even_regime() {
  int cases = 0;
  int strict = 0;
  int strict_cases = 0;
  int skipped = 0;
  AlphaOptions opts;
  opts.even_e_counts = true;
  opts.cross_every_e = true;
  GeneratorOptions gen;
  gen.even_parity = true;
  for (std::uint64_t seed = 0; cases < 200 && seed < 4000; ++seed) {
    const int g = 2 + static_cast<int>(seed % 2);
    const CurvePairComplex base = reduce_bigons(build_complex(random_diagram(g, static_cast<int>(seed % 4), seed, gen)));
    if (!base.cellular) {
      ++skipped;
      continue;
    }
    const IntersectionMatrix m = intersection_matrix(base);
    if (!parity_check(m)) return {false, "generator lost even parity at seed " + std::to_string(seed)};
    Rng rng(seed);
    const auto with = sample_alpha(to_normal_diagram(base), rng, opts);
    if (!with) {
      ++skipped;
      continue;
    }
    const AlphaCounts counts = alpha_counts(*with, with->find_curve("alpha"));
    const TwistPrediction p = predicted_parity_after_twist(m, counts.d_alpha, counts.e_alpha);
    const CurvePairComplex after = reduce_bigons(build_complex(dehn_twist(*with, {"alpha", 1})));
    if (!after.cellular) {
      ++skipped;
      continue;
    }
    const IntersectionMatrix r = intersection_matrix(after);
    int below = 0;
    for (std::size_t k = 0; k < r.entries.size(); ++k) {
      if (r.entries[k] % 2 != 0) return {false, "odd entry at seed " + std::to_string(seed)};
      if (r.entries[k] % 2 != p.mod2.entries[k]) return {false, "mod 2 mismatch at seed " + std::to_string(seed)};
      if (r.entries[k] < p.predicted.entries[k]) ++below;
    }
    if (below > 0 && strict_cases++ < 5) {
      std::printf("  strict inequality: seed %llu, %d of %zu entries below the predicted count\n",
                  static_cast<unsigned long long>(seed), below, r.entries.size());
    }
    strict += below;
    ++cases;
  }
  if (cases < 200) return {false, "only " + std::to_string(cases) + " cases"};
  return {true, std::to_string(cases) + " cases, " + std::to_string(strict) + " strict entries in " +
                    std::to_string(strict_cases) + " cases, " +
                    std::to_string(skipped) + " skipped"};
}

Verdict twist_sanity() {
  int cases = 0;
  AlphaOptions opts;
  opts.cross_every_e = true;
  for (std::uint64_t seed = 0; cases < 100 && seed < 1000; ++seed) {
    const int g = 2 + static_cast<int>(seed % 2);
    const CurvePairComplex base = reduce_bigons(build_complex(random_diagram(g, static_cast<int>(seed % 3), seed)));
    if (!base.cellular) continue;
    Rng rng(seed + 17);
    const auto with = sample_alpha(to_normal_diagram(base), rng, opts);
    if (!with) continue;
    const std::string at = " at seed " + std::to_string(seed);
    if (!(dehn_twist(*with, {"alpha", 0}) == *with)) return {false, "power 0" + at};
    const IntersectionMatrix m = intersection_matrix(base);
    const AlphaCounts counts = alpha_counts(*with, with->find_curve("alpha"));
    for (int p : {1, -1, 2, -2, 3}) {
      const NormalDiagram t = dehn_twist(*with, {"alpha", p});
      const CurvePairComplex rt = reduce_bigons(build_complex(t));
      if (rt.cellular) {
        const IntersectionMatrix r = intersection_matrix(rt);
        for (int i = 0; i < m.rows; ++i) {
          for (int j = 0; j < m.cols; ++j) {
            const long long shift = std::abs(p) * counts.d_alpha[static_cast<std::size_t>(i)] *
                                    counts.e_alpha[static_cast<std::size_t>(j)];
            if (std::llabs(r.at(i, j) - shift) > m.at(i, j)) return {false, "band" + at};
          }
        }
      }
      const CurvePairComplex back = reduce_bigons(build_complex(dehn_twist(t, {"alpha", -p})));
      if (intersection_matrix(back).entries != m.entries) return {false, "inverse twist" + at};
    }
    ++cases;
  }
  if (cases < 100) return {false, "only " + std::to_string(cases) + " cases"};
  return {true, std::to_string(cases) + " diagrams, powers 0, ±1, ±2, 3"};
}

Verdict rectangle_cross_validation() {
  int cases = 0;
  int tight = 0;
  for (std::uint64_t seed = 0; cases < 100 && seed < 1000; ++seed) {
    const int g = 2 + static_cast<int>(seed % 2);
    const CurvePairComplex c = reduce_bigons(build_complex(random_diagram(g, static_cast<int>(seed % 7), seed)));
    if (!c.cellular || !c.bigon_faces().empty()) continue;
    const DualPantsStructure dual = derive_dual_pants(c);
    const RectangleCensus scan = independent_rectangle_scan(to_normal_diagram(c), dual);
    if (!(scan == rectangle_census(c, dual))) return {false, "census mismatch at seed " + std::to_string(seed)};
    const RectangleConditionResult r = rectangle_condition(c, dual);
    for (const TightnessReport& t : r.reports) {
      if (t.table != table_from_census(scan, t.p_pants, t.q_pants)) {
        return {false, "table mismatch at seed " + std::to_string(seed)};
      }
    }
    if (r.holds) ++tight;
    ++cases;
  }
  if (cases < 100) return {false, "only " + std::to_string(cases) + " cases"};
  const auto built = construct_tight_diagram(2, 0, 5000);
  if (!built) return {false, "no tight diagram constructed"};
  const CurvePairComplex c = build_complex(built->diagram);
  const DualPantsStructure dual = derive_dual_pants(c);
  if (!rectangle_condition(c, dual).holds) return {false, "constructed diagram fails face check"};
  const RectangleCensus scan = independent_rectangle_scan(built->diagram, dual);
  for (int p = 0; p < c.pd.pants_count(); ++p) {
    for (int q = 0; q < dual.pants.pants_count(); ++q) {
      for (const auto& row : table_from_census(scan, p, q)) {
        for (bool cell : row) {
          if (!cell) return {false, "constructed diagram fails scan"};
        }
      }
    }
  }
  return {true, std::to_string(cases) + " diagrams agree (" + std::to_string(tight) +
                    " tight); constructed diagram tight by both (rng seed " + std::to_string(built->rng_seed) +
                    ", power " + std::to_string(built->power) + ")"};
}

Verdict cut_and_connect_congruence() {
  int cases = 0;
  int loops = 0;
  for (std::uint64_t seed = 0; cases < 100 && seed < 5000; ++seed) {
    const int g = 2 + static_cast<int>(seed % 2);
    const CurvePairComplex c = reduce_bigons(build_complex(random_diagram(g, static_cast<int>(seed % 4), seed)));
    if (!c.cellular) continue;
    Rng rng(seed);
    AlphaOptions opts;
    opts.max_length = 4 + static_cast<int>(seed % 12);
    opts.attempts = 50;
    const auto with = sample_alpha(to_normal_diagram(c), rng, opts);
    if (!with) continue;
    const std::vector<int> counts = crossing_counts(with->arr, with->find_curve("alpha"));
    bool even = true;
    for (int k = 0; k < with->cuff_count(); ++k) even = even && counts[static_cast<std::size_t>(k)] % 2 == 0;
    if (!even) continue;
    const LoopFamily lf = cut_and_connect(*with, "alpha");
    const auto cols = lf.candidate_e_counts.size();
    std::vector<long long> total(cols, 0);
    for (const Loop& loop : lf.loops) {
      if (loop.kind == LoopKind::CuffParallel && loop.cuff < 0) return {false, "unclassified loop"};
      if (loop.kind == LoopKind::Trivial && loop.cuff >= 0) return {false, "unclassified loop"};
      for (std::size_t j = 0; j < cols; ++j) total[j] += loop.e_counts[j];
    }
    for (std::size_t j = 0; j < cols; ++j) {
      if ((total[j] - lf.candidate_e_counts[j]) % 2 != 0) return {false, "congruence at seed " + std::to_string(seed)};
    }
    loops += static_cast<int>(lf.loops.size());
    ++cases;
  }
  if (cases < 100) return {false, "only " + std::to_string(cases) + " cases"};
  return {true, std::to_string(cases) + " candidates, " + std::to_string(loops) + " loops classified"};
}

Verdict serialization() {
  for (const auto& name : builtin_fixture_names()) {
    const std::string text = *builtin_fixture(name);
    if (serialize(parse_diagram_file(text)) != text) return {false, "fixture " + name};
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    NormalDiagram nd = random_diagram(2 + static_cast<int>(seed % 2), static_cast<int>(seed % 5), seed);
    if (seed % 4 == 0) {
      Rng rng(seed);
      if (auto with = sample_alpha(nd, rng)) nd = *with;
    }
    const std::string text = serialize(make_file(nd));
    if (serialize(parse_diagram_file(text)) != text) return {false, "generated file " + std::to_string(seed)};
  }
  return {true, std::to_string(builtin_fixture_names().size()) + " fixtures and 100 generated files"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"fixture reproduction", fixture_reproduction},
      {"negative control", negative_control},
      {"structural property suite", structural_suite},
      {"even-parity twist regime", even_regime},
      {"twist engine sanity", twist_sanity},
      {"rectangle cross-validation", rectangle_cross_validation},
      {"cut-and-connect congruence", cut_and_connect_congruence},
      {"serialization round trip", serialization},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[k].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %zu %s: %s [%.2fs]\n", v.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                v.detail.c_str(), secs);
    std::fflush(stdout);
    if (!v.pass) ++failures;
  }
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
