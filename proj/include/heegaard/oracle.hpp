#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "heegaard/complex.hpp"
#include "heegaard/conditions.hpp"
#include "heegaard/diagram.hpp"
#include "heegaard/random.hpp"

namespace heegaard {

struct EulerAuditReport {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int euler = 0;
  int expected = 0;
  bool degree_four = true;
  bool alternating = true;
  bool side_consistent = true;
  bool non_cellular = false;
  std::vector<int> skipped_curves;  // crossing-free curves left out of the count
  std::vector<std::string> problems;

  bool pass() const { return problems.empty(); }
};

/// Recounts V, E, F straight from the signed Gauss code with a turn-left walker
/// (no use of the complex's traced map) and checks degree, alternation, the
/// Euler characteristic and that every face sits in a single base pants.
EulerAuditReport euler_audit(const CurvePairComplex& c);

/// Rectangles found by walking cuff orders and strands only: two boundary-
/// consecutive tokens on one slot whose chords land consecutively on a common
/// slot bound a band of parallel arcs. Requires bigon-free data.
RectangleCensus independent_rectangle_scan(const NormalDiagram& nd, const DualPantsStructure& dual);

/// Essential returning arcs counted from token orders: a chord returning to its
/// own slot is counted when both boundary segments it cuts off carry a token
/// whose chord leaves for another slot.
int recount_returning_arcs(const NormalDiagram& nd, ArcFamily side);

enum class LoopKind { Trivial, CuffParallel };

struct Loop {
  int pants = -1;
  LoopKind kind = LoopKind::Trivial;
  int cuff = -1;  // for cuff-parallel loops
  SlotLabel slot = SlotLabel::A;
  int arcs = 0;
  int connectors = 0;
  std::vector<long long> e_counts;  // crossings with each E-curve
};

struct LoopFamily {
  std::vector<Loop> loops;
  std::vector<long long> candidate_e_counts;  // |candidate ∩ Ej|
  std::vector<long long> span_e_points;       // Ej points inside connector spans
  /// (kind, cuff) -> multiplicity; cuff = -1 for trivial loops.
  std::map<std::pair<LoopKind, int>, int> multiplicities() const;
};

/// Resolves every crossing of the candidate with a cuff: the candidate's points
/// on each cuff are paired along the cuff and joined by connector arcs on both
/// sides, leaving loops inside single pants. Throws InvalidInput if the
/// candidate meets some cuff an odd number of times or the data is not cellular.
LoopFamily cut_and_connect(const NormalDiagram& nd, const std::string& candidate);

/// Cycle in the dual graph: darts d_0..d_{k-1}, d_i leaving face f_i for f_{i+1};
/// faces are pairwise distinct so the curve is simple.
std::optional<std::vector<int>> random_dual_cycle(const SurfaceMap& map, Rng& rng, int max_length);

/// Adds the curve running along a dual cycle as an auxiliary curve.
Arrangement add_dual_curve(const Arrangement& arr, const SurfaceMap& map,
                           const std::vector<int>& cycle, const std::string& name);

/// True when `curve` and some curve of `family` bound a bigon (not in minimal
/// position). The arrangement must trace a cellular map.
bool has_bigon_with_family(const Arrangement& arr, int curve, Family family);

struct AlphaOptions {
  bool even_e_counts = false;   // |α ∩ Ej| even for every j
  bool cross_every_cuff = false;
  bool cross_every_e = false;
  bool minimal = true;          // no bigons with either family
  int max_length = 12;
  int attempts = 2000;
};

/// Adds an auxiliary curve "alpha" sampled as a dual cycle of a cellular
/// diagram. Returns nullopt when no admissible cycle was found.
std::optional<NormalDiagram> sample_alpha(const NormalDiagram& nd, Rng& rng,
                                          const AlphaOptions& opts = {});

struct GeneratorOptions {
  bool even_parity = false;
  int max_alpha_length = 12;
};

/// Budget-0 diagram: cuffs pushed off to their Plus side, then twisted along the
/// seams of the hexagon scaffold (twice in even-parity mode), reduced.
NormalDiagram seed_diagram(int genus, bool even_parity = false);

/// Seed diagram followed by `twist_budget` twists along random dual cycles,
/// reduced between twists; the last twist is left unreduced. Pure function of
/// its arguments.
NormalDiagram random_diagram(int genus, int twist_budget, std::uint64_t seed,
                             const GeneratorOptions& opts = {});

struct TightConstruction {
  NormalDiagram with_alpha;  // seed diagram plus the twist curve "alpha"
  int power = 0;
  std::uint64_t rng_seed = 0;
  NormalDiagram diagram;  // reduced result
};

/// Searches twist curves meeting every cuff on the even-mode seed diagram:
/// for rng seeds first..first+count-1 samples α (length cap 4 + seed mod 20),
/// twists with power 2 and -2, reduces, and returns the first result that
/// satisfies the rectangle condition.
std::optional<TightConstruction> construct_tight_diagram(int genus, std::uint64_t first,
                                                         std::uint64_t count);

}  // namespace heegaard
