#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "heegaard/arrangement.hpp"
#include "heegaard/diagram.hpp"
#include "heegaard/pants.hpp"
#include "heegaard/regions.hpp"

namespace heegaard {

/// Edge of the complex, seen from its forward dart.
struct ComplexEdge {
  int dart = -1;
  int curve = -1;
  Family family = Family::P;
  int left_face = -1;   // Plus side of the carrier
  int right_face = -1;  // Minus side of the carrier
};

/// Cell decomposition of S cut out by the cuffs and the E-curves. Auxiliary
/// curves of the source diagram are not part of it.
struct CurvePairComplex {
  PantsDecomposition pd;
  Arrangement arr;  // cuffs then E-curves
  SurfaceMap map;
  std::vector<int> face_pants;     // base pants containing each face
  std::vector<int> crossing_free;  // curves without crossings (annular pieces)
  bool cellular = true;

  int genus() const { return pd.genus(); }
  int vertex_count() const { return map.vertex_count; }
  int edge_count() const { return map.edge_count; }
  int face_count() const { return static_cast<int>(map.faces.size()); }
  int euler_characteristic() const { return map.euler_characteristic(); }
  int face_sides(int f) const { return static_cast<int>(map.faces[static_cast<std::size_t>(f)].size()); }
  std::vector<ComplexEdge> edges() const;
  /// Two-sided faces, in increasing order of their lowest vertex.
  std::vector<int> bigon_faces() const;
};

/// Traces faces and audits Euler characteristic and orientation against the
/// decomposition. Non-filling data (crossing-free curves, or annular faces) is
/// flagged non-cellular. Throws InvalidInput when χ < 2-2g or faces disagree
/// with the pants sides (corrupt handedness).
CurvePairComplex build_complex(const NormalDiagram& nd);

/// Low-level variant for an arrangement already restricted to cuffs and E-curves.
CurvePairComplex build_complex(const PantsDecomposition& pd, Arrangement arr);

NormalDiagram to_normal_diagram(const CurvePairComplex& c);

IntersectionMatrix intersection_matrix(const CurvePairComplex& c);

struct ReductionStep {
  std::vector<int> removed_crossings;  // ids before the round they were removed in
  int vertices_before = 0;
  int vertices_after = 0;
};

struct ReductionOptions {
  bool randomized = false;
  std::uint64_t seed = 0;
};

struct ReductionResult {
  CurvePairComplex complex;
  std::vector<ReductionStep> steps;  // one per eliminated bigon
  bool stopped_non_cellular = false;
};

/// Repeatedly deletes the two crossings of a two-sided face. Each round removes
/// a maximal vertex-disjoint set of bigons picked by lowest vertex (or in
/// shuffled order). Stops early if the data stops being cellular.
ReductionResult reduce_bigons_logged(const CurvePairComplex& c, const ReductionOptions& opts = {});

CurvePairComplex reduce_bigons(const CurvePairComplex& c);

/// The pants decomposition cut out by the E-curves: cuff k is the k-th E-curve.
struct DualPantsStructure {
  PantsDecomposition pants;
  std::vector<int> region_of_face;  // dual pants containing each face
};

/// Region tracing of the complement of the E-curves. Slots of a dual pants are
/// labelled a, b, c in order of (curve, Plus before Minus). Throws InvalidInput
/// if a complementary piece is not a pair of pants.
DualPantsStructure derive_dual_pants(const CurvePairComplex& c);

/// Same tracing applied to the cuffs; used to audit the input decomposition.
DualPantsStructure derive_base_pants(const CurvePairComplex& c);

}  // namespace heegaard
