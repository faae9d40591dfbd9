#pragma once

#include <vector>

#include "heegaard/arrangement.hpp"

namespace heegaard {

struct BoundaryCycle {
  std::vector<int> darts;  // boundary darts in order, region on their left
  int corners = 0;         // places where the cycle switches from one curve to another
};

/// Complementary component of a subfamily of curves, assembled from map faces.
struct Region {
  std::vector<int> faces;
  int euler = 0;  // faces - interior edges + interior vertices
  std::vector<BoundaryCycle> boundary;

  bool is_disk() const { return euler == 1 && boundary.size() == 1; }
};

struct RegionMap {
  std::vector<int> region_of_face;
  std::vector<Region> regions;
};

/// Regions of the complement of the curves flagged in `boundary_curve`, for a
/// cellular map. Faces are merged across edges of unflagged curves.
RegionMap trace_regions(const SurfaceMap& map, const std::vector<bool>& boundary_curve);

/// Flags curves by family.
std::vector<bool> family_mask(const Arrangement& arr, bool p, bool q, bool aux);

}  // namespace heegaard
