#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "heegaard/pants.hpp"

namespace heegaard {

/// P = base cuffs (boundaries of the H1 cut disks), Q = the second cut system,
/// Aux = auxiliary curves such as twist targets.
enum class Family : std::uint8_t { P = 0, Q = 1, Aux = 2 };

inline char family_char(Family f) { return f == Family::P ? 'P' : (f == Family::Q ? 'Q' : 'X'); }

/// A transverse crossing of two distinct curves. sign = +1 when `second` crosses
/// `first` from the right of `first` to its left.
struct Crossing {
  int first = -1;
  int second = -1;
  int sign = 1;

  bool operator==(const Crossing&) const = default;
};

struct CurveTrack {
  std::string name;
  Family family = Family::P;
  std::vector<int> crossings;  // cyclic, in the curve's direction

  bool operator==(const CurveTrack&) const = default;
};

/// Signed Gauss code of a family of oriented simple closed curves in general
/// position on an oriented surface. The rotation system (and hence the cell
/// structure of the union of the curves) is determined by the signs.
struct Arrangement {
  std::vector<CurveTrack> curves;
  std::vector<Crossing> crossings;

  int add_curve(std::string name, Family family);
  int add_crossing(int first, int second, int sign);

  int other(int crossing, int curve) const {
    const Crossing& x = crossings[static_cast<std::size_t>(crossing)];
    return x.first == curve ? x.second : x.first;
  }

  bool operator==(const Arrangement&) const = default;
};

/// Side of the other curve at `crossing` that `curve`'s forward direction enters.
Side entering_side(const Arrangement& arr, int crossing, int curve);

/// Checks that every crossing joins two distinct curves and occurs exactly once
/// in each of their tracks. Returns problems found.
std::vector<std::string> check_arrangement(const Arrangement& arr);

/// Keeps only curves whose family is selected; crossings touching dropped curves
/// are removed and the remaining crossings renumbered (relative order kept).
Arrangement restrict_families(const Arrangement& arr, bool keep_p, bool keep_q, bool keep_aux);

/// Drops the given crossings from all tracks and renumbers the rest.
Arrangement erase_crossings(const Arrangement& arr, const std::vector<int>& doomed);

/// Removes a curve and all its crossings.
Arrangement remove_curve(const Arrangement& arr, int curve);

/// Half-edge structure of the 4-valent map traced by an arrangement. Dart
/// 4x+r at crossing x: r=0 first curve outgoing, 1 second outgoing, 2 first
/// incoming, 3 second incoming. Faces are dart cycles with the face on the left.
struct SurfaceMap {
  std::vector<int> twin;
  std::vector<int> rot_next;  // counter-clockwise successor around the vertex
  std::vector<int> rot_prev;
  std::vector<int> curve;     // curve carrying the dart's edge
  std::vector<int> face_of;
  std::vector<std::vector<int>> faces;
  int vertex_count = 0;
  int edge_count = 0;

  static int crossing_of(int dart) { return dart / 4; }
  static bool forward(int dart) { return dart % 4 < 2; }
  int next_in_face(int dart) const { return rot_prev[static_cast<std::size_t>(twin[static_cast<std::size_t>(dart)])]; }
  int euler_characteristic() const {
    return vertex_count - edge_count + static_cast<int>(faces.size());
  }
  /// Side of the dart's curve on which the dart's face lies.
  static Side face_side(int dart) { return forward(dart) ? Side::Plus : Side::Minus; }
};

/// Curves without crossings are ignored (they do not belong to the map).
SurfaceMap trace_map(const Arrangement& arr);

/// Seam scaffold of a pants decomposition: the cuffs (curves 0..n-1, family P)
/// plus seam curves (family Aux). Each pants is cut by three seams into two
/// hexagons; every cuff is crossed exactly twice, at points 0 and 1 (crossing
/// ids 2c and 2c+1).
Arrangement seam_scaffold(const PantsDecomposition& pd);

/// For every face, the pants containing it as determined by its P-darts, or -1
/// when the face has no P-dart. Throws InvalidInput if two P-darts of one face
/// disagree (curves inconsistent with the gluing).
std::vector<int> face_pants(const SurfaceMap& map, const Arrangement& arr,
                            const PantsDecomposition& pd);

}  // namespace heegaard
