#include "heegaard/regions.hpp"

#include <numeric>

namespace heegaard {

std::vector<bool> family_mask(const Arrangement& arr, bool p, bool q, bool aux) {
  std::vector<bool> mask(arr.curves.size());
  for (std::size_t c = 0; c < arr.curves.size(); ++c) {
    const Family f = arr.curves[c].family;
    mask[c] = (f == Family::P && p) || (f == Family::Q && q) || (f == Family::Aux && aux);
  }
  return mask;
}

RegionMap trace_regions(const SurfaceMap& map, const std::vector<bool>& boundary_curve) {
  const std::size_t n_darts = map.twin.size();
  auto is_boundary = [&](int d) {
    return boundary_curve[static_cast<std::size_t>(map.curve[static_cast<std::size_t>(d)])];
  };

  std::vector<int> parent(map.faces.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int f) {
    while (parent[static_cast<std::size_t>(f)] != f) {
      parent[static_cast<std::size_t>(f)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(f)])];
      f = parent[static_cast<std::size_t>(f)];
    }
    return f;
  };
  for (std::size_t d = 0; d < n_darts; ++d) {
    if (!SurfaceMap::forward(static_cast<int>(d)) || is_boundary(static_cast<int>(d))) continue;
    const int a = root(map.face_of[d]);
    const int b = root(map.face_of[static_cast<std::size_t>(map.twin[d])]);
    parent[static_cast<std::size_t>(a)] = b;
  }

  RegionMap out;
  out.region_of_face.assign(map.faces.size(), -1);
  std::vector<int> id_of_root(map.faces.size(), -1);
  for (std::size_t f = 0; f < map.faces.size(); ++f) {
    const int r = root(static_cast<int>(f));
    if (id_of_root[static_cast<std::size_t>(r)] < 0) {
      id_of_root[static_cast<std::size_t>(r)] = static_cast<int>(out.regions.size());
      out.regions.emplace_back();
    }
    const int id = id_of_root[static_cast<std::size_t>(r)];
    out.region_of_face[f] = id;
    out.regions[static_cast<std::size_t>(id)].faces.push_back(static_cast<int>(f));
    out.regions[static_cast<std::size_t>(id)].euler += 1;
  }
  for (std::size_t d = 0; d < n_darts; ++d) {
    if (SurfaceMap::forward(static_cast<int>(d)) && !is_boundary(static_cast<int>(d))) {
      out.regions[static_cast<std::size_t>(out.region_of_face[map.face_of[d]])].euler -= 1;
    }
  }
  for (int v = 0; v < map.vertex_count; ++v) {
    bool interior = true;
    for (int r = 0; r < 4; ++r) interior = interior && !is_boundary(4 * v + r);
    if (interior) out.regions[static_cast<std::size_t>(out.region_of_face[map.face_of[static_cast<std::size_t>(4 * v)]])].euler += 1;
  }

  std::vector<bool> used(n_darts, false);
  for (std::size_t d = 0; d < n_darts; ++d) {
    if (used[d] || !is_boundary(static_cast<int>(d))) continue;
    BoundaryCycle cycle;
    int cur = static_cast<int>(d);
    do {
      used[static_cast<std::size_t>(cur)] = true;
      cycle.darts.push_back(cur);
      // rotate clockwise at the far end until the next boundary dart
      int g = map.rot_prev[static_cast<std::size_t>(map.twin[static_cast<std::size_t>(cur)])];
      while (!is_boundary(g)) g = map.rot_prev[static_cast<std::size_t>(g)];
      cur = g;
    } while (cur != static_cast<int>(d));
    const std::size_t m = cycle.darts.size();
    for (std::size_t k = 0; k < m; ++k) {
      if (map.curve[static_cast<std::size_t>(cycle.darts[k])] !=
          map.curve[static_cast<std::size_t>(cycle.darts[(k + 1) % m])]) {
        ++cycle.corners;
      }
    }
    const int region = out.region_of_face[map.face_of[d]];
    out.regions[static_cast<std::size_t>(region)].boundary.push_back(std::move(cycle));
  }
  return out;
}

}  // namespace heegaard
