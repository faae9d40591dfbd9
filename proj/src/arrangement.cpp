#include "heegaard/arrangement.hpp"

#include <algorithm>
#include <sstream>

#include "heegaard/error.hpp"

namespace heegaard {

int Arrangement::add_curve(std::string name, Family family) {
  curves.push_back(CurveTrack{std::move(name), family, {}});
  return static_cast<int>(curves.size()) - 1;
}

int Arrangement::add_crossing(int first, int second, int sign) {
  crossings.push_back(Crossing{first, second, sign});
  return static_cast<int>(crossings.size()) - 1;
}

Side entering_side(const Arrangement& arr, int crossing, int curve) {
  const Crossing& x = arr.crossings[static_cast<std::size_t>(crossing)];
  // second crosses first right-to-left when sign = +1; then first crosses
  // second left-to-right, entering second's right.
  const int s = (curve == x.second) ? x.sign : -x.sign;
  return side_from_int(s);
}

std::vector<std::string> check_arrangement(const Arrangement& arr) {
  std::vector<std::string> problems;
  const auto n_curves = static_cast<int>(arr.curves.size());
  std::vector<std::array<int, 2>> seen(arr.crossings.size(), {0, 0});
  for (int c = 0; c < n_curves; ++c) {
    for (int x : arr.curves[static_cast<std::size_t>(c)].crossings) {
      if (x < 0 || x >= static_cast<int>(arr.crossings.size())) {
        problems.push_back("curve " + arr.curves[static_cast<std::size_t>(c)].name +
                           " references unknown crossing " + std::to_string(x));
        continue;
      }
      const Crossing& cr = arr.crossings[static_cast<std::size_t>(x)];
      if (cr.first == c) {
        ++seen[static_cast<std::size_t>(x)][0];
      } else if (cr.second == c) {
        ++seen[static_cast<std::size_t>(x)][1];
      } else {
        problems.push_back("curve " + arr.curves[static_cast<std::size_t>(c)].name +
                           " lists crossing " + std::to_string(x) + " of other curves");
      }
    }
  }
  for (std::size_t x = 0; x < arr.crossings.size(); ++x) {
    const Crossing& cr = arr.crossings[x];
    if (cr.first < 0 || cr.second < 0 || cr.first >= n_curves || cr.second >= n_curves) {
      problems.push_back("crossing " + std::to_string(x) + " names an unknown curve");
      continue;
    }
    if (cr.first == cr.second) {
      problems.push_back("crossing " + std::to_string(x) + " is a self-crossing");
    }
    if (cr.sign != 1 && cr.sign != -1) {
      problems.push_back("crossing " + std::to_string(x) + " has sign other than +1/-1");
    }
    if (seen[x][0] != 1 || seen[x][1] != 1) {
      problems.push_back("crossing " + std::to_string(x) + " occurs " + std::to_string(seen[x][0]) +
                         "/" + std::to_string(seen[x][1]) + " times on its two curves");
    }
  }
  return problems;
}

namespace {

Arrangement rebuild(const Arrangement& arr, const std::vector<bool>& keep_curve,
                    const std::vector<bool>& keep_crossing) {
  std::vector<int> curve_map(arr.curves.size(), -1);
  Arrangement out;
  for (std::size_t c = 0; c < arr.curves.size(); ++c) {
    if (keep_curve[c]) {
      curve_map[c] = out.add_curve(arr.curves[c].name, arr.curves[c].family);
    }
  }
  std::vector<int> crossing_map(arr.crossings.size(), -1);
  for (std::size_t x = 0; x < arr.crossings.size(); ++x) {
    const Crossing& cr = arr.crossings[x];
    if (!keep_crossing[x] || !keep_curve[static_cast<std::size_t>(cr.first)] ||
        !keep_curve[static_cast<std::size_t>(cr.second)]) {
      continue;
    }
    crossing_map[x] = out.add_crossing(curve_map[static_cast<std::size_t>(cr.first)],
                                       curve_map[static_cast<std::size_t>(cr.second)], cr.sign);
  }
  for (std::size_t c = 0; c < arr.curves.size(); ++c) {
    if (curve_map[c] < 0) continue;
    auto& track = out.curves[static_cast<std::size_t>(curve_map[c])].crossings;
    for (int x : arr.curves[c].crossings) {
      if (crossing_map[static_cast<std::size_t>(x)] >= 0) {
        track.push_back(crossing_map[static_cast<std::size_t>(x)]);
      }
    }
  }
  return out;
}

}  // namespace

Arrangement restrict_families(const Arrangement& arr, bool keep_p, bool keep_q, bool keep_aux) {
  std::vector<bool> keep_curve(arr.curves.size());
  for (std::size_t c = 0; c < arr.curves.size(); ++c) {
    switch (arr.curves[c].family) {
      case Family::P: keep_curve[c] = keep_p; break;
      case Family::Q: keep_curve[c] = keep_q; break;
      case Family::Aux: keep_curve[c] = keep_aux; break;
    }
  }
  return rebuild(arr, keep_curve, std::vector<bool>(arr.crossings.size(), true));
}

Arrangement erase_crossings(const Arrangement& arr, const std::vector<int>& doomed) {
  std::vector<bool> keep(arr.crossings.size(), true);
  for (int x : doomed) keep[static_cast<std::size_t>(x)] = false;
  return rebuild(arr, std::vector<bool>(arr.curves.size(), true), keep);
}

Arrangement remove_curve(const Arrangement& arr, int curve) {
  std::vector<bool> keep_curve(arr.curves.size(), true);
  keep_curve[static_cast<std::size_t>(curve)] = false;
  return rebuild(arr, keep_curve, std::vector<bool>(arr.crossings.size(), true));
}

SurfaceMap trace_map(const Arrangement& arr) {
  SurfaceMap map;
  const std::size_t n_darts = 4 * arr.crossings.size();
  map.twin.assign(n_darts, -1);
  map.rot_next.assign(n_darts, -1);
  map.rot_prev.assign(n_darts, -1);
  map.curve.assign(n_darts, -1);
  map.face_of.assign(n_darts, -1);
  map.vertex_count = static_cast<int>(arr.crossings.size());

  for (std::size_t x = 0; x < arr.crossings.size(); ++x) {
    const Crossing& cr = arr.crossings[x];
    const int base = static_cast<int>(4 * x);
    // counter-clockwise order of roles around the vertex
    const std::array<int, 4> order =
        cr.sign > 0 ? std::array<int, 4>{0, 1, 2, 3} : std::array<int, 4>{0, 3, 2, 1};
    for (int k = 0; k < 4; ++k) {
      const int d = base + order[static_cast<std::size_t>(k)];
      const int e = base + order[static_cast<std::size_t>((k + 1) % 4)];
      map.rot_next[static_cast<std::size_t>(d)] = e;
      map.rot_prev[static_cast<std::size_t>(e)] = d;
    }
    map.curve[static_cast<std::size_t>(base + 0)] = cr.first;
    map.curve[static_cast<std::size_t>(base + 2)] = cr.first;
    map.curve[static_cast<std::size_t>(base + 1)] = cr.second;
    map.curve[static_cast<std::size_t>(base + 3)] = cr.second;
  }

  for (std::size_t c = 0; c < arr.curves.size(); ++c) {
    const auto& track = arr.curves[c].crossings;
    const std::size_t m = track.size();
    for (std::size_t k = 0; k < m; ++k) {
      const int x = track[k];
      const int y = track[(k + 1) % m];
      const int role_x = arr.crossings[static_cast<std::size_t>(x)].first == static_cast<int>(c) ? 0 : 1;
      const int role_y = arr.crossings[static_cast<std::size_t>(y)].first == static_cast<int>(c) ? 0 : 1;
      const int out = 4 * x + role_x;
      const int in = 4 * y + 2 + role_y;
      map.twin[static_cast<std::size_t>(out)] = in;
      map.twin[static_cast<std::size_t>(in)] = out;
    }
    map.edge_count += static_cast<int>(m);
  }

  for (std::size_t d = 0; d < n_darts; ++d) {
    if (map.face_of[d] >= 0) continue;
    const int id = static_cast<int>(map.faces.size());
    std::vector<int> cycle;
    int cur = static_cast<int>(d);
    do {
      map.face_of[static_cast<std::size_t>(cur)] = id;
      cycle.push_back(cur);
      cur = map.next_in_face(cur);
    } while (cur != static_cast<int>(d));
    map.faces.push_back(std::move(cycle));
  }
  return map;
}

Arrangement seam_scaffold(const PantsDecomposition& pd) {
  Arrangement arr;
  const int n = pd.cuff_count();
  for (int c = 0; c < n; ++c) arr.add_curve(std::to_string(c + 1), Family::P);
  // Crossing ids 2c+k are reserved for cuff point k of cuff c; the seam curve is
  // filled in while tracing.
  arr.crossings.assign(static_cast<std::size_t>(2 * n), Crossing{});
  for (int c = 0; c < n; ++c) {
    arr.curves[static_cast<std::size_t>(c)].crossings = {2 * c, 2 * c + 1};
  }

  // Inside a pants with slots a,b,c (boundary orientation, pants on the left)
  // the seams join (a,1)-(b,0), (b,1)-(c,0), (c,1)-(a,0). Slot point k is cuff
  // point k on either side.
  auto seam_partner = [](SlotLabel label, int point) {
    const int l = static_cast<int>(label);
    if (point == 1) return std::pair{static_cast<SlotLabel>((l + 1) % 3), 0};
    return std::pair{static_cast<SlotLabel>((l + 2) % 3), 1};
  };

  std::vector<bool> visited(static_cast<std::size_t>(2 * n), false);
  int seam_index = 0;
  for (int start = 0; start < 2 * n; ++start) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    const int seam = arr.add_curve("seam" + std::to_string(++seam_index), Family::Aux);
    int cuff = start / 2;
    int point = start % 2;
    Side side = Side::Plus;  // the seam leaves the start point into this side
    while (true) {
      const int x = 2 * cuff + point;
      visited[static_cast<std::size_t>(x)] = true;
      // passing from opposite(side) into side: right-to-left iff entering Plus
      arr.crossings[static_cast<std::size_t>(x)] = Crossing{cuff, seam, side == Side::Plus ? 1 : -1};
      arr.curves[static_cast<std::size_t>(seam)].crossings.push_back(x);
      const CuffSlot& here = pd.slot_of(cuff, side);
      const auto [next_label, next_point] = seam_partner(here.label, point);
      const CuffSlot& there = pd.slot(here.pants, next_label);
      cuff = there.cuff;
      point = next_point;
      side = opposite(there.side);
      if (2 * cuff + point == start) break;
    }
  }
  return arr;
}

std::vector<int> face_pants(const SurfaceMap& map, const Arrangement& arr,
                            const PantsDecomposition& pd) {
  std::vector<int> result(map.faces.size(), -1);
  for (std::size_t f = 0; f < map.faces.size(); ++f) {
    for (int d : map.faces[f]) {
      const int c = map.curve[static_cast<std::size_t>(d)];
      if (arr.curves[static_cast<std::size_t>(c)].family != Family::P) continue;
      const int p = pd.pants_of(c, SurfaceMap::face_side(d));
      if (result[f] < 0) {
        result[f] = p;
      } else if (result[f] != p) {
        std::ostringstream msg;
        msg << "inconsistent orientation: a face touches pants " << pd.pants_name(result[f])
            << " and " << pd.pants_name(p) << " (check crossing handedness)";
        throw InvalidInput(msg.str());
      }
    }
  }
  return result;
}

}  // namespace heegaard
