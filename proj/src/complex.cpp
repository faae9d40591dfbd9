#include "heegaard/complex.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "heegaard/error.hpp"
#include "heegaard/random.hpp"

namespace heegaard {

namespace {

std::size_t at(int v) { return static_cast<std::size_t>(v); }

}  // namespace

std::vector<ComplexEdge> CurvePairComplex::edges() const {
  std::vector<ComplexEdge> out;
  for (std::size_t d = 0; d < map.twin.size(); ++d) {
    if (!SurfaceMap::forward(static_cast<int>(d))) continue;
    const int c = map.curve[d];
    out.push_back(ComplexEdge{static_cast<int>(d), c, arr.curves[at(c)].family, map.face_of[d],
                              map.face_of[at(map.twin[d])]});
  }
  return out;
}

std::vector<int> CurvePairComplex::bigon_faces() const {
  std::vector<std::pair<int, int>> keyed;
  for (std::size_t f = 0; f < map.faces.size(); ++f) {
    const auto& darts = map.faces[f];
    if (darts.size() != 2) continue;
    const int low = std::min(SurfaceMap::crossing_of(darts[0]), SurfaceMap::crossing_of(darts[1]));
    keyed.emplace_back(low, static_cast<int>(f));
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<int> out;
  for (const auto& kv : keyed) out.push_back(kv.second);
  return out;
}

CurvePairComplex build_complex(const PantsDecomposition& pd, Arrangement arr) {
  CurvePairComplex c{pd, std::move(arr), {}, {}, {}, true};
  for (std::size_t k = 0; k < c.arr.curves.size(); ++k) {
    if (c.arr.curves[k].family == Family::Aux) {
      throw InvalidInput("complex data may only contain cuffs and E-curves");
    }
    if (c.arr.curves[k].crossings.empty()) c.crossing_free.push_back(static_cast<int>(k));
  }
  c.map = trace_map(c.arr);
  c.face_pants = face_pants(c.map, c.arr, pd);
  const int expected = 2 - 2 * pd.genus();
  if (!c.crossing_free.empty()) {
    c.cellular = false;
    return c;
  }
  const int chi = c.map.euler_characteristic();
  if (chi < expected) {
    throw InvalidInput("traced Euler characteristic " + std::to_string(chi) + " is below 2-2g = " +
                       std::to_string(expected) + " (corrupt handedness data)");
  }
  if (chi > expected) {
    c.cellular = false;
    return c;
  }
  const DualPantsStructure base = derive_base_pants(c);
  for (int p = 0; p < base.pants.pants_count(); ++p) {
    const int target = pd.pants_of(base.pants.slot(p, SlotLabel::A).cuff,
                                   base.pants.slot(p, SlotLabel::A).side);
    for (SlotLabel l : {SlotLabel::A, SlotLabel::B, SlotLabel::C}) {
      const CuffSlot& s = base.pants.slot(p, l);
      if (pd.pants_of(s.cuff, s.side) != target) {
        throw InvalidInput("traced faces do not assemble into the base pants (orientation audit)");
      }
    }
  }
  return c;
}

CurvePairComplex build_complex(const NormalDiagram& nd) {
  return build_complex(nd.pd, restrict_families(nd.arr, true, true, false));
}

NormalDiagram to_normal_diagram(const CurvePairComplex& c) { return NormalDiagram{c.pd, c.arr}; }

IntersectionMatrix intersection_matrix(const CurvePairComplex& c) {
  IntersectionMatrix m = intersection_matrix(to_normal_diagram(c));
  m.reduced = c.cellular && c.bigon_faces().empty();
  return m;
}

ReductionResult reduce_bigons_logged(const CurvePairComplex& c, const ReductionOptions& opts) {
  ReductionResult result{c, {}, false};
  if (!c.cellular) {
    result.stopped_non_cellular = true;
    return result;
  }
  Rng rng(opts.seed);
  while (true) {
    CurvePairComplex& cur = result.complex;
    std::vector<int> bigons = cur.bigon_faces();
    if (bigons.empty()) break;
    if (opts.randomized) rng.shuffle(bigons);
    std::vector<bool> taken(at(cur.vertex_count()), false);
    std::vector<int> doomed;
    int vertices = cur.vertex_count();
    for (int f : bigons) {
      const auto& darts = cur.map.faces[at(f)];
      const int u = SurfaceMap::crossing_of(darts[0]);
      const int v = SurfaceMap::crossing_of(darts[1]);
      if (taken[at(u)] || taken[at(v)]) continue;
      taken[at(u)] = taken[at(v)] = true;
      doomed.push_back(u);
      doomed.push_back(v);
      result.steps.push_back(ReductionStep{{u, v}, vertices, vertices - 2});
      vertices -= 2;
    }
    CurvePairComplex next = build_complex(cur.pd, erase_crossings(cur.arr, doomed));
    result.complex = std::move(next);
    if (!result.complex.cellular) {
      result.stopped_non_cellular = true;
      break;
    }
  }
  return result;
}

CurvePairComplex reduce_bigons(const CurvePairComplex& c) { return reduce_bigons_logged(c).complex; }

namespace {

DualPantsStructure derive_pants_of_family(const CurvePairComplex& c, Family family,
                                          const std::string& prefix) {
  if (!c.cellular) throw InvalidInput("complex is not cellular; pants cannot be traced");
  std::vector<int> index_in_family(c.arr.curves.size(), -1);
  int n_family = 0;
  for (std::size_t k = 0; k < c.arr.curves.size(); ++k) {
    if (c.arr.curves[k].family == family) index_in_family[k] = n_family++;
  }
  std::vector<bool> mask(c.arr.curves.size());
  for (std::size_t k = 0; k < mask.size(); ++k) mask[k] = c.arr.curves[k].family == family;
  const RegionMap regions = trace_regions(c.map, mask);

  using SlotKey = std::pair<int, int>;  // (curve index, 0 for Plus / 1 for Minus)
  std::vector<std::vector<SlotKey>> slots;
  for (std::size_t r = 0; r < regions.regions.size(); ++r) {
    const Region& reg = regions.regions[r];
    std::vector<SlotKey> keys;
    bool ok = reg.euler == -1 && reg.boundary.size() == 3;
    for (const BoundaryCycle& b : reg.boundary) {
      if (!ok) break;
      const int d0 = b.darts.front();
      const bool fwd = SurfaceMap::forward(d0);
      for (int d : b.darts) {
        if (c.map.curve[at(d)] != c.map.curve[at(d0)] || SurfaceMap::forward(d) != fwd) ok = false;
      }
      keys.emplace_back(index_in_family[at(c.map.curve[at(d0)])], fwd ? 0 : 1);
    }
    if (!ok) {
      std::ostringstream msg;
      msg << "complementary piece with Euler characteristic " << reg.euler << " and "
          << reg.boundary.size() << " boundary circle(s) is not a pair of pants";
      throw InvalidInput(msg.str());
    }
    std::sort(keys.begin(), keys.end());
    slots.push_back(std::move(keys));
  }
  std::vector<int> order(slots.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return slots[at(a)] < slots[at(b)]; });
  std::vector<int> rank(slots.size());
  for (std::size_t k = 0; k < order.size(); ++k) rank[at(order[k])] = static_cast<int>(k);

  const int genus = c.pd.genus();
  if (n_family != 3 * genus - 3 || static_cast<int>(slots.size()) != 2 * genus - 2) {
    throw InvalidInput("the family does not cut the surface into 2g-2 pants");
  }
  std::vector<SlotGluing> gluing;
  std::vector<std::string> names;
  for (std::size_t k = 0; k < order.size(); ++k) {
    names.push_back(prefix + std::to_string(k + 1));
    const auto& keys = slots[at(order[k])];
    for (int l = 0; l < 3; ++l) {
      gluing.push_back(SlotGluing{static_cast<int>(k), static_cast<SlotLabel>(l), keys[at(l)].first,
                                  keys[at(l)].second == 0 ? Side::Plus : Side::Minus});
    }
  }
  DualPantsStructure out{build_pants_decomposition(genus, gluing, std::move(names)), {}};
  out.region_of_face.resize(regions.region_of_face.size());
  for (std::size_t f = 0; f < regions.region_of_face.size(); ++f) {
    out.region_of_face[f] = rank[at(regions.region_of_face[f])];
  }
  return out;
}

}  // namespace

DualPantsStructure derive_dual_pants(const CurvePairComplex& c) {
  return derive_pants_of_family(c, Family::Q, "Q");
}

DualPantsStructure derive_base_pants(const CurvePairComplex& c) {
  return derive_pants_of_family(c, Family::P, "R");
}

}  // namespace heegaard
