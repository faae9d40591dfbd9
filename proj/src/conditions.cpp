#include "heegaard/conditions.hpp"

#include <algorithm>
#include <set>

#include "heegaard/error.hpp"

namespace heegaard {

namespace {

std::size_t at(int v) { return static_cast<std::size_t>(v); }

}  // namespace

std::string conclusion_name(Conclusion c) {
  switch (c) {
    case Conclusion::NonStabilized: return "non-stabilized";
    case Conclusion::Irreducible: return "irreducible";
    case Conclusion::StronglyIrreducible: return "strongly irreducible";
  }
  return "";
}

bool parity_check(const IntersectionMatrix& m) {
  return std::all_of(m.entries.begin(), m.entries.end(), [](long long v) { return v % 2 == 0; });
}

std::optional<Certificate> certify(const IntersectionMatrix& m, bool manifold_irreducible) {
  if (!parity_check(m)) return std::nullopt;
  Certificate cert;
  cert.kind = CertificateKind::EvenParity;
  cert.evidence = "all " + std::to_string(m.rows * m.cols) + " entries of |Di ∩ Ej| are even";
  if (manifold_irreducible) {
    cert.conclusion = Conclusion::Irreducible;
    cert.assumptions.push_back("M irreducible");
  } else {
    cert.conclusion = Conclusion::NonStabilized;
  }
  return cert;
}

std::string certificate_text(const std::optional<Certificate>& cert) {
  if (!cert) return "condition not met; no conclusion";
  const std::string head = cert->kind == CertificateKind::EvenParity ? "even parity holds"
                                                                     : "rectangle condition holds";
  return head + "; certificate: " + conclusion_name(cert->conclusion);
}

int slot_pair_index(SlotLabel x, SlotLabel y) {
  const int a = static_cast<int>(x);
  const int b = static_cast<int>(y);
  if (a == b) return -1;
  const int lo = std::min(a, b);
  const int hi = std::max(a, b);
  if (lo == 0 && hi == 1) return 0;
  if (lo == 1 && hi == 2) return 1;
  return 2;
}

std::string slot_pair_name(int index) {
  static const char* names[] = {"ab", "bc", "ca"};
  return names[index];
}

namespace {

SlotLabel p_label(const CurvePairComplex& c, int dart) {
  return c.pd.slot_of(c.map.curve[at(dart)], SurfaceMap::face_side(dart)).label;
}

SlotLabel q_label(const CurvePairComplex& c, const DualPantsStructure& dual, int dart) {
  return dual.pants.slot_of(c.map.curve[at(dart)] - c.pd.cuff_count(), SurfaceMap::face_side(dart))
      .label;
}

template <typename T>
std::array<T, 2> sorted_pair(T a, T b) {
  return a < b ? std::array<T, 2>{a, b} : std::array<T, 2>{b, a};
}

struct Rect {
  int face;
  RectangleKey key;
};

std::vector<Rect> rectangles(const CurvePairComplex& c, const DualPantsStructure& dual) {
  std::vector<Rect> out;
  for (std::size_t f = 0; f < c.map.faces.size(); ++f) {
    const auto& darts = c.map.faces[f];
    if (darts.size() != 4) continue;
    std::vector<SlotLabel> ps, qs;
    for (int d : darts) {
      if (c.arr.curves[at(c.map.curve[at(d)])].family == Family::P) {
        ps.push_back(p_label(c, d));
      } else {
        qs.push_back(q_label(c, dual, d));
      }
    }
    if (ps.size() != 2 || qs.size() != 2) continue;
    out.push_back(Rect{static_cast<int>(f),
                       RectangleKey{c.face_pants[f], dual.region_of_face[f], sorted_pair(ps[0], ps[1]),
                                    sorted_pair(qs[0], qs[1])}});
  }
  return out;
}

}  // namespace

RectangleCensus rectangle_census(const CurvePairComplex& c, const DualPantsStructure& dual) {
  RectangleCensus census;
  for (const Rect& r : rectangles(c, dual)) ++census[r.key];
  return census;
}

TightnessReport tightness_report(const CurvePairComplex& c, const DualPantsStructure& dual,
                                 int p_pants, int q_pants) {
  if (dual.region_of_face.size() != c.map.faces.size()) {
    throw InvalidInput("dual pants structure does not belong to this complex");
  }
  TightnessReport rep;
  rep.p_pants = p_pants;
  rep.q_pants = q_pants;
  for (auto& row : rep.witness) row.fill(-1);
  for (int f : c.bigon_faces()) {
    if (c.face_pants[at(f)] == p_pants && dual.region_of_face[at(f)] == q_pants) {
      rep.bigon_witness = f;
      break;
    }
  }
  for (const Rect& r : rectangles(c, dual)) {
    if (r.key.p_pants != p_pants || r.key.q_pants != q_pants) continue;
    const int x = slot_pair_index(r.key.p_slots[0], r.key.p_slots[1]);
    const int y = slot_pair_index(r.key.q_slots[0], r.key.q_slots[1]);
    if (x < 0 || y < 0) continue;
    if (!rep.table[at(x)][at(y)]) {
      rep.table[at(x)][at(y)] = true;
      rep.witness[at(x)][at(y)] = r.face;
    }
  }
  bool all = true;
  for (const auto& row : rep.table) {
    for (bool v : row) all = all && v;
  }
  rep.tight = all && !rep.bigon_witness;
  return rep;
}

std::array<std::array<bool, 3>, 3> table_from_census(const RectangleCensus& census, int p_pants,
                                                     int q_pants) {
  std::array<std::array<bool, 3>, 3> table{};
  for (const auto& [key, count] : census) {
    if (key.p_pants != p_pants || key.q_pants != q_pants || count == 0) continue;
    const int x = slot_pair_index(key.p_slots[0], key.p_slots[1]);
    const int y = slot_pair_index(key.q_slots[0], key.q_slots[1]);
    if (x >= 0 && y >= 0) table[at(x)][at(y)] = true;
  }
  return table;
}

RectangleConditionResult rectangle_condition(const CurvePairComplex& c,
                                             const DualPantsStructure& dual) {
  RectangleConditionResult result;
  if (!c.cellular) {
    result.note = "data is not cellular (some curve misses the other family)";
    return result;
  }
  const int n = c.pd.pants_count();
  bool all = true;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < dual.pants.pants_count(); ++j) {
      result.reports.push_back(tightness_report(c, dual, i, j));
      all = all && result.reports.back().tight;
    }
  }
  result.holds = all;
  if (all) {
    Certificate cert;
    cert.kind = CertificateKind::Rectangle;
    cert.conclusion = Conclusion::StronglyIrreducible;
    cert.evidence = "all " + std::to_string(result.reports.size()) + " pants pairs are tight";
    result.certificate = cert;
  }
  return result;
}

std::vector<WaveShadow> detect_returning_arcs(const CurvePairComplex& c, ArcFamily side) {
  std::vector<WaveShadow> out;
  if (!c.cellular) return out;
  const Family arc_family = side == ArcFamily::P ? Family::P : Family::Q;
  const Family wall_family = side == ArcFamily::P ? Family::Q : Family::P;
  std::optional<DualPantsStructure> dual;
  if (wall_family == Family::Q) dual = derive_dual_pants(c);

  auto is_wall = [&](int dart) {
    return c.arr.curves[at(c.map.curve[at(dart)])].family == wall_family;
  };
  using Slot = std::pair<int, int>;  // (curve, side)
  auto slots_reachable = [&](int start_face, int skip_dart) {
    std::set<Slot> slots;
    std::vector<bool> seen(c.map.faces.size(), false);
    std::vector<int> stack{start_face};
    seen[at(start_face)] = true;
    while (!stack.empty()) {
      const int f = stack.back();
      stack.pop_back();
      for (int d : c.map.faces[at(f)]) {
        if (is_wall(d)) {
          slots.emplace(c.map.curve[at(d)], to_int(SurfaceMap::face_side(d)));
          continue;
        }
        if (d == skip_dart || d == c.map.twin[at(skip_dart)]) continue;
        const int g = c.map.face_of[at(c.map.twin[at(d)])];
        if (!seen[at(g)]) {
          seen[at(g)] = true;
          stack.push_back(g);
        }
      }
    }
    return slots;
  };

  for (const ComplexEdge& e : c.edges()) {
    if (e.family != arc_family) continue;
    const int x = SurfaceMap::crossing_of(e.dart);
    const int y = SurfaceMap::crossing_of(c.map.twin[at(e.dart)]);
    const int wall_x = c.arr.other(x, e.curve);
    const int wall_y = c.arr.other(y, e.curve);
    const Side side_x = entering_side(c.arr, x, e.curve);
    const Side side_y = opposite(entering_side(c.arr, y, e.curve));
    if (wall_x != wall_y || side_x != side_y) continue;
    const Slot own{wall_x, to_int(side_x)};
    auto has_other = [&](const std::set<Slot>& s) {
      return std::any_of(s.begin(), s.end(), [&](const Slot& v) { return v != own; });
    };
    if (!has_other(slots_reachable(e.left_face, e.dart)) ||
        !has_other(slots_reachable(e.right_face, e.dart))) {
      continue;
    }
    WaveShadow w;
    w.curve = e.curve;
    w.dart = e.dart;
    if (wall_family == Family::P) {
      w.pants = c.face_pants[at(e.left_face)];
      w.slot = c.pd.slot_of(wall_x, side_x).label;
    } else {
      w.pants = dual->region_of_face[at(e.left_face)];
      w.slot = dual->pants.slot_of(wall_x - c.pd.cuff_count(), side_x).label;
    }
    out.push_back(w);
  }
  return out;
}

bool disk_parity_obstruction(const std::vector<long long>& candidate_column) {
  return std::all_of(candidate_column.begin(), candidate_column.end(),
                     [](long long v) { return v % 2 == 0; });
}

}  // namespace heegaard
