#include "heegaard/oracle.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

#include "heegaard/error.hpp"
#include "heegaard/twist.hpp"

namespace heegaard {

namespace {

std::size_t at(int v) { return static_cast<std::size_t>(v); }

int role_of(const Arrangement& arr, int crossing, int curve) {
  return arr.crossings[at(crossing)].first == curve ? 0 : 1;
}

}  // namespace

// ---------------------------------------------------------------------------
// Euler audit

EulerAuditReport euler_audit(const CurvePairComplex& c) {
  const Arrangement& arr = c.arr;
  EulerAuditReport rep;
  rep.expected = 2 - 2 * c.pd.genus();
  const std::size_t n_x = arr.crossings.size();

  std::vector<std::array<int, 2>> pos(n_x, {-1, -1});
  std::vector<int> occurrences(n_x, 0);
  for (std::size_t cv = 0; cv < arr.curves.size(); ++cv) {
    const auto& t = arr.curves[cv].crossings;
    if (t.empty()) rep.skipped_curves.push_back(static_cast<int>(cv));
    for (std::size_t k = 0; k < t.size(); ++k) {
      const Crossing& x = arr.crossings[at(t[k])];
      ++occurrences[at(t[k])];
      if (x.first == static_cast<int>(cv)) pos[at(t[k])][0] = static_cast<int>(k);
      if (x.second == static_cast<int>(cv)) pos[at(t[k])][1] = static_cast<int>(k);
    }
  }
  for (std::size_t x = 0; x < n_x; ++x) {
    const Crossing& cr = arr.crossings[x];
    if (occurrences[x] != 2 || pos[x][0] < 0 || pos[x][1] < 0 || cr.first == cr.second) {
      rep.degree_four = false;
    }
    if (arr.curves[at(cr.first)].family == arr.curves[at(cr.second)].family) rep.alternating = false;
  }
  if (!rep.degree_four) rep.problems.push_back("some vertex does not have degree 4");
  if (!rep.alternating) rep.problems.push_back("some vertex joins two curves of one family");
  if (!rep.degree_four) return rep;

  rep.vertices = static_cast<int>(n_x);
  std::vector<int> offset(arr.curves.size() + 1, 0);
  for (std::size_t cv = 0; cv < arr.curves.size(); ++cv) {
    rep.edges += static_cast<int>(arr.curves[cv].crossings.size());
    offset[cv + 1] = offset[cv] + 2 * static_cast<int>(arr.curves[cv].crossings.size());
  }
  // traversal state (curve, k, dir) walks the edge from track[k] to track[k+dir]
  // with the face on its left; at the far vertex it turns left.
  const int n_states = offset.back();
  std::vector<bool> seen(at(n_states), false);
  for (std::size_t cv = 0; cv < arr.curves.size(); ++cv) {
    const int m = static_cast<int>(arr.curves[cv].crossings.size());
    for (int k = 0; k < m; ++k) {
      for (int dir : {1, -1}) {
        const int start = offset[cv] + 2 * k + (dir > 0 ? 0 : 1);
        if (seen[at(start)]) continue;
        ++rep.faces;
        int cur_curve = static_cast<int>(cv);
        int cur_k = k;
        int cur_dir = dir;
        int pants = -1;
        Family prev_family = arr.curves[cv].family;
        bool first = true;
        while (true) {
          const int id = offset[at(cur_curve)] + 2 * cur_k + (cur_dir > 0 ? 0 : 1);
          if (seen[at(id)]) break;
          seen[at(id)] = true;
          const Family fam = arr.curves[at(cur_curve)].family;
          if (!first && fam == prev_family) rep.alternating = false;
          first = false;
          prev_family = fam;
          if (fam == Family::P) {
            const Side face_side = cur_dir > 0 ? Side::Plus : Side::Minus;
            const int p = c.pd.pants_of(cur_curve, face_side);
            if (pants >= 0 && pants != p) rep.side_consistent = false;
            pants = p;
          }
          const auto& t = arr.curves[at(cur_curve)].crossings;
          const int len = static_cast<int>(t.size());
          const int y = t[at(((cur_k + cur_dir) % len + len) % len)];
          const int o = arr.other(y, cur_curve);
          const Side left = cur_dir > 0 ? Side::Plus : Side::Minus;
          const Side o_enters = entering_side(arr, y, o);
          cur_k = pos[at(y)][at(role_of(arr, y, o))];
          cur_dir = o_enters == left ? 1 : -1;
          cur_curve = o;
        }
      }
    }
  }
  rep.euler = rep.vertices - rep.edges + rep.faces;
  if (!rep.alternating) rep.problems.push_back("face boundaries do not alternate families");
  if (!rep.side_consistent) {
    rep.problems.push_back("a face touches two different base pants (handedness inconsistent)");
  }
  if (!rep.skipped_curves.empty()) {
    rep.non_cellular = true;
  } else if (rep.euler != rep.expected) {
    rep.non_cellular = rep.euler > rep.expected;
    rep.problems.push_back("V-E+F = " + std::to_string(rep.euler) + ", expected 2-2g = " +
                           std::to_string(rep.expected));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Token/chord bookkeeping shared by the scan-based oracles

namespace {

struct ChordSystem {
  // token 2x+s: crossing x seen from side s (0 Plus, 1 Minus) of its wall curve
  std::vector<int> slot;  // 2*wall + s, or -1 for unused tokens
  std::vector<int> next_on_slot;
  std::vector<int> partner;
  std::vector<bool> forward;  // chord from this token runs along its curve
  std::vector<int> curve;     // arc curve carrying the chord
  std::map<int, std::vector<int>> slot_tokens;
};

int token_of(int x, Side s) { return 2 * x + (s == Side::Plus ? 0 : 1); }

ChordSystem build_chords(const Arrangement& arr, Family arc_family, Family wall_family) {
  ChordSystem cs;
  const std::size_t n_tokens = 2 * arr.crossings.size();
  cs.slot.assign(n_tokens, -1);
  cs.next_on_slot.assign(n_tokens, -1);
  cs.partner.assign(n_tokens, -1);
  cs.forward.assign(n_tokens, false);
  cs.curve.assign(n_tokens, -1);
  auto relevant = [&](int x, int curve) {
    return arr.curves[at(arr.other(x, curve))].family ==
           (arr.curves[at(curve)].family == arc_family ? wall_family : arc_family);
  };
  for (std::size_t w = 0; w < arr.curves.size(); ++w) {
    if (arr.curves[w].family != wall_family) continue;
    std::vector<int> xs;
    for (int x : arr.curves[w].crossings) {
      if (relevant(x, static_cast<int>(w))) xs.push_back(x);
    }
    if (xs.empty()) continue;
    for (Side s : {Side::Plus, Side::Minus}) {
      std::vector<int> order = xs;
      if (s == Side::Minus) std::reverse(order.begin(), order.end());
      const int slot_id = 2 * static_cast<int>(w) + (s == Side::Plus ? 0 : 1);
      auto& list = cs.slot_tokens[slot_id];
      for (std::size_t k = 0; k < order.size(); ++k) {
        const int t = token_of(order[k], s);
        cs.slot[at(t)] = slot_id;
        cs.next_on_slot[at(t)] = token_of(order[(k + 1) % order.size()], s);
        list.push_back(t);
      }
    }
  }
  for (std::size_t a = 0; a < arr.curves.size(); ++a) {
    if (arr.curves[a].family != arc_family) continue;
    std::vector<int> xs;
    for (int x : arr.curves[a].crossings) {
      if (relevant(x, static_cast<int>(a))) xs.push_back(x);
    }
    for (std::size_t k = 0; k < xs.size(); ++k) {
      const int x = xs[k];
      const int y = xs[(k + 1) % xs.size()];
      const int tx = token_of(x, entering_side(arr, x, static_cast<int>(a)));
      const int ty = token_of(y, opposite(entering_side(arr, y, static_cast<int>(a))));
      cs.partner[at(tx)] = ty;
      cs.partner[at(ty)] = tx;
      cs.forward[at(tx)] = true;
      cs.forward[at(ty)] = false;
      cs.curve[at(tx)] = cs.curve[at(ty)] = static_cast<int>(a);
    }
  }
  return cs;
}

}  // namespace

RectangleCensus independent_rectangle_scan(const NormalDiagram& nd, const DualPantsStructure& dual) {
  const Arrangement arr = restrict_families(nd.arr, true, true, false);
  const ChordSystem cs = build_chords(arr, Family::Q, Family::P);
  const int n = nd.cuff_count();
  std::set<std::array<int, 4>> seen;
  RectangleCensus census;
  for (const auto& [slot_a, tokens] : cs.slot_tokens) {
    if (tokens.size() < 2) continue;
    for (int u : tokens) {
      const int v = cs.next_on_slot[at(u)];
      const int u2 = cs.partner[at(u)];
      const int v2 = cs.partner[at(v)];
      if (cs.slot[at(u2)] != cs.slot[at(v2)] || cs.next_on_slot[at(v2)] != u2 || u2 == v) continue;
      std::array<int, 4> id{u, v, u2, v2};
      std::sort(id.begin(), id.end());
      if (!seen.insert(id).second) continue;

      const int slot_b = cs.slot[at(u2)];
      const int cuff_a = slot_a / 2;
      const Side side_a = slot_a % 2 == 0 ? Side::Plus : Side::Minus;
      const int cuff_b = slot_b / 2;
      const Side side_b = slot_b % 2 == 0 ? Side::Plus : Side::Minus;
      // the band lies right of the chord from u and left of the chord from v
      const Side q_side_1 = cs.forward[at(u)] ? Side::Minus : Side::Plus;
      const Side q_side_2 = cs.forward[at(v)] ? Side::Plus : Side::Minus;
      const CuffSlot& q1 = dual.pants.slot_of(cs.curve[at(u)] - n, q_side_1);
      const CuffSlot& q2 = dual.pants.slot_of(cs.curve[at(v)] - n, q_side_2);
      RectangleKey key;
      key.p_pants = nd.pd.pants_of(cuff_a, side_a);
      key.q_pants = q1.pants;
      const SlotLabel pa = nd.pd.slot_of(cuff_a, side_a).label;
      const SlotLabel pb = nd.pd.slot_of(cuff_b, side_b).label;
      key.p_slots = pa < pb ? std::array<SlotLabel, 2>{pa, pb} : std::array<SlotLabel, 2>{pb, pa};
      key.q_slots = q1.label < q2.label ? std::array<SlotLabel, 2>{q1.label, q2.label}
                                        : std::array<SlotLabel, 2>{q2.label, q1.label};
      ++census[key];
    }
  }
  return census;
}

int recount_returning_arcs(const NormalDiagram& nd, ArcFamily side) {
  const Arrangement arr = restrict_families(nd.arr, true, true, false);
  const Family arc = side == ArcFamily::P ? Family::P : Family::Q;
  const Family wall = side == ArcFamily::P ? Family::Q : Family::P;
  const ChordSystem cs = build_chords(arr, arc, wall);
  int count = 0;
  for (std::size_t u = 0; u < cs.slot.size(); ++u) {
    if (cs.slot[u] < 0 || !cs.forward[u]) continue;
    const int u2 = cs.partner[u];
    if (cs.slot[at(u2)] != cs.slot[u]) continue;
    auto segment_leaves = [&](int from, int to) {
      for (int t = cs.next_on_slot[at(from)]; t != to; t = cs.next_on_slot[at(t)]) {
        if (cs.slot[at(cs.partner[at(t)])] != cs.slot[u]) return true;
      }
      return false;
    };
    if (segment_leaves(static_cast<int>(u), u2) && segment_leaves(u2, static_cast<int>(u))) ++count;
  }
  return count;
}

// ---------------------------------------------------------------------------
// Cut and connect

std::map<std::pair<LoopKind, int>, int> LoopFamily::multiplicities() const {
  std::map<std::pair<LoopKind, int>, int> out;
  for (const Loop& l : loops) ++out[{l.kind, l.kind == LoopKind::Trivial ? -1 : l.cuff}];
  return out;
}

LoopFamily cut_and_connect(const NormalDiagram& nd, const std::string& candidate) {
  const int cand_src = nd.find_curve(candidate);
  if (cand_src < 0) throw InvalidInput("no curve named " + candidate);
  if (nd.arr.curves[at(cand_src)].family == Family::P) {
    throw InvalidInput("candidate must be an E-curve or an auxiliary curve");
  }
  if (!build_complex(nd).cellular) throw InvalidInput("cut-and-connect needs cellular data");

  Arrangement arr = nd.arr;
  for (int k = static_cast<int>(arr.curves.size()) - 1; k >= 0; --k) {
    if (arr.curves[at(k)].family == Family::Aux && arr.curves[at(k)].name != candidate) {
      arr = remove_curve(arr, k);
    }
  }
  int cand = -1;
  for (std::size_t k = 0; k < arr.curves.size(); ++k) {
    if (arr.curves[k].name == candidate) cand = static_cast<int>(k);
  }
  const PantsDecomposition& pd = nd.pd;
  const int n = pd.cuff_count();
  const SurfaceMap map = trace_map(arr);
  std::vector<int> q_index(arr.curves.size(), -1);
  int n_q = 0;
  for (std::size_t k = 0; k < arr.curves.size(); ++k) {
    if (arr.curves[k].family == Family::Q) q_index[k] = n_q++;
  }
  auto is_p = [&](int curve) { return arr.curves[at(curve)].family == Family::P; };

  const auto& track = arr.curves[at(cand)].crossings;
  if (track.empty()) throw InvalidInput("candidate has no crossings; its position is not recorded");
  const int len = static_cast<int>(track.size());

  LoopFamily family;
  family.candidate_e_counts.assign(at(n_q), 0);
  family.span_e_points.assign(at(n_q), 0);
  for (int x : track) {
    const int o = arr.other(x, cand);
    if (q_index[at(o)] >= 0) ++family.candidate_e_counts[at(q_index[at(o)])];
  }

  std::vector<int> ps;  // positions in the candidate's track of cuff crossings
  for (int k = 0; k < len; ++k) {
    if (is_p(arr.other(track[at(k)], cand))) ps.push_back(k);
  }
  const int m = static_cast<int>(ps.size());

  // loop pieces: arcs of the candidate between cuff crossings, and connectors
  std::vector<int> arc_of_edge(map.twin.size(), -1);  // candidate dart -> arc
  std::vector<std::vector<long long>> arc_e(at(std::max(m, 1)), std::vector<long long>(at(n_q), 0));
  auto arc_index_of_position = [&](int k) {
    if (m == 0) return 0;
    int a = m - 1;  // positions before ps[0] belong to the wrap-around arc
    for (int i = 0; i < m; ++i) {
      if (ps[at(i)] <= k) a = i;
    }
    return a;
  };
  for (int k = 0; k < len; ++k) {
    const int x = track[at(k)];
    const int a = arc_index_of_position(k);
    const int d = 4 * x + role_of(arr, x, cand);  // edge from track[k] to track[k+1]
    arc_of_edge[at(d)] = a;
    arc_of_edge[at(map.twin[at(d)])] = a;
    const int o = arr.other(x, cand);
    if (q_index[at(o)] >= 0) ++arc_e[at(a)][at(q_index[at(o)])];
  }

  struct Connector {
    int cuff;
    Side side;
    int from, to;  // candidate crossings
    int span;
  };
  std::vector<Connector> connectors;
  std::vector<std::vector<long long>> span_e;
  // edge of a cuff (by forward dart) -> span covering it
  std::vector<int> span_of_edge(map.twin.size(), -1);
  for (int c = 0; c < n; ++c) {
    const auto& ct = arr.curves[at(c)].crossings;
    std::vector<int> at_cand;
    for (std::size_t k = 0; k < ct.size(); ++k) {
      if (arr.other(ct[k], c) == cand) at_cand.push_back(static_cast<int>(k));
    }
    if (at_cand.size() % 2 != 0) {
      throw InvalidInput("candidate meets cuff " + std::to_string(c + 1) +
                         " an odd number of times; it cannot bound a disk");
    }
    const int clen = static_cast<int>(ct.size());
    for (std::size_t i = 0; i < at_cand.size(); i += 2) {
      const int span = static_cast<int>(span_e.size());
      span_e.emplace_back(at(n_q), 0);
      const int from = at_cand[i];
      const int to = at_cand[i + 1];
      for (int k = from; k != to; k = (k + 1) % clen) {
        const int x = ct[at(k)];
        span_of_edge[at(4 * x + role_of(arr, x, c))] = span;
        if (k != from) {
          const int o = arr.other(x, c);
          if (q_index[at(o)] >= 0) ++span_e.back()[at(q_index[at(o)])];
        }
      }
      for (int q = 0; q < n_q; ++q) family.span_e_points[at(q)] += span_e.back()[at(q)];
      for (Side s : {Side::Plus, Side::Minus}) {
        connectors.push_back(Connector{c, s, ct[at(from)], ct[at(to)], span});
      }
    }
  }

  std::vector<int> loop_of_arc(at(std::max(m, 1)), -1);
  std::vector<int> loop_of_connector(connectors.size(), -1);
  if (m == 0) {
    Loop l;
    l.arcs = 1;
    l.e_counts = family.candidate_e_counts;
    loop_of_arc[0] = 0;
    family.loops.push_back(l);
  } else {
    // ends (crossing, side): each touches one arc and one connector
    std::map<std::pair<int, int>, int> arc_at_end, connector_at_end;
    std::vector<std::array<std::pair<int, int>, 2>> arc_ends(at(m));
    for (int a = 0; a < m; ++a) {
      const int x = track[at(ps[at(a)])];
      const int y = track[at(ps[at((a + 1) % m)])];
      arc_ends[at(a)] = {std::pair{x, to_int(entering_side(arr, x, cand))},
                         std::pair{y, -to_int(entering_side(arr, y, cand))}};
      arc_at_end[arc_ends[at(a)][0]] = a;
      arc_at_end[arc_ends[at(a)][1]] = a;
    }
    for (std::size_t k = 0; k < connectors.size(); ++k) {
      connector_at_end[{connectors[k].from, to_int(connectors[k].side)}] = static_cast<int>(k);
      connector_at_end[{connectors[k].to, to_int(connectors[k].side)}] = static_cast<int>(k);
    }
    for (int start = 0; start < m; ++start) {
      if (loop_of_arc[at(start)] >= 0) continue;
      const int id = static_cast<int>(family.loops.size());
      Loop l;
      l.e_counts.assign(at(n_q), 0);
      const int x0 = track[at(ps[at(start)])];
      const Side s0 = entering_side(arr, x0, cand);
      l.pants = pd.pants_of(arr.other(x0, cand), s0);
      int a = start;
      std::pair<int, int> end = arc_ends[at(a)][1];
      while (loop_of_arc[at(a)] < 0) {
        loop_of_arc[at(a)] = id;
        ++l.arcs;
        for (int q = 0; q < n_q; ++q) l.e_counts[at(q)] += arc_e[at(a)][at(q)];
        const int k = connector_at_end.at(end);
        const Connector& con = connectors[at(k)];
        if (pd.pants_of(con.cuff, con.side) != l.pants) {
          throw std::logic_error("loop leaves its pants");
        }
        loop_of_connector[at(k)] = id;
        ++l.connectors;
        for (int q = 0; q < n_q; ++q) l.e_counts[at(q)] += span_e[at(con.span)][at(q)];
        const std::pair<int, int> other_end{con.from == end.first ? con.to : con.from, end.second};
        a = arc_at_end.at(other_end);
        end = arc_ends[at(a)][0] == other_end ? arc_ends[at(a)][1] : arc_ends[at(a)][0];
      }
      family.loops.push_back(std::move(l));
    }
  }

  // pants of every face, via regions of the cuff complement
  const RegionMap regions = trace_regions(map, family_mask(arr, true, false, false));
  const std::vector<int> fp = face_pants(map, arr, pd);
  std::vector<int> region_pants(regions.regions.size(), -1);
  for (std::size_t f = 0; f < fp.size(); ++f) {
    if (fp[f] >= 0) region_pants[at(regions.region_of_face[f])] = fp[f];
  }
  if (m == 0) {
    family.loops[0].pants = region_pants[at(regions.region_of_face[at(map.face_of[at(4 * track[0])])])];
  }

  // Classification: a loop separates slots x and y of its pants iff a path
  // between them crosses it an odd number of times.
  auto slot_dart = [&](const CuffSlot& s) {
    const int x = arr.curves[at(s.cuff)].crossings.front();
    const int r = role_of(arr, x, s.cuff);
    return s.side == Side::Plus ? 4 * x + r : 4 * x + 2 + r;
  };
  auto edge_key = [&](int dart) { return SurfaceMap::forward(dart) ? dart : map.twin[at(dart)]; };
  auto path_parities = [&](int pants, const CuffSlot& from, const CuffSlot& to) {
    const int d_from = slot_dart(from);
    const int d_to = slot_dart(to);
    const int f0 = map.face_of[at(d_from)];
    const int f1 = map.face_of[at(d_to)];
    std::vector<int> via(map.faces.size(), -2);
    std::vector<int> queue{f0};
    via[at(f0)] = -1;
    for (std::size_t head = 0; head < queue.size() && via[at(f1)] == -2; ++head) {
      const int f = queue[head];
      for (int d : map.faces[at(f)]) {
        if (is_p(map.curve[at(d)])) continue;
        const int g = map.face_of[at(map.twin[at(d)])];
        if (via[at(g)] != -2) continue;
        via[at(g)] = d;
        queue.push_back(g);
      }
    }
    if (via[at(f1)] == -2) throw std::logic_error("slots of one pants are not connected");
    std::vector<int> parity(family.loops.size(), 0);
    for (int f = f1; via[at(f)] >= 0; f = map.face_of[at(via[at(f)])]) {
      const int a = arc_of_edge[at(via[at(f)])];
      if (a >= 0) parity[at(loop_of_arc[at(a)])] ^= 1;
    }
    for (const auto& [dart, side] : {std::pair{d_from, from.side}, std::pair{d_to, to.side}}) {
      const int span = span_of_edge[at(edge_key(dart))];
      if (span < 0) continue;
      for (std::size_t k = 0; k < connectors.size(); ++k) {
        if (connectors[k].span == span && connectors[k].side == side) {
          parity[at(loop_of_connector[k])] ^= 1;
        }
      }
    }
    (void)pants;
    return parity;
  };

  std::map<int, std::pair<std::vector<int>, std::vector<int>>> by_pants;
  for (const Loop& l : family.loops) {
    if (by_pants.count(l.pants)) continue;
    const CuffSlot& a = pd.slot(l.pants, SlotLabel::A);
    const CuffSlot& b = pd.slot(l.pants, SlotLabel::B);
    const CuffSlot& c = pd.slot(l.pants, SlotLabel::C);
    by_pants[l.pants] = {path_parities(l.pants, a, b), path_parities(l.pants, a, c)};
  }
  for (std::size_t k = 0; k < family.loops.size(); ++k) {
    Loop& l = family.loops[k];
    const bool sep_ab = by_pants[l.pants].first[k] != 0;
    const bool sep_ac = by_pants[l.pants].second[k] != 0;
    if (!sep_ab && !sep_ac) {
      l.kind = LoopKind::Trivial;
      continue;
    }
    l.kind = LoopKind::CuffParallel;
    l.slot = sep_ab && sep_ac ? SlotLabel::A : (sep_ab ? SlotLabel::B : SlotLabel::C);
    l.cuff = pd.slot(l.pants, l.slot).cuff;
  }
  return family;
}

// ---------------------------------------------------------------------------
// Dual cycles and auxiliary curves

std::optional<std::vector<int>> random_dual_cycle(const SurfaceMap& map, Rng& rng, int max_length) {
  if (map.faces.empty()) return std::nullopt;
  const int n_faces = static_cast<int>(map.faces.size());
  for (int restart = 0; restart < 64; ++restart) {
    std::vector<int> faces{rng.index(at(n_faces))};
    std::vector<int> darts;
    std::vector<int> position(at(n_faces), -1);
    position[at(faces[0])] = 0;
    for (int step = 0; step < 16 * max_length; ++step) {
      const auto& boundary = map.faces[at(faces.back())];
      const int d = boundary[at(rng.index(boundary.size()))];
      const int g = map.face_of[at(map.twin[at(d)])];
      if (g == faces[0]) {
        if (!darts.empty() && (d == darts[0] || map.twin[at(d)] == darts[0])) continue;
        darts.push_back(d);
        return darts;
      }
      const int seen_at = position[at(g)];
      if (seen_at > 0) {
        // erase the loop just closed
        for (std::size_t k = at(seen_at) + 1; k < faces.size(); ++k) position[at(faces[k])] = -1;
        faces.resize(at(seen_at) + 1);
        darts.resize(at(seen_at));
        continue;
      }
      if (static_cast<int>(darts.size()) + 1 >= max_length) break;
      darts.push_back(d);
      position[at(g)] = static_cast<int>(faces.size());
      faces.push_back(g);
    }
  }
  return std::nullopt;
}

Arrangement add_dual_curve(const Arrangement& arr, const SurfaceMap& map,
                           const std::vector<int>& cycle, const std::string& name) {
  Arrangement out = arr;
  const int alpha = out.add_curve(name, Family::Aux);
  // inserts[c] holds (track index after which to insert, crossing id)
  std::vector<std::vector<std::pair<int, int>>> inserts(arr.curves.size());
  for (int d : cycle) {
    const int c = map.curve[at(d)];
    const int x = SurfaceMap::crossing_of(d);
    const auto& t = arr.curves[at(c)].crossings;
    const int len = static_cast<int>(t.size());
    const int k = static_cast<int>(std::find(t.begin(), t.end(), x) - t.begin());
    // α passes from the face on the dart's left to the one on its right
    const bool fwd = SurfaceMap::forward(d);
    const int id = out.add_crossing(c, alpha, fwd ? -1 : 1);
    out.curves[at(alpha)].crossings.push_back(id);
    inserts[at(c)].emplace_back(fwd ? k : (k + len - 1) % len, id);
  }
  for (std::size_t c = 0; c < arr.curves.size(); ++c) {
    if (inserts[c].empty()) continue;
    std::vector<int> rebuilt;
    const auto& t = arr.curves[c].crossings;
    for (std::size_t k = 0; k < t.size(); ++k) {
      rebuilt.push_back(t[k]);
      for (const auto& [after, id] : inserts[c]) {
        if (after == static_cast<int>(k)) rebuilt.push_back(id);
      }
    }
    out.curves[c].crossings = std::move(rebuilt);
  }
  return out;
}

bool has_bigon_with_family(const Arrangement& arr, int curve, Family family) {
  const SurfaceMap map = trace_map(arr);
  std::vector<bool> mask = family_mask(arr, family == Family::P, family == Family::Q,
                                       family == Family::Aux);
  mask[at(curve)] = true;
  const RegionMap regions = trace_regions(map, mask);
  for (const Region& r : regions.regions) {
    if (!r.is_disk() || r.boundary[0].corners != 2) continue;
    bool touches_curve = false;
    for (int d : r.boundary[0].darts) touches_curve = touches_curve || map.curve[at(d)] == curve;
    if (touches_curve) return true;
  }
  return false;
}

std::optional<NormalDiagram> sample_alpha(const NormalDiagram& nd, Rng& rng, const AlphaOptions& opts) {
  const CurvePairComplex c = build_complex(nd);
  if (!c.cellular) return std::nullopt;
  std::string name = "alpha";
  for (int k = 2; nd.find_curve(name) >= 0; ++k) name = "alpha" + std::to_string(k);
  for (int attempt = 0; attempt < opts.attempts; ++attempt) {
    const auto cycle = random_dual_cycle(c.map, rng, opts.max_length);
    if (!cycle) continue;
    Arrangement arr = add_dual_curve(c.arr, c.map, *cycle, name);
    const int alpha = static_cast<int>(arr.curves.size()) - 1;
    const std::vector<int> counts = crossing_counts(arr, alpha);
    bool ok = true;
    for (std::size_t k = 0; k < arr.curves.size() && ok; ++k) {
      if (arr.curves[k].family == Family::Q && opts.even_e_counts && counts[k] % 2 != 0) ok = false;
      if (arr.curves[k].family == Family::Q && opts.cross_every_e && counts[k] == 0) ok = false;
      if (arr.curves[k].family == Family::P && opts.cross_every_cuff && counts[k] == 0) ok = false;
    }
    if (!ok) continue;
    if (opts.minimal &&
        (has_bigon_with_family(arr, alpha, Family::P) || has_bigon_with_family(arr, alpha, Family::Q))) {
      continue;
    }
    return NormalDiagram{nd.pd, std::move(arr)};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Generator

NormalDiagram seed_diagram(int genus, bool even_parity) {
  const PantsDecomposition pd = standard_decomposition(genus);
  const Arrangement scaffold = seam_scaffold(pd);
  const int n = pd.cuff_count();

  // cuffs, then one pushoff per cuff on its Plus side, then the seams
  Arrangement arr;
  for (int c = 0; c < n; ++c) arr.add_curve(std::to_string(c + 1), Family::P);
  for (int c = 0; c < n; ++c) arr.add_curve("E" + std::to_string(c + 1), Family::Q);
  std::vector<int> seams;
  for (std::size_t s = static_cast<std::size_t>(n); s < scaffold.curves.size(); ++s) {
    seams.push_back(arr.add_curve(scaffold.curves[s].name, Family::Aux));
  }
  auto seam_index = [&](int scaffold_curve) { return scaffold_curve + n; };
  arr.crossings.reserve(2 * scaffold.crossings.size());
  for (const Crossing& x : scaffold.crossings) {
    arr.add_crossing(x.first, seam_index(x.second), x.sign);
  }
  std::vector<int> pushoff_crossing(scaffold.crossings.size());
  for (std::size_t x = 0; x < scaffold.crossings.size(); ++x) {
    const Crossing& cr = scaffold.crossings[x];
    pushoff_crossing[x] = arr.add_crossing(cr.first + n, seam_index(cr.second), cr.sign);
  }
  for (int c = 0; c < n; ++c) {
    arr.curves[at(c)].crossings = scaffold.curves[at(c)].crossings;
    for (int x : scaffold.curves[at(c)].crossings) {
      arr.curves[at(c + n)].crossings.push_back(pushoff_crossing[at(x)]);
    }
  }
  for (std::size_t s = static_cast<std::size_t>(n); s < scaffold.curves.size(); ++s) {
    auto& t = arr.curves[at(seam_index(static_cast<int>(s)))].crossings;
    for (int x : scaffold.curves[s].crossings) {
      // a seam entering the Plus side meets the cuff first, then its pushoff
      if (scaffold.crossings[at(x)].sign > 0) {
        t.push_back(x);
        t.push_back(pushoff_crossing[at(x)]);
      } else {
        t.push_back(pushoff_crossing[at(x)]);
        t.push_back(x);
      }
    }
  }
  const int power = even_parity ? 2 : 1;
  for (int s : seams) arr = twist_arrangement(arr, s, power);
  const CurvePairComplex c = build_complex(pd, restrict_families(arr, true, true, false));
  if (!c.cellular) throw std::logic_error("seed diagram is not cellular");
  const CurvePairComplex reduced = reduce_bigons(c);
  if (!reduced.cellular) throw std::logic_error("seed diagram reduces to non-cellular data");
  return build_normal_diagram(pd, reduced.arr);
}

NormalDiagram random_diagram(int genus, int twist_budget, std::uint64_t seed,
                             const GeneratorOptions& opts) {
  NormalDiagram nd = seed_diagram(genus, opts.even_parity);
  Rng rng(seed);
  CurvePairComplex cur = build_complex(nd);
  for (int t = 0; t < twist_budget; ++t) {
    const bool last = t + 1 == twist_budget;
    bool done = false;
    for (int attempt = 0; attempt < 1000 && !done; ++attempt) {
      const auto cycle = random_dual_cycle(cur.map, rng, opts.max_alpha_length);
      if (!cycle) continue;
      Arrangement arr = add_dual_curve(cur.arr, cur.map, *cycle, "alpha");
      const int alpha = static_cast<int>(arr.curves.size()) - 1;
      int power = rng.coin() ? 1 : -1;
      if (opts.even_parity) {
        const std::vector<int> counts = crossing_counts(arr, alpha);
        for (std::size_t k = 0; k < arr.curves.size(); ++k) {
          if (arr.curves[k].family == Family::Q && counts[k] % 2 != 0) {
            power *= 2;
            break;
          }
        }
      }
      arr = remove_curve(twist_arrangement(arr, alpha, power), alpha);
      CurvePairComplex next = build_complex(nd.pd, std::move(arr));
      if (!next.cellular) continue;
      if (!last) {
        next = reduce_bigons(next);
        if (!next.cellular) continue;
      }
      cur = std::move(next);
      done = true;
    }
    if (!done) throw std::logic_error("generator could not find an admissible twist curve");
  }
  return build_normal_diagram(nd.pd, cur.arr);
}

std::optional<TightConstruction> construct_tight_diagram(int genus, std::uint64_t first,
                                                         std::uint64_t count) {
  const NormalDiagram seed = seed_diagram(genus, true);
  for (std::uint64_t s = first; s < first + count; ++s) {
    Rng rng(s);
    AlphaOptions opts;
    opts.cross_every_cuff = true;
    opts.max_length = 4 + static_cast<int>(s % 20);
    opts.attempts = 200;
    const auto with = sample_alpha(seed, rng, opts);
    if (!with) continue;
    for (int power : {2, -2}) {
      const CurvePairComplex r = reduce_bigons(build_complex(dehn_twist(*with, TwistSpec{"alpha", power})));
      if (!r.cellular) continue;
      if (!rectangle_condition(r, derive_dual_pants(r)).holds) continue;
      return TightConstruction{*with, power, s, to_normal_diagram(r)};
    }
  }
  return std::nullopt;
}

}  // namespace heegaard
