#include "heegaard/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "heegaard/error.hpp"

namespace heegaard {

namespace {

std::string default_name(int j) { return "E" + std::to_string(j + 1); }

std::size_t at(int v) { return static_cast<std::size_t>(v); }

}  // namespace

std::vector<int> SequenceDiagram::disjoint_curves() const {
  std::vector<int> out;
  for (int j = 0; j < curve_count(); ++j) {
    if (words[at(j)].empty()) out.push_back(j);
  }
  return out;
}

SequenceDiagram build_sequence_diagram(const PantsDecomposition& pd,
                                       std::vector<std::vector<int>> words,
                                       std::vector<std::string> names) {
  if (names.empty()) {
    for (std::size_t j = 0; j < words.size(); ++j) names.push_back(default_name(static_cast<int>(j)));
  }
  if (names.size() != words.size()) throw InvalidInput("one name per word required");
  std::vector<std::string> problems;
  for (std::size_t j = 0; j < words.size(); ++j) {
    const auto& w = words[j];
    bool letters_ok = true;
    for (int c : w) {
      if (c < 0 || c >= pd.cuff_count()) {
        problems.push_back("curve " + names[j] + ": unknown cuff " + std::to_string(c + 1));
        letters_ok = false;
      }
    }
    if (!letters_ok) continue;
    for (std::size_t k = 0; k < w.size(); ++k) {
      const int a = w[k];
      const int b = w[(k + 1) % w.size()];
      if (!pd.cuffs_share_pants(a, b)) {
        problems.push_back("curve " + names[j] + ": cuffs " + std::to_string(a + 1) + " and " +
                           std::to_string(b + 1) + " share no pants");
      }
    }
  }
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second) problems.push_back("duplicate curve name " + n);
  }
  if (!problems.empty()) {
    std::ostringstream msg;
    for (std::size_t k = 0; k < problems.size(); ++k) msg << (k ? "; " : "") << problems[k];
    throw InvalidInput(msg.str());
  }
  return SequenceDiagram{pd, std::move(names), std::move(words)};
}

std::vector<int> NormalDiagram::q_curves() const {
  std::vector<int> out;
  for (std::size_t c = 0; c < arr.curves.size(); ++c) {
    if (arr.curves[c].family == Family::Q) out.push_back(static_cast<int>(c));
  }
  return out;
}

std::vector<int> NormalDiagram::aux_curves() const {
  std::vector<int> out;
  for (std::size_t c = 0; c < arr.curves.size(); ++c) {
    if (arr.curves[c].family == Family::Aux) out.push_back(static_cast<int>(c));
  }
  return out;
}

int NormalDiagram::find_curve(const std::string& name) const {
  for (std::size_t c = 0; c < arr.curves.size(); ++c) {
    if (arr.curves[c].name == name) return static_cast<int>(c);
  }
  return -1;
}

namespace {

int cuff_of(const Arrangement& arr, int crossing) {
  const Crossing& x = arr.crossings[at(crossing)];
  return arr.curves[at(x.first)].family == Family::P ? x.first : x.second;
}

bool touches_p(const Arrangement& arr, int crossing) {
  const Crossing& x = arr.crossings[at(crossing)];
  return arr.curves[at(x.first)].family == Family::P || arr.curves[at(x.second)].family == Family::P;
}

// Planarity of the chord system of the E-curves inside every pants. Tokens are
// (crossing, side) pairs; each pants gets a ribbon graph made of its three
// boundary circles and the chords, which must have genus 0 per component.
void check_chord_planarity(const PantsDecomposition& pd, const Arrangement& arr,
                           std::vector<std::string>& problems) {
  const int n_pants = pd.pants_count();
  auto token = [](int crossing, Side s) { return 2 * crossing + (s == Side::Plus ? 0 : 1); };
  const std::size_t n_tokens = 2 * arr.crossings.size();
  std::vector<int> chord_partner(n_tokens, -1);
  std::vector<int> slot_next(n_tokens, -1);  // along the slot in boundary orientation
  std::vector<int> pants_of_token(n_tokens, -1);

  auto is_pq = [&](int x) {
    const Crossing& cr = arr.crossings[at(x)];
    const Family a = arr.curves[at(cr.first)].family;
    const Family b = arr.curves[at(cr.second)].family;
    return (a == Family::P && b == Family::Q) || (a == Family::Q && b == Family::P);
  };

  for (int c = 0; c < pd.cuff_count(); ++c) {
    std::vector<int> on_cuff;
    for (int x : arr.curves[at(c)].crossings) {
      if (is_pq(x)) on_cuff.push_back(x);
    }
    if (on_cuff.empty()) continue;
    for (Side s : {Side::Plus, Side::Minus}) {
      std::vector<int> order = on_cuff;
      if (s == Side::Minus) std::reverse(order.begin(), order.end());
      for (std::size_t k = 0; k < order.size(); ++k) {
        const int t = token(order[k], s);
        slot_next[at(t)] = token(order[(k + 1) % order.size()], s);
        pants_of_token[at(t)] = pd.pants_of(c, s);
      }
    }
  }
  for (std::size_t q = 0; q < arr.curves.size(); ++q) {
    if (arr.curves[q].family != Family::Q) continue;
    std::vector<int> pts;
    for (int x : arr.curves[q].crossings) {
      if (is_pq(x)) pts.push_back(x);
    }
    for (std::size_t k = 0; k < pts.size(); ++k) {
      const int x = pts[k];
      const int y = pts[(k + 1) % pts.size()];
      const int tx = token(x, entering_side(arr, x, static_cast<int>(q)));
      const int ty = token(y, opposite(entering_side(arr, y, static_cast<int>(q))));
      chord_partner[at(tx)] = ty;
      chord_partner[at(ty)] = tx;
    }
  }

  // half-edge 3t+0 forward along the slot, 3t+1 chord, 3t+2 backward;
  // counter-clockwise order forward, chord, backward
  const std::size_t n_half = 3 * n_tokens;
  std::vector<int> twin(n_half, -1);
  for (std::size_t t = 0; t < n_tokens; ++t) {
    if (slot_next[t] < 0) continue;
    twin[3 * t + 0] = 3 * slot_next[t] + 2;
    twin[at(3 * slot_next[t] + 2)] = static_cast<int>(3 * t + 0);
    twin[3 * t + 1] = 3 * chord_partner[t] + 1;
  }
  auto rot_prev = [](int h) { return 3 * (h / 3) + (h % 3 + 2) % 3; };

  std::vector<int> parent(n_tokens);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int v) {
    while (parent[at(v)] != v) v = parent[at(v)] = parent[at(parent[at(v)])];
    return v;
  };
  for (std::size_t t = 0; t < n_tokens; ++t) {
    if (slot_next[t] < 0) continue;
    parent[at(root(static_cast<int>(t)))] = root(slot_next[t]);
    parent[at(root(static_cast<int>(t)))] = root(chord_partner[t]);
  }
  std::vector<int> vertices(n_tokens, 0), faces(n_tokens, 0);
  std::vector<bool> seen(n_half, false);
  for (std::size_t t = 0; t < n_tokens; ++t) {
    if (slot_next[t] < 0) continue;
    ++vertices[at(root(static_cast<int>(t)))];
  }
  for (std::size_t h = 0; h < n_half; ++h) {
    if (twin[h] < 0 || seen[h]) continue;
    int cur = static_cast<int>(h);
    do {
      seen[at(cur)] = true;
      cur = rot_prev(twin[at(cur)]);
    } while (cur != static_cast<int>(h));
    ++faces[at(root(static_cast<int>(h / 3)))];
  }
  std::vector<bool> reported(static_cast<std::size_t>(n_pants), false);
  for (std::size_t t = 0; t < n_tokens; ++t) {
    if (slot_next[t] < 0 || root(static_cast<int>(t)) != static_cast<int>(t)) continue;
    const int v = vertices[t];
    const int e = 3 * v / 2;
    if (v - e + faces[t] != 2) {
      const int p = pants_of_token[t];
      if (!reported[at(p)]) {
        reported[at(p)] = true;
        problems.push_back("crossing chords inside pants " + pd.pants_name(p) +
                           " (arcs cannot be embedded disjointly)");
      }
    }
  }
}

}  // namespace

std::vector<std::string> normal_diagram_problems(const PantsDecomposition& pd,
                                                 const Arrangement& arr) {
  std::vector<std::string> problems;
  const int n = pd.cuff_count();
  if (static_cast<int>(arr.curves.size()) < n) {
    problems.push_back("expected " + std::to_string(n) + " cuff curves");
    return problems;
  }
  std::set<std::string> names;
  Family last = Family::P;
  for (std::size_t c = 0; c < arr.curves.size(); ++c) {
    const CurveTrack& t = arr.curves[c];
    if (static_cast<int>(c) < n) {
      if (t.family != Family::P || t.name != std::to_string(c + 1)) {
        problems.push_back("curve " + std::to_string(c) + " must be cuff " + std::to_string(c + 1));
      }
    } else if (t.family == Family::P) {
      problems.push_back("curve " + t.name + ": more cuffs than 3g-3");
    }
    if (t.family < last) problems.push_back("curve " + t.name + " out of family order");
    last = std::max(last, t.family);
    if (t.name.empty()) problems.push_back("curve " + std::to_string(c) + " has no name");
    if (!names.insert(t.name).second) problems.push_back("duplicate curve name " + t.name);
  }
  if (!problems.empty()) return problems;
  for (auto& p : check_arrangement(arr)) problems.push_back(std::move(p));
  if (!problems.empty()) return problems;

  for (std::size_t x = 0; x < arr.crossings.size(); ++x) {
    const Crossing& cr = arr.crossings[x];
    const Family a = arr.curves[at(cr.first)].family;
    const Family b = arr.curves[at(cr.second)].family;
    if (a == b && a != Family::Aux) {
      problems.push_back("curves " + arr.curves[at(cr.first)].name + " and " +
                         arr.curves[at(cr.second)].name + " belong to one family but cross");
    }
  }
  if (!problems.empty()) return problems;

  for (std::size_t c = static_cast<std::size_t>(n); c < arr.curves.size(); ++c) {
    std::vector<int> pts;
    for (int x : arr.curves[c].crossings) {
      if (touches_p(arr, x)) pts.push_back(x);
    }
    for (std::size_t k = 0; k < pts.size(); ++k) {
      const int x = pts[k];
      const int y = pts[(k + 1) % pts.size()];
      const int cx = cuff_of(arr, x);
      const int cy = cuff_of(arr, y);
      const int after = pd.pants_of(cx, entering_side(arr, x, static_cast<int>(c)));
      const int before = pd.pants_of(cy, opposite(entering_side(arr, y, static_cast<int>(c))));
      if (after != before) {
        problems.push_back("curve " + arr.curves[c].name + ": arc from cuff " +
                           std::to_string(cx + 1) + " enters pants " + pd.pants_name(after) +
                           " but reaches cuff " + std::to_string(cy + 1) + " from pants " +
                           pd.pants_name(before));
      }
    }
  }
  if (!problems.empty()) return problems;
  check_chord_planarity(pd, arr, problems);
  return problems;
}

NormalDiagram build_normal_diagram(const PantsDecomposition& pd, Arrangement arr) {
  const auto problems = normal_diagram_problems(pd, arr);
  if (!problems.empty()) {
    std::ostringstream msg;
    for (std::size_t k = 0; k < problems.size(); ++k) msg << (k ? "; " : "") << problems[k];
    throw InvalidInput(msg.str());
  }
  return NormalDiagram{pd, std::move(arr)};
}

NormalDiagram build_normal_diagram(const PantsDecomposition& pd,
                                   const std::vector<std::vector<StrandToken>>& strands,
                                   const std::vector<std::vector<OrderToken>>& cuff_orders,
                                   std::vector<std::string> names) {
  const int n = pd.cuff_count();
  if (names.empty()) {
    for (std::size_t j = 0; j < strands.size(); ++j) names.push_back(default_name(static_cast<int>(j)));
  }
  if (names.size() != strands.size()) throw InvalidInput("one name per strand required");
  if (static_cast<int>(cuff_orders.size()) != n) {
    throw InvalidInput("expected one cuff order per cuff (" + std::to_string(n) + ")");
  }
  Arrangement arr;
  for (int c = 0; c < n; ++c) arr.add_curve(std::to_string(c + 1), Family::P);
  std::vector<std::vector<int>> ids(strands.size());
  for (std::size_t j = 0; j < strands.size(); ++j) {
    const int q = arr.add_curve(names[j], Family::Q);
    for (const StrandToken& t : strands[j]) {
      if (t.cuff < 0 || t.cuff >= n) {
        throw InvalidInput("strand " + names[j] + ": unknown cuff " + std::to_string(t.cuff + 1));
      }
      if (t.handedness != 1 && t.handedness != -1) {
        throw InvalidInput("strand " + names[j] + ": handedness must be +1 or -1");
      }
      const int x = arr.add_crossing(t.cuff, q, t.handedness);
      ids[j].push_back(x);
      arr.curves[at(q)].crossings.push_back(x);
    }
  }
  for (int c = 0; c < n; ++c) {
    for (const OrderToken& o : cuff_orders[at(c)]) {
      if (o.strand < 0 || o.strand >= static_cast<int>(strands.size()) || o.index < 0 ||
          o.index >= static_cast<int>(ids[at(o.strand)].size())) {
        throw InvalidInput("cuff " + std::to_string(c + 1) + ": token reference out of range");
      }
      const int x = ids[at(o.strand)][at(o.index)];
      if (arr.crossings[at(x)].first != c) {
        throw InvalidInput("token mismatch: cuff " + std::to_string(c + 1) + " lists a crossing of " +
                           names[at(o.strand)] + " with cuff " +
                           std::to_string(arr.crossings[at(x)].first + 1));
      }
      arr.curves[at(c)].crossings.push_back(x);
    }
  }
  return build_normal_diagram(pd, std::move(arr));
}

std::vector<StrandToken> strand_tokens(const NormalDiagram& nd, int curve) {
  std::vector<StrandToken> out;
  for (int x : nd.arr.curves[at(curve)].crossings) {
    if (!touches_p(nd.arr, x)) continue;
    out.push_back(StrandToken{cuff_of(nd.arr, x), to_int(entering_side(nd.arr, x, curve))});
  }
  return out;
}

std::vector<OrderToken> cuff_order(const NormalDiagram& nd, int cuff) {
  const std::vector<int> qs = nd.q_curves();
  std::vector<int> q_index(nd.arr.curves.size(), -1);
  for (std::size_t k = 0; k < qs.size(); ++k) q_index[at(qs[k])] = static_cast<int>(k);
  // position of every P-crossing among its strand's tokens
  std::vector<int> token_index(nd.arr.crossings.size(), -1);
  for (int q : qs) {
    int k = 0;
    for (int x : nd.arr.curves[at(q)].crossings) {
      if (touches_p(nd.arr, x)) token_index[at(x)] = k++;
    }
  }
  std::vector<OrderToken> out;
  for (int x : nd.arr.curves[at(cuff)].crossings) {
    const int other = nd.arr.other(x, cuff);
    if (nd.arr.curves[at(other)].family != Family::Q) continue;
    out.push_back(OrderToken{q_index[at(other)], token_index[at(x)]});
  }
  return out;
}

SequenceDiagram project_to_sequence(const NormalDiagram& nd) {
  SequenceDiagram seq{nd.pd, {}, {}};
  for (int q : nd.q_curves()) {
    seq.names.push_back(nd.arr.curves[at(q)].name);
    std::vector<int> word;
    for (const StrandToken& t : strand_tokens(nd, q)) word.push_back(t.cuff);
    seq.words.push_back(std::move(word));
  }
  return seq;
}

std::vector<long long> IntersectionMatrix::column(int j) const {
  std::vector<long long> out;
  for (int i = 0; i < rows; ++i) out.push_back(at(i, j));
  return out;
}

IntersectionMatrix intersection_matrix(const SequenceDiagram& d) {
  IntersectionMatrix m;
  m.rows = d.pd.cuff_count();
  m.cols = d.curve_count();
  m.entries.assign(static_cast<std::size_t>(m.rows * m.cols), 0);
  for (int j = 0; j < m.cols; ++j) {
    for (int c : d.words[at(j)]) ++m.at(c, j);
  }
  return m;
}

IntersectionMatrix intersection_matrix(const NormalDiagram& d) {
  const std::vector<int> qs = d.q_curves();
  IntersectionMatrix m;
  m.rows = d.pd.cuff_count();
  m.cols = static_cast<int>(qs.size());
  m.entries.assign(static_cast<std::size_t>(m.rows * m.cols), 0);
  for (int j = 0; j < m.cols; ++j) {
    for (int x : d.arr.curves[at(qs[at(j)])].crossings) {
      if (touches_p(d.arr, x)) ++m.at(cuff_of(d.arr, x), j);
    }
  }
  return m;
}

std::vector<int> crossing_counts(const Arrangement& arr, int curve) {
  std::vector<int> out(arr.curves.size(), 0);
  for (int x : arr.curves[at(curve)].crossings) ++out[at(arr.other(x, curve))];
  return out;
}

}  // namespace heegaard
