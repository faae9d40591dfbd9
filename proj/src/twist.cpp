#include "heegaard/twist.hpp"

#include <algorithm>
#include <cstdlib>

#include "heegaard/error.hpp"

namespace heegaard {

namespace {

std::size_t at(int v) { return static_cast<std::size_t>(v); }

struct PendingCrossing {
  long long depth;  // |x - k|, proportional to the annulus height of the crossing
  int id;
};

}  // namespace

// Annulus model: α × [-1, 1] with t > 0 on α's Plus side and α's crossings at
// x = 0..n-1. The twist maps (x, t) to (x + p·n·t, t) for t in [0, 1], so the
// vertical segment of an E-curve at x = k becomes a helix meeting every fixed
// vertical y once per turn, |p| times in all.
Arrangement twist_arrangement(const Arrangement& arr, int alpha, int power) {
  const auto& track = arr.curves[at(alpha)].crossings;
  const int n = static_cast<int>(track.size());
  if (power == 0 || n == 0) return arr;

  Arrangement out = arr;
  std::vector<int> other(at(n));
  std::vector<int> up(at(n));
  std::vector<bool> mobile(at(n));
  for (int k = 0; k < n; ++k) {
    other[at(k)] = arr.other(track[at(k)], alpha);
    up[at(k)] = entering_side(arr, track[at(k)], other[at(k)]) == Side::Plus ? 1 : -1;
    mobile[at(k)] = arr.curves[at(other[at(k)])].family == Family::Q;
  }

  std::vector<std::vector<PendingCrossing>> on_position(at(n));
  const int step = power > 0 ? 1 : -1;
  const long long turns = std::llabs(static_cast<long long>(power)) * n;
  for (int k = 0; k < n; ++k) {
    if (!mobile[at(k)]) continue;
    for (long long s = 1; s < turns; ++s) {
      const long long x = k + step * s;
      const int y = static_cast<int>(((x % n) + n) % n);
      if (mobile[at(y)]) continue;
      const int sign = up[at(y)] * up[at(k)] * power < 0 ? 1 : -1;
      const int id = out.add_crossing(other[at(y)], other[at(k)], sign);
      on_position[at(k)].push_back(PendingCrossing{s, id});
      on_position[at(y)].push_back(PendingCrossing{s, id});
    }
  }

  // Splice the new crossings next to each α-crossing: upward curves meet them
  // after α in increasing height, downward curves before α in decreasing height.
  std::vector<std::vector<std::pair<int, std::vector<int>>>> inserts(arr.curves.size());
  for (int k = 0; k < n; ++k) {
    auto& pending = on_position[at(k)];
    if (pending.empty()) continue;
    std::sort(pending.begin(), pending.end(),
              [](const PendingCrossing& a, const PendingCrossing& b) { return a.depth < b.depth; });
    std::vector<int> ids;
    for (const auto& p : pending) ids.push_back(p.id);
    if (up[at(k)] < 0) std::reverse(ids.begin(), ids.end());
    inserts[at(other[at(k)])].emplace_back(track[at(k)], std::move(ids));
  }
  for (std::size_t c = 0; c < arr.curves.size(); ++c) {
    if (inserts[c].empty()) continue;
    std::vector<int> rebuilt;
    for (int x : arr.curves[c].crossings) {
      const auto it = std::find_if(inserts[c].begin(), inserts[c].end(),
                                   [&](const auto& e) { return e.first == x; });
      if (it == inserts[c].end()) {
        rebuilt.push_back(x);
        continue;
      }
      const int k = static_cast<int>(std::find(track.begin(), track.end(), x) - track.begin());
      if (up[at(k)] > 0) {
        rebuilt.push_back(x);
        rebuilt.insert(rebuilt.end(), it->second.begin(), it->second.end());
      } else {
        rebuilt.insert(rebuilt.end(), it->second.begin(), it->second.end());
        rebuilt.push_back(x);
      }
    }
    out.curves[c].crossings = std::move(rebuilt);
  }
  return out;
}

NormalDiagram dehn_twist(const NormalDiagram& nd, const TwistSpec& spec) {
  const int alpha = nd.find_curve(spec.alpha);
  if (alpha < 0) throw InvalidInput("no curve named " + spec.alpha + " in the diagram");
  if (spec.power == 0) return nd;
  return build_normal_diagram(nd.pd, twist_arrangement(nd.arr, alpha, spec.power));
}

TwistPrediction predicted_parity_after_twist(const IntersectionMatrix& m,
                                             const std::vector<long long>& d_alpha,
                                             const std::vector<long long>& e_alpha) {
  if (static_cast<int>(d_alpha.size()) != m.rows || static_cast<int>(e_alpha.size()) != m.cols) {
    throw InvalidInput("dimension mismatch: matrix is " + std::to_string(m.rows) + "x" +
                       std::to_string(m.cols) + ", vectors have " + std::to_string(d_alpha.size()) +
                       " and " + std::to_string(e_alpha.size()) + " entries");
  }
  TwistPrediction p{m, m};
  p.predicted.reduced = false;
  p.mod2.reduced = false;
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) {
      const long long v = m.at(i, j) + d_alpha[at(i)] * e_alpha[at(j)];
      p.predicted.at(i, j) = v;
      p.mod2.at(i, j) = v % 2;
    }
  }
  return p;
}

AlphaCounts alpha_counts(const NormalDiagram& nd, int alpha) {
  const std::vector<int> counts = crossing_counts(nd.arr, alpha);
  AlphaCounts out;
  for (int c = 0; c < nd.cuff_count(); ++c) out.d_alpha.push_back(counts[at(c)]);
  for (int q : nd.q_curves()) out.e_alpha.push_back(counts[at(q)]);
  return out;
}

SurgeryResult surgery_diagram(const NormalDiagram& nd, const TwistSpec& spec) {
  if (std::abs(spec.power) != 1) throw InvalidInput("1/1-surgery needs power +1 or -1");
  const int alpha = nd.find_curve(spec.alpha);
  if (alpha < 0) throw InvalidInput("no curve named " + spec.alpha + " in the diagram");
  SurgeryResult r{dehn_twist(nd, spec), {}, std::nullopt};
  r.note = "Heegaard diagram of the manifold obtained by 1/1-surgery on " + spec.alpha;
  const bool even_input = parity_check(intersection_matrix(nd));
  const AlphaCounts counts = alpha_counts(nd, alpha);
  const bool even_alpha = std::all_of(counts.e_alpha.begin(), counts.e_alpha.end(),
                                      [](long long v) { return v % 2 == 0; });
  if (even_input && even_alpha) {
    Certificate cert;
    cert.kind = CertificateKind::EvenParity;
    cert.conclusion = Conclusion::NonStabilized;
    cert.evidence = "input has even parity and |alpha ∩ Ej| is even for every j";
    r.certificate = cert;
  }
  return r;
}

}  // namespace heegaard
