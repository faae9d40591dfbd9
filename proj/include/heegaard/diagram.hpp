#pragma once

#include <string>
#include <vector>

#include "heegaard/arrangement.hpp"
#include "heegaard/pants.hpp"

namespace heegaard {

/// Level-1 diagram: every E-curve as the cyclic word of base cuffs it crosses.
struct SequenceDiagram {
  PantsDecomposition pd;
  std::vector<std::string> names;
  std::vector<std::vector<int>> words;  // 0-based cuff ids

  int curve_count() const { return static_cast<int>(words.size()); }
  /// Curves whose word is empty (disjoint from every cuff).
  std::vector<int> disjoint_curves() const;

  bool operator==(const SequenceDiagram&) const = default;
};

/// Builds and checks a level-1 diagram: letters must be valid cuffs and
/// cyclically consecutive letters must bound a common pants.
SequenceDiagram build_sequence_diagram(const PantsDecomposition& pd,
                                       std::vector<std::vector<int>> words,
                                       std::vector<std::string> names = {});

/// Level-2 diagram. The arrangement holds the cuffs as curves 0..3g-4 (family
/// P, named "1".."3g-3"), then the E-curves (family Q), then auxiliary curves.
struct NormalDiagram {
  PantsDecomposition pd;
  Arrangement arr;

  int cuff_count() const { return pd.cuff_count(); }
  std::vector<int> q_curves() const;
  std::vector<int> aux_curves() const;
  /// Index of the curve with this name, or -1.
  int find_curve(const std::string& name) const;

  bool operator==(const NormalDiagram&) const = default;
};

/// One crossing of an E-curve with a cuff. handedness = +1 when the strand
/// passes from the cuff's right to its left (into the Plus side).
struct StrandToken {
  int cuff = 0;
  int handedness = 1;
};

/// Reference to the k-th token (0-based) of strand `strand`.
struct OrderToken {
  int strand = 0;
  int index = 0;
};

/// Builds a level-2 diagram from strands (one per E-curve) and the cyclic
/// order of tokens on every cuff. Throws InvalidInput on inconsistent data.
NormalDiagram build_normal_diagram(const PantsDecomposition& pd,
                                   const std::vector<std::vector<StrandToken>>& strands,
                                   const std::vector<std::vector<OrderToken>>& cuff_orders,
                                   std::vector<std::string> names = {});

/// Checks a ready-made arrangement (possibly with auxiliary curves) against the
/// decomposition and returns it as a diagram. Throws InvalidInput.
NormalDiagram build_normal_diagram(const PantsDecomposition& pd, Arrangement arr);

/// Every problem found in a level-2 arrangement: curve layout, token
/// consistency, forbidden same-family crossings, pants consistency of arcs and
/// planarity of the chord system inside every pants.
std::vector<std::string> normal_diagram_problems(const PantsDecomposition& pd,
                                                 const Arrangement& arr);

/// Strand of an E-curve as cuff tokens (crossings with auxiliary curves skipped).
std::vector<StrandToken> strand_tokens(const NormalDiagram& nd, int curve);

/// Cyclic order on a cuff of its crossings with E-curves.
std::vector<OrderToken> cuff_order(const NormalDiagram& nd, int cuff);

/// Forgets orders and handedness.
SequenceDiagram project_to_sequence(const NormalDiagram& nd);

/// Rows = base cuffs D_i, columns = E-curves E_j; entry = |D_i ∩ E_j| as
/// recorded by the data. `reduced` is set only for bigon-free cellular data.
struct IntersectionMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<long long> entries;
  bool reduced = false;

  long long at(int i, int j) const {
    return entries[static_cast<std::size_t>(i * cols + j)];
  }
  long long& at(int i, int j) { return entries[static_cast<std::size_t>(i * cols + j)]; }
  std::vector<long long> column(int j) const;
  bool same_counts(const IntersectionMatrix& other) const {
    return rows == other.rows && cols == other.cols && entries == other.entries;
  }
};

IntersectionMatrix intersection_matrix(const SequenceDiagram& d);
IntersectionMatrix intersection_matrix(const NormalDiagram& d);

/// Number of crossings of `curve` with every curve of the arrangement.
std::vector<int> crossing_counts(const Arrangement& arr, int curve);

}  // namespace heegaard
