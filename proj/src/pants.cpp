#include "heegaard/pants.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "heegaard/arrangement.hpp"
#include "heegaard/error.hpp"

namespace heegaard {

std::string ValidationReport::to_string() const {
  std::ostringstream out;
  for (std::size_t k = 0; k < problems.size(); ++k) {
    if (k) out << "; ";
    out << problems[k];
  }
  return out.str();
}

int PantsDecomposition::find_pants(const std::string& name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

bool PantsDecomposition::cuffs_share_pants(int cuff_a, int cuff_b) const {
  for (Side sa : {Side::Plus, Side::Minus}) {
    for (Side sb : {Side::Plus, Side::Minus}) {
      if (pants_of(cuff_a, sa) == pants_of(cuff_b, sb)) return true;
    }
  }
  return false;
}

namespace {

std::string cuff_side_name(int cuff, Side side) {
  return "cuff " + std::to_string(cuff + 1) + " side " + side_char(side);
}

int find_root(std::vector<int>& parent, int v) {
  while (parent[static_cast<std::size_t>(v)] != v) {
    parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    v = parent[static_cast<std::size_t>(v)];
  }
  return v;
}

// Structural checks only; the Euler characteristic check needs a built value.
std::vector<std::string> structural_problems(int genus, std::span<const SlotGluing> gluing) {
  std::vector<std::string> problems;
  if (genus < 2) {
    problems.push_back("genus must be at least 2, got " + std::to_string(genus));
    return problems;
  }
  const int n_cuffs = 3 * genus - 3;
  const int n_pants = 2 * genus - 2;
  const auto expected = static_cast<std::size_t>(3 * n_pants);
  if (gluing.size() != expected) {
    problems.push_back("wrong counts: expected " + std::to_string(expected) + " slots for genus " +
                       std::to_string(genus) + ", got " + std::to_string(gluing.size()));
  }

  std::vector<int> slot_use(static_cast<std::size_t>(3 * n_pants), 0);
  std::vector<int> side_use(static_cast<std::size_t>(2 * n_cuffs), 0);
  std::vector<int> parent(static_cast<std::size_t>(n_pants));
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<int> first_pants_of_cuff(static_cast<std::size_t>(n_cuffs), -1);

  for (const SlotGluing& g : gluing) {
    bool in_range = true;
    if (g.pants < 0 || g.pants >= n_pants) {
      problems.push_back("pants index " + std::to_string(g.pants + 1) + " out of range");
      in_range = false;
    }
    if (g.cuff < 0 || g.cuff >= n_cuffs) {
      problems.push_back("cuff " + std::to_string(g.cuff + 1) + " out of range 1.." +
                         std::to_string(n_cuffs));
      in_range = false;
    }
    if (static_cast<int>(g.label) > 2) {
      problems.push_back("slot label out of range");
      in_range = false;
    }
    if (!in_range) continue;
    const std::size_t slot = static_cast<std::size_t>(3 * g.pants + static_cast<int>(g.label));
    if (slot_use[slot]++ == 1) {
      problems.push_back("pants " + std::to_string(g.pants + 1) + " slot " + label_char(g.label) +
                         " assigned twice");
    }
    const std::size_t side = static_cast<std::size_t>(2 * g.cuff + (g.side == Side::Plus ? 0 : 1));
    if (side_use[side]++ == 1) {
      problems.push_back("duplicate (cuff, side): " + cuff_side_name(g.cuff, g.side));
    }
    int& first = first_pants_of_cuff[static_cast<std::size_t>(g.cuff)];
    if (first < 0) {
      first = g.pants;
    } else {
      parent[static_cast<std::size_t>(find_root(parent, first))] = find_root(parent, g.pants);
    }
  }
  for (int p = 0; p < n_pants; ++p) {
    for (int l = 0; l < 3; ++l) {
      if (slot_use[static_cast<std::size_t>(3 * p + l)] == 0) {
        problems.push_back("pants " + std::to_string(p + 1) + " slot " +
                           label_char(static_cast<SlotLabel>(l)) + " unused");
      }
    }
  }
  for (int c = 0; c < n_cuffs; ++c) {
    for (Side s : {Side::Plus, Side::Minus}) {
      if (side_use[static_cast<std::size_t>(2 * c + (s == Side::Plus ? 0 : 1))] == 0) {
        problems.push_back(cuff_side_name(c, s) + " unused");
      }
    }
  }
  if (n_pants > 0) {
    const int root = find_root(parent, 0);
    for (int p = 1; p < n_pants; ++p) {
      if (find_root(parent, p) != root) {
        problems.push_back("disconnected: pants " + std::to_string(p + 1) +
                           " is not joined to pants 1");
        break;
      }
    }
  }
  return problems;
}

}  // namespace

PantsDecomposition build_pants_decomposition(int genus, std::span<const SlotGluing> gluing,
                                             std::vector<std::string> pants_names) {
  ValidationReport report;
  report.problems = structural_problems(genus, gluing);
  if (!report.ok()) throw InvalidInput("invalid pants decomposition: " + report.to_string());
  if (!pants_names.empty() && pants_names.size() != static_cast<std::size_t>(2 * genus - 2)) {
    throw InvalidInput("expected " + std::to_string(2 * genus - 2) + " pants names");
  }
  if (pants_names.empty()) {
    for (int p = 0; p < 2 * genus - 2; ++p) pants_names.push_back("P" + std::to_string(p + 1));
  }
  PantsDecomposition pd;
  pd.genus_ = genus;
  pd.slots_.assign(gluing.begin(), gluing.end());
  std::sort(pd.slots_.begin(), pd.slots_.end(), [](const CuffSlot& x, const CuffSlot& y) {
    return std::pair(x.pants, x.label) < std::pair(y.pants, y.label);
  });
  pd.by_cuff_side_.assign(static_cast<std::size_t>(2 * pd.cuff_count()), -1);
  for (std::size_t k = 0; k < pd.slots_.size(); ++k) {
    pd.by_cuff_side_[PantsDecomposition::index(pd.slots_[k].cuff, pd.slots_[k].side)] =
        static_cast<int>(k);
  }
  pd.names_ = std::move(pants_names);
  report = validate_decomposition(pd);
  if (!report.ok()) throw InvalidInput("invalid pants decomposition: " + report.to_string());
  return pd;
}

ValidationReport validate_decomposition(int genus, std::span<const SlotGluing> gluing) {
  ValidationReport report;
  report.problems = structural_problems(genus, gluing);
  if (!report.ok()) return report;
  try {
    build_pants_decomposition(genus, gluing);
  } catch (const InvalidInput& e) {
    report.problems.emplace_back(e.what());
  }
  return report;
}

ValidationReport validate_decomposition(const PantsDecomposition& pd) {
  ValidationReport report;
  report.problems = structural_problems(pd.genus(), pd.slots());
  if (report.ok()) {
    const int chi = traced_euler_characteristic(pd);
    if (chi != 2 - 2 * pd.genus()) {
      report.problems.push_back("traced Euler characteristic " + std::to_string(chi) +
                                " differs from 2-2g = " + std::to_string(2 - 2 * pd.genus()));
    }
  }
  return report;
}

int traced_euler_characteristic(const PantsDecomposition& pd) {
  return trace_map(seam_scaffold(pd)).euler_characteristic();
}

PantsDecomposition standard_decomposition(int genus) {
  if (genus < 2) throw InvalidInput("genus must be at least 2");
  std::vector<SlotGluing> rows;
  auto add = [&](int pants, int label, int cuff, Side side) {
    rows.push_back(SlotGluing{pants, static_cast<SlotLabel>(label), cuff, side});
  };
  if (genus == 2) {
    for (int c = 0; c < 3; ++c) {
      add(0, c, c, Side::Plus);
      add(1, c, c, Side::Minus);
    }
  } else if (genus == 3) {
    const int table[4][3] = {{0, 1, 4}, {0, 3, 5}, {1, 2, 5}, {2, 3, 4}};
    std::vector<bool> plus_used(6, false);
    for (int p = 0; p < 4; ++p) {
      for (int l = 0; l < 3; ++l) {
        const int c = table[p][l];
        add(p, l, c, plus_used[static_cast<std::size_t>(c)] ? Side::Minus : Side::Plus);
        plus_used[static_cast<std::size_t>(c)] = true;
      }
    }
  } else {
    const int m = 2 * genus - 2;
    for (int i = 0; i < m; ++i) {
      add(i, 0, i, Side::Plus);
      add((i + 1) % m, 1, i, Side::Minus);
    }
    for (int k = 0; k < m / 2; ++k) {
      add(k, 2, m + k, Side::Plus);
      add(k + m / 2, 2, m + k, Side::Minus);
    }
  }
  std::vector<std::string> names;
  const int n_pants = 2 * genus - 2;
  for (int p = 0; p < n_pants; ++p) {
    names.push_back(n_pants <= 26 ? std::string(1, static_cast<char>('A' + p))
                                  : "P" + std::to_string(p + 1));
  }
  return build_pants_decomposition(genus, rows, std::move(names));
}

}  // namespace heegaard
