#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace heegaard {

/// Side of an oriented cuff. Plus is the left-hand side with respect to the
/// cuff orientation and the fixed orientation of the surface.
enum class Side : std::int8_t { Minus = -1, Plus = 1 };

inline Side opposite(Side s) { return s == Side::Plus ? Side::Minus : Side::Plus; }
inline int to_int(Side s) { return static_cast<int>(s); }
inline Side side_from_int(int v) { return v > 0 ? Side::Plus : Side::Minus; }
inline char side_char(Side s) { return s == Side::Plus ? '+' : '-'; }

/// Positional boundary circle of a pair of pants.
enum class SlotLabel : std::uint8_t { A = 0, B = 1, C = 2 };

inline char label_char(SlotLabel l) { return static_cast<char>('a' + static_cast<int>(l)); }

/// One boundary circle of one pants, together with the cuff side glued to it.
struct CuffSlot {
  int pants = 0;
  SlotLabel label = SlotLabel::A;
  int cuff = 0;
  Side side = Side::Plus;

  bool operator==(const CuffSlot&) const = default;
};

/// Raw gluing row; indices are 0-based.
using SlotGluing = CuffSlot;

struct ValidationReport {
  std::vector<std::string> problems;

  bool ok() const { return problems.empty(); }
  std::string to_string() const;
};

/// Pants decomposition of a closed orientable genus-g surface: 3g-3 cuffs and
/// 2g-2 pants, each pants owning three slots, each cuff side glued to exactly one
/// slot. Immutable once built.
class PantsDecomposition {
 public:
  int genus() const { return genus_; }
  int cuff_count() const { return 3 * genus_ - 3; }
  int pants_count() const { return 2 * genus_ - 2; }

  const CuffSlot& slot(int pants, SlotLabel label) const {
    return slots_[static_cast<std::size_t>(3 * pants + static_cast<int>(label))];
  }
  const CuffSlot& slot_of(int cuff, Side side) const {
    return slots_[static_cast<std::size_t>(by_cuff_side_[index(cuff, side)])];
  }
  int pants_of(int cuff, Side side) const { return slot_of(cuff, side).pants; }

  /// All slots, three per pants, ordered by (pants, label).
  std::span<const CuffSlot> slots() const { return slots_; }
  const std::string& pants_name(int pants) const {
    return names_[static_cast<std::size_t>(pants)];
  }
  const std::vector<std::string>& pants_names() const { return names_; }
  int find_pants(const std::string& name) const;

  /// True when some pants carries slots on both cuffs.
  bool cuffs_share_pants(int cuff_a, int cuff_b) const;

  bool operator==(const PantsDecomposition&) const = default;

 private:
  friend PantsDecomposition build_pants_decomposition(int, std::span<const SlotGluing>,
                                                      std::vector<std::string>);
  static std::size_t index(int cuff, Side side) {
    return static_cast<std::size_t>(2 * cuff + (side == Side::Plus ? 0 : 1));
  }

  int genus_ = 0;
  std::vector<CuffSlot> slots_;
  std::vector<int> by_cuff_side_;
  std::vector<std::string> names_;
};

/// Every violated invariant of a raw gluing table. Empty report iff the table
/// describes a connected closed surface of the given genus.
ValidationReport validate_decomposition(int genus, std::span<const SlotGluing> gluing);
ValidationReport validate_decomposition(const PantsDecomposition& pd);

/// Throws InvalidInput listing every problem found by validate_decomposition.
/// Pants names default to P1, P2, ...
PantsDecomposition build_pants_decomposition(int genus, std::span<const SlotGluing> gluing,
                                             std::vector<std::string> pants_names = {});

/// Euler characteristic of the glued surface, obtained by tracing the faces of
/// the seam scaffold (two hexagons per pants).
int traced_euler_characteristic(const PantsDecomposition& pd);

/// Builtin decompositions used by fixtures and the generator: theta graph for
/// genus 2, the tetrahedral gluing for genus 3, a necklace for higher genus.
PantsDecomposition standard_decomposition(int genus);

}  // namespace heegaard
