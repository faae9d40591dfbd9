#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "heegaard/complex.hpp"
#include "heegaard/diagram.hpp"

namespace heegaard {

enum class CertificateKind { EvenParity, Rectangle };
enum class Conclusion { NonStabilized, Irreducible, StronglyIrreducible };

struct Certificate {
  CertificateKind kind = CertificateKind::EvenParity;
  Conclusion conclusion = Conclusion::NonStabilized;
  std::vector<std::string> assumptions;
  std::string evidence;
};

std::string conclusion_name(Conclusion c);

/// True iff every entry is even.
bool parity_check(const IntersectionMatrix& m);

/// Even parity yields "non-stabilized"; with the user's assurance that the
/// manifold is irreducible it yields "irreducible". No certificate otherwise:
/// the condition is sufficient only.
std::optional<Certificate> certify(const IntersectionMatrix& m, bool manifold_irreducible);

/// One line summarising a certify() outcome.
std::string certificate_text(const std::optional<Certificate>& cert);

/// Index of the slot pair {a,b} -> 0, {b,c} -> 1, {c,a} -> 2.
int slot_pair_index(SlotLabel x, SlotLabel y);
std::string slot_pair_name(int index);

struct TightnessReport {
  int p_pants = 0;
  int q_pants = 0;
  std::optional<int> bigon_witness;
  std::array<std::array<bool, 3>, 3> table{};
  std::array<std::array<int, 3>, 3> witness{};  // face id or -1
  bool tight = false;
};

/// Census key: (base pants, dual pants, sorted base slot labels, sorted dual slot labels).
struct RectangleKey {
  int p_pants = 0;
  int q_pants = 0;
  std::array<SlotLabel, 2> p_slots{};
  std::array<SlotLabel, 2> q_slots{};

  auto tie() const { return std::tie(p_pants, q_pants, p_slots, q_slots); }
  bool operator<(const RectangleKey& o) const { return tie() < o.tie(); }
  bool operator==(const RectangleKey& o) const { return tie() == o.tie(); }
};

using RectangleCensus = std::map<RectangleKey, int>;

/// Every 4-sided face, keyed by the pants and slots its edges lie on.
RectangleCensus rectangle_census(const CurvePairComplex& c, const DualPantsStructure& dual);

TightnessReport tightness_report(const CurvePairComplex& c, const DualPantsStructure& dual,
                                 int p_pants, int q_pants);

/// Tightness table read off a census (used to compare census sources).
std::array<std::array<bool, 3>, 3> table_from_census(const RectangleCensus& census, int p_pants,
                                                     int q_pants);

struct RectangleConditionResult {
  bool holds = false;
  std::vector<TightnessReport> reports;  // all (2g-2)^2 pairs, row-major by base pants
  std::optional<Certificate> certificate;
  std::string note;  // reason when the check could not run on all pairs
};

RectangleConditionResult rectangle_condition(const CurvePairComplex& c,
                                             const DualPantsStructure& dual);

enum class ArcFamily { P, Q };

/// An arc of one family inside a pants of the other family with both ends on
/// the same boundary slot, separating the other two slots.
struct WaveShadow {
  int curve = -1;  // carrier of the arc
  int dart = -1;   // forward dart of the arc's edge
  int pants = -1;  // pants of the opposite family containing it
  SlotLabel slot = SlotLabel::A;
};

std::vector<WaveShadow> detect_returning_arcs(const CurvePairComplex& c, ArcFamily side);

/// True iff all counts are even: a necessary condition for a curve to bound a
/// disk in the handlebody of the base cuffs.
bool disk_parity_obstruction(const std::vector<long long>& candidate_column);

}  // namespace heegaard
