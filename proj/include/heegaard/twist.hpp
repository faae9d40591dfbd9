#pragma once

#include <optional>
#include <string>
#include <vector>

#include "heegaard/conditions.hpp"
#include "heegaard/diagram.hpp"

namespace heegaard {

/// Twist along the named curve of a diagram. Positive powers are right-handed:
/// an E-curve reaching α turns to its right and winds along α.
struct TwistSpec {
  std::string alpha;
  int power = 1;
};

/// Dehn twist of the E-curves along α, acting inside a thin annulus on α's
/// Plus side. Cuffs and the other auxiliary curves stay fixed; α stays in the
/// diagram. The result is validated but not reduced.
NormalDiagram dehn_twist(const NormalDiagram& nd, const TwistSpec& spec);

/// Arrangement-level twist of every Q-family curve along curve `alpha`.
Arrangement twist_arrangement(const Arrangement& arr, int alpha, int power);

struct TwistPrediction {
  IntersectionMatrix predicted;  // |Di∩Ej| + |Di∩α|·|α∩Ej|
  IntersectionMatrix mod2;
};

/// Throws InvalidInput on dimension mismatch.
TwistPrediction predicted_parity_after_twist(const IntersectionMatrix& m,
                                             const std::vector<long long>& d_alpha,
                                             const std::vector<long long>& e_alpha);

/// Counts of α against the cuffs (|Di∩α|) and the E-curves (|α∩Ej|).
struct AlphaCounts {
  std::vector<long long> d_alpha;
  std::vector<long long> e_alpha;
};

AlphaCounts alpha_counts(const NormalDiagram& nd, int alpha);

struct SurgeryResult {
  NormalDiagram diagram;
  std::string note;
  std::optional<Certificate> certificate;
};

/// 1/1-surgery on α realised as a power ±1 twist. The output is a diagram of the
/// surgered manifold; it carries a non-stabilized certificate when the input
/// has even parity and α meets every E-curve an even number of times.
SurgeryResult surgery_diagram(const NormalDiagram& nd, const TwistSpec& spec);

}  // namespace heegaard
