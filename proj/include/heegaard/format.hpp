#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "heegaard/diagram.hpp"

namespace heegaard {

/// Contents of a `.hd` diagram file. Level 1 carries only the words; level 2
/// carries the full signed crossing data, whose projection must equal the words.
///
///   heegaard-diagram 1
///   genus 3
///   name torus-s1                 (optional)
///   manifold T2 x S1              (optional, free text)
///   irreducible yes               (optional, yes|no)
///
///   [pants]
///   A = 1+ 2+ 5+                  slots a b c, cuff id and side
///   [curves]
///   1' = 1 4 3 6 1 2 3 4 6 2      E-curve words over cuff ids
///   [strands]                     level 2 only, one line per E-curve
///   E1 = 1+ 2- alpha.3
///   [orders]                      level 2 only, one line per cuff
///   1 = E1.1 E2.4
///   [aux]                         level 2 only, auxiliary curves
///   alpha = 1- E1+ E1.2
///
/// Every crossing appears once as a declaration `<curve>±` on the line of the
/// higher-ranked curve (aux > E-curve > cuff, later lines outrank earlier ones
/// of the same kind) and once as a reference `<curve>.<k>` (1-based position
/// on that curve's line) on the other line. `+` means the line's curve enters
/// the Plus side of the named curve.
struct DiagramFile {
  int version = 1;
  std::string name;
  std::string manifold;
  std::optional<bool> irreducible;
  SequenceDiagram sequence;
  std::optional<NormalDiagram> normal;

  int level() const { return normal ? 2 : 1; }
  const PantsDecomposition& pd() const { return sequence.pd; }
};

DiagramFile make_file(SequenceDiagram d);
DiagramFile make_file(NormalDiagram d);

/// Throws ParseError (with line and column) on malformed text and InvalidInput
/// for data that parses but fails validation.
DiagramFile parse_diagram_file(std::string_view text);

/// Canonical text: fixed section order, single spaces, one trailing newline.
std::string serialize(const DiagramFile& f);

/// Structured export mirroring the text format field for field.
std::string to_json(const DiagramFile& f, int indent = 2);

/// True for names usable as E-curve or auxiliary curve names.
bool valid_curve_name(std::string_view name);

std::vector<std::string> builtin_fixture_names();
/// Text of a builtin fixture, or nullopt.
std::optional<std::string> builtin_fixture(std::string_view name);

/// Reads FILE as a path, or as a fixture name (looked up first in the
/// directory named by HEEGAARD_FIXTURE_DIR, then among the builtins).
/// Throws InvalidInput when neither exists.
std::string load_diagram_text(const std::string& file);

}  // namespace heegaard
