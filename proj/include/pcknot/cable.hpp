#pragma once

#include <array>
#include <map>
#include <vector>

#include "pcknot/diagram.hpp"
#include "pcknot/gaussian.hpp"

namespace pcknot {

enum class CableName { left, right };

/// The four crossings replacing one crossing of the original diagram.
/// tile[2 * over_side + under_side] with side 0 = traveller's left cable.
struct CablePattern {
  std::array<int, 4> tile{};
  int input = 0;
  int output = 0;

  friend bool operator==(const CablePattern&, const CablePattern&) = default;
};

struct CableStrand {
  int original_component = 0;
  CableName name = CableName::left;

  friend bool operator==(const CableStrand&, const CableStrand&) = default;
};

/// Explicit 2-cabling: every component doubled into two parallel strands, every
/// crossing into a 4-crossing tile in which the over branch's cables pass over
/// the under branch's cables.
struct CableDiagram {
  LinkDiagram diagram;
  std::map<int, CablePattern> patterns;  // keyed by original crossing id
  std::vector<CableStrand> strands;      // one per component of `diagram`

  friend bool operator==(const CableDiagram&, const CableDiagram&) = default;
};

/// Builds the cabling of every component. Throws DiagramError when a
/// component is orientation-reversing (its doubling is a single knot).
CableDiagram explicit_cable(const LinkDiagram& d);

/// Sign read directly off the input crossing of the tile of `crossing`:
/// which named cable goes over which.
GaussianInt oracle_sign(const CableDiagram& cable, int crossing);

}  // namespace pcknot
