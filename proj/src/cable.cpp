#include "pcknot/cable.hpp"

namespace pcknot {

namespace {

// Local picture of a tile: the over branch runs along +y with its left cable
// at x = -1; the under branch runs along +x (ccw) or -x (cw), left cable on
// the side of its slot + 1.
int over_cable_x(int side) { return side == 0 ? -1 : 1; }

int under_cable_y(int side, Corner corner) {
  if (corner == Corner::ccw) return side == 0 ? 1 : -1;
  return side == 0 ? -1 : 1;
}

// Position of the tile crossing along each cable (0 = met first).
int rank_on_over(int under_side, Corner corner) { return under_cable_y(under_side, corner) < 0 ? 0 : 1; }

int rank_on_under(int over_side, Corner corner) {
  int x = over_cable_x(over_side);
  return corner == Corner::ccw ? (x < 0 ? 0 : 1) : (x > 0 ? 0 : 1);
}

}  // namespace

CableDiagram explicit_cable(const LinkDiagram& d) {
  CableDiagram out;
  out.diagram.surface = d.surface;
  out.diagram.flat = d.flat;

  int next_id = 1;
  for (const auto& [x, corner] : d.corners) {
    CablePattern p;
    for (int so = 0; so < 2; ++so) {
      for (int su = 0; su < 2; ++su) {
        int id = next_id++;
        p.tile[static_cast<std::size_t>(2 * so + su)] = id;
        out.diagram.corners[id] = corner;
        if (rank_on_over(su, corner) == 0 && rank_on_under(so, corner) == 0) p.input = id;
        if (rank_on_over(su, corner) == 1 && rank_on_under(so, corner) == 1) p.output = id;
      }
    }
    out.patterns[x] = p;
  }

  for (std::size_t c = 0; c < d.components.size(); ++c) {
    const DiagramComponent& comp = d.components[c];
    const int n = static_cast<int>(comp.passes.size());
    for (int start_side = 0; start_side < 2; ++start_side) {
      DiagramComponent strand;
      if (n == 0) {
        strand.edges.push_back(comp.edges.at(0));
      } else {
        int j = 0, side = start_side, steps = 0;
        do {
          const PassRef& pass = comp.passes[static_cast<std::size_t>(j)];
          Corner corner = d.corners.at(pass.crossing);
          const CablePattern& pat = out.patterns.at(pass.crossing);
          std::array<int, 2> order{};
          for (int other = 0; other < 2; ++other) {
            int rank = pass.role == Role::over ? rank_on_over(other, corner) : rank_on_under(other, corner);
            int tile_index = pass.role == Role::over ? 2 * side + other : 2 * other + side;
            order[static_cast<std::size_t>(rank)] = pat.tile[static_cast<std::size_t>(tile_index)];
          }
          for (int id : order) strand.passes.push_back({id, pass.role});
          strand.edges.push_back(Word{});
          strand.edges.push_back(comp.edges[static_cast<std::size_t>(j)]);
          side ^= w1(comp.edges[static_cast<std::size_t>(j)], d.surface);
          j = (j + 1) % n;
          ++steps;
        } while (!(j == 0 && side == start_side));
        if (steps != n) {
          throw DiagramError("component " + std::to_string(c) +
                             " is orientation-reversing: its doubling closes up into a single strand");
        }
      }
      bool named_left = (start_side == 0) == (comp.labeling == 0);
      out.diagram.components.push_back(std::move(strand));
      out.strands.push_back({static_cast<int>(c), named_left ? CableName::left : CableName::right});
    }
  }
  return out;
}

GaussianInt oracle_sign(const CableDiagram& cable, int crossing) {
  const CablePattern& p = cable.patterns.at(crossing);
  DiagramIndex idx(cable.diagram);
  CableName over = cable.strands.at(static_cast<std::size_t>(idx.over(p.input).component)).name;
  CableName under = cable.strands.at(static_cast<std::size_t>(idx.under(p.input).component)).name;
  if (over == CableName::right && under == CableName::left) return {1, 0};
  if (over == CableName::left && under == CableName::right) return {-1, 0};
  if (over == CableName::right) return {0, 1};
  return {0, -1};
}

}  // namespace pcknot
