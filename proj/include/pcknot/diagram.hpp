#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcknot/surface.hpp"

namespace pcknot {

enum class Role { over, under };

inline Role opposite(Role r) { return r == Role::over ? Role::under : Role::over; }

/// Local rotation at a crossing. Slots 0..3 run counterclockwise in the local
/// disk with the over strand entering at 0 and leaving at 2; `ccw` puts the
/// under-incoming strand at slot 1, `cw` at slot 3.
enum class Corner { ccw, cw };

inline Corner flipped(Corner c) { return c == Corner::ccw ? Corner::cw : Corner::ccw; }

struct PassRef {
  int crossing = 0;
  Role role = Role::over;

  friend bool operator==(const PassRef&, const PassRef&) = default;
};

/// One closed strand. edges[j] decorates the arc from passes[j] to
/// passes[(j + 1) % n]; a crossing-free component has no passes and exactly
/// one closed edge. `labeling` selects which cable on the basepoint's local
/// left is named Left (0) or Right (1).
struct DiagramComponent {
  std::vector<PassRef> passes;
  std::vector<Word> edges;
  int labeling = 0;

  std::size_t size() const { return passes.size(); }
  friend bool operator==(const DiagramComponent&, const DiagramComponent&) = default;
};

/// Decorated Gauss code of a knot or link diagram on a surface.
struct LinkDiagram {
  SurfacePresentation surface;
  std::map<int, Corner> corners;
  std::vector<DiagramComponent> components;
  bool flat = false;

  std::size_t crossing_count() const { return corners.size(); }
  friend bool operator==(const LinkDiagram&, const LinkDiagram&) = default;
};

/// A thrown error for diagram operations whose preconditions fail.
class DiagramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PassLocation {
  int component = 0;
  int index = 0;

  friend bool operator==(const PassLocation&, const PassLocation&) = default;
};

/// Where the over and under pass of each crossing sit, plus per-component
/// twist parities. Built once per query batch.
class DiagramIndex {
 public:
  explicit DiagramIndex(const LinkDiagram& d);

  const LinkDiagram& diagram() const { return *d_; }
  PassLocation over(int crossing) const { return at(crossing)[0]; }
  PassLocation under(int crossing) const { return at(crossing)[1]; }
  PassLocation location(int crossing, Role r) const { return at(crossing)[r == Role::over ? 0 : 1]; }
  bool is_self_crossing(int crossing) const { return over(crossing).component == under(crossing).component; }
  int parity(PassLocation p) const { return parity_.at(p.component).at(p.index); }
  bool pseudo_classical(int component) const { return total_parity_.at(component) == 0; }

 private:
  const std::array<PassLocation, 2>& at(int crossing) const;

  const LinkDiagram* d_;
  std::map<int, std::array<PassLocation, 2>> where_;
  std::vector<std::vector<int>> parity_;
  std::vector<int> total_parity_;
};

/// Violations as human-readable lines; empty iff the diagram is well formed.
std::vector<std::string> validate(const LinkDiagram& d);

/// Product of all edge words of a component, read from its basepoint.
Word component_word(const LinkDiagram& d, int component);

bool is_pseudo_classical(const LinkDiagram& d, int component);

/// xor of w1 over the arcs strictly before `position`.
int twist_parity(const LinkDiagram& d, int component, int position);

/// Contiguous stretch of one component: departs passes[start], runs along
/// edges start..end-1 and arrives at passes[end]. `whole` marks the full
/// component (start == end == 0).
struct Loop {
  int component = 0;
  int start = 0;
  int end = 0;
  bool whole = false;

  static Loop whole_component(int c) { return {c, 0, 0, true}; }
  friend bool operator==(const Loop&, const Loop&) = default;
};

int edge_count(const LinkDiagram& d, const Loop& l);
Word loop_word(const LinkDiagram& d, const Loop& l);
/// Passes strictly inside the loop (all passes for a whole component).
bool loop_contains(const LinkDiagram& d, const Loop& l, PassLocation p);
/// Loop word read starting from the pass at `index`, which must lie in the loop.
Word rebased_word(const LinkDiagram& d, const Loop& l, int index);

/// l1 departs along the over-outgoing arc and returns on the under-incoming
/// arc; l2 the other way round.
std::pair<Loop, Loop> loops_at(const LinkDiagram& d, int crossing);

/// Crossings other than the base crossings with one pass in each loop.
std::vector<int> mutual_crossings(const LinkDiagram& d, const Loop& a, const Loop& b);

/// The loop as a standalone flat single-component diagram. Crossings with
/// both passes inside the loop are kept; the rest become pass-throughs.
LinkDiagram extract_subdiagram(const LinkDiagram& d, const Loop& l);

/// Orientation-respecting smoothing of the mutual crossing y.
Word smooth(const LinkDiagram& d, const Loop& a, const Loop& b, int y);

LinkDiagram reverse(const LinkDiagram& d);
LinkDiagram reverse_component(const LinkDiagram& d, int component);
LinkDiagram relabel(const LinkDiagram& d);
LinkDiagram relabel_component(const LinkDiagram& d, int component);
LinkDiagram switch_crossing(const LinkDiagram& d, int crossing);
LinkDiagram flatten(const LinkDiagram& d);

}  // namespace pcknot
