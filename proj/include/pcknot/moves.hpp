#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "pcknot/diagram.hpp"

namespace pcknot {

/// Thrown when a move's parameters or applicability predicate fail.
class MoveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Orientation { parallel, antiparallel };
enum class Side { left, right };

/// Curl on `edge` of `component` after `split` letters of its word. The
/// curl's small loop carries the empty word.
struct R1Insert {
  int component = 0;
  int edge = 0;
  int split = 0;
  Corner chirality = Corner::ccw;
  bool over_first = true;
  friend bool operator==(const R1Insert&, const R1Insert&) = default;
};

struct R1Remove {
  int crossing = 0;
  friend bool operator==(const R1Remove&, const R1Remove&) = default;
};

/// Bigon between strand A (split of edge_a) and a finger of strand B pushed
/// along `band` from its split point. A passes x1 then x2; B passes them in
/// the same order when parallel. B approaches from `approach` side of A. In
/// flat diagrams the two crossings may have different over strands.
struct R2Insert {
  int component_a = 0;
  int edge_a = 0;
  int split_a = 0;
  int component_b = 0;
  int edge_b = 0;
  int split_b = 0;
  Word band;
  Orientation orientation = Orientation::parallel;
  Side approach = Side::left;
  bool a_over_first = true;
  bool a_over_second = true;
  friend bool operator==(const R2Insert&, const R2Insert&) = default;
};

/// Removes the bigon formed by two crossings.
struct R2Remove {
  int first = 0;
  int second = 0;
  friend bool operator==(const R2Remove&, const R2Remove&) = default;
};

/// Triangle move on three crossings joined pairwise by empty-word arcs.
struct R3Move {
  std::array<int, 3> crossings{};
  friend bool operator==(const R3Move&, const R3Move&) = default;
};

using Move = std::variant<R1Insert, R1Remove, R2Insert, R2Remove, R3Move>;

/// Smallest unused positive crossing id.
int next_crossing_id(const LinkDiagram& d);

LinkDiagram r1_insert(const LinkDiagram& d, const R1Insert& m);
std::vector<R1Remove> r1_removals(const LinkDiagram& d);
LinkDiagram r1_remove(const LinkDiagram& d, const R1Remove& m);

/// New crossings get ids next_crossing_id(d) (x1) and the one after (x2).
/// Aborts with std::logic_error if the bigon signs are not opposite.
LinkDiagram r2_insert(const LinkDiagram& d, const R2Insert& m);
std::vector<R2Remove> r2_removals(const LinkDiagram& d);
LinkDiagram r2_remove(const LinkDiagram& d, const R2Remove& m);

/// All applicable triangle moves, crossings sorted.
std::vector<R3Move> r3_moves(const LinkDiagram& d);
/// Swaps the passes along each side of the triangle. Signs and the loop
/// classes of the three crossings are checked to be unchanged.
LinkDiagram r3_apply(const LinkDiagram& d, const R3Move& m);

LinkDiagram apply_move(const LinkDiagram& d, const Move& m);
std::string describe(const Move& m, const SurfacePresentation& s);

}  // namespace pcknot
