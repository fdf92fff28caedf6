#include "pcknot/signs.hpp"

namespace pcknot {

namespace {

void require_pseudo_classical(const DiagramIndex& idx, int component) {
  if (!idx.pseudo_classical(component)) {
    throw DiagramError("component " + std::to_string(component) +
                       " is orientation-reversing; its cabling is not a two-component link");
  }
}

}  // namespace

GaussianInt raw_sign(const DiagramIndex& idx, int crossing, const SignRule& rule) {
  const LinkDiagram& d = idx.diagram();
  PassLocation o = idx.over(crossing);
  PassLocation u = idx.under(crossing);
  require_pseudo_classical(idx, o.component);
  require_pseudo_classical(idx, u.component);

  // Which cable of each branch faces the input corner: the over branch shows
  // its left cable there iff the under strand enters counterclockwise of it.
  bool over_left_faces = (d.corners.at(crossing) == Corner::ccw) == (rule.side == SideConvention::standard);
  bool under_left_faces = !over_left_faces;

  // A cable on the traveller's left at parity p is named Left iff labeling ^ p == 0.
  int over_frame = d.components[static_cast<std::size_t>(o.component)].labeling ^ idx.parity(o);
  int under_frame = d.components[static_cast<std::size_t>(u.component)].labeling ^ idx.parity(u);
  bool over_is_left = over_left_faces ? over_frame == 0 : over_frame == 1;
  bool under_is_left = under_left_faces ? under_frame == 0 : under_frame == 1;

  return rule.table[static_cast<std::size_t>(2 * over_is_left + under_is_left)];
}

GaussianInt crossing_sign(const LinkDiagram& d, int crossing, const SignRule& rule) {
  if (d.flat) throw DiagramError("crossing sign needs over/under information; diagram is flat");
  DiagramIndex idx(d);
  return raw_sign(idx, crossing, rule);
}

std::map<int, GaussianInt> crossing_signs(const LinkDiagram& d, const SignRule& rule) {
  if (d.flat) throw DiagramError("crossing sign needs over/under information; diagram is flat");
  DiagramIndex idx(d);
  std::map<int, GaussianInt> out;
  for (const auto& [x, corner] : d.corners) out[x] = raw_sign(idx, x, rule);
  return out;
}

GaussianInt flat_self_sign(const GaussianInt& sign) { return sign.is_real_unit() ? GaussianInt{1, 0} : sign; }

GaussianInt sign_f1(const LinkDiagram& d, int crossing, const SignRule& rule) {
  DiagramIndex idx(d);
  if (!idx.is_self_crossing(crossing)) {
    throw DiagramError("crossing " + std::to_string(crossing) + " is not a self-intersection");
  }
  return flat_self_sign(raw_sign(idx, crossing, rule));
}

GaussianInt flat_pair_sign(const GaussianInt& sign, bool first_is_under) {
  return first_is_under && sign.is_real_unit() ? -sign : sign;
}

GaussianInt sign_f2(const LinkDiagram& d, int crossing, const Loop& first, const Loop& second, const SignRule& rule) {
  DiagramIndex idx(d);
  PassLocation o = idx.over(crossing), u = idx.under(crossing);
  bool first_over = loop_contains(d, first, o) && loop_contains(d, second, u);
  bool first_under = loop_contains(d, first, u) && loop_contains(d, second, o);
  if (!first_over && !first_under) {
    throw DiagramError("crossing " + std::to_string(crossing) + " is not a mutual crossing of the two curves");
  }
  return flat_pair_sign(raw_sign(idx, crossing, rule), first_under && !first_over);
}

}  // namespace pcknot
