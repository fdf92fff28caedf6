#include "pcknot/moves.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "pcknot/signs.hpp"

namespace pcknot {

namespace {

DiagramComponent& component_at(LinkDiagram& d, int c) {
  if (c < 0 || c >= static_cast<int>(d.components.size())) {
    throw MoveError("no component " + std::to_string(c));
  }
  return d.components[static_cast<std::size_t>(c)];
}

template <class T>
void insert_at(std::vector<T>& v, int pos, std::initializer_list<T> items) {
  v.insert(v.begin() + pos, items);
}

// Replaces the word u.v of an edge (u = first `split` letters) by
//   u.band, p1, (empty), p2, band^-1.v
// A crossing-free component is opened at its basepoint, so only split 0 is
// accepted there; the basepoint then moves along `band`.
void splice(LinkDiagram& d, int c, int edge, int split, const Word& band, PassRef p1, PassRef p2) {
  DiagramComponent& comp = component_at(d, c);
  if (edge < 0 || edge >= static_cast<int>(comp.edges.size())) {
    throw MoveError("component " + std::to_string(c) + " has no edge " + std::to_string(edge));
  }
  const Word& w = comp.edges[static_cast<std::size_t>(edge)];
  if (split < 0 || split > static_cast<int>(w.size())) {
    throw MoveError("split " + std::to_string(split) + " outside a word of length " + std::to_string(w.size()));
  }
  if (comp.passes.empty()) {
    if (split != 0) throw MoveError("a crossing-free component can only be split at 0");
    comp.edges = {Word{}, band.inverse() * w * band};
    comp.passes = {p1, p2};
    comp.labeling ^= w1(band, d.surface);
    return;
  }
  Word u{{w.letters.begin(), w.letters.begin() + split}};
  Word v{{w.letters.begin() + split, w.letters.end()}};
  comp.edges[static_cast<std::size_t>(edge)] = u * band;
  insert_at(comp.passes, edge + 1, {p1, p2});
  insert_at(comp.edges, edge + 1, {Word{}, band.inverse() * v});
}

// Deletes passes[i] and passes[i + 1] (cyclically), which must be joined by
// an empty edge, merging the neighbouring words. The basepoint moves forward
// when pass 0 goes away.
void remove_segment(LinkDiagram& d, int c, int i) {
  DiagramComponent& comp = component_at(d, c);
  const int n = static_cast<int>(comp.passes.size());
  auto& e = comp.edges;
  auto at = [&](int k) -> const Word& { return e[static_cast<std::size_t>(k)]; };
  if (n < 2 || !at(i).empty()) throw std::logic_error("segment removal needs two passes joined by an empty arc");
  if (n == 2) {
    Word rest = at(1 - i);
    comp.passes.clear();
    comp.edges = {rest};
    return;
  }
  std::vector<PassRef> passes;
  std::vector<Word> edges;
  if (i == 0) {
    comp.labeling ^= w1(at(1), d.surface);
    passes.assign(comp.passes.begin() + 2, comp.passes.end());
    edges.assign(e.begin() + 2, e.end() - 1);
    edges.push_back(concat_cancel(at(n - 1), at(1)));
  } else if (i == n - 1) {
    comp.labeling ^= w1(at(0), d.surface);
    passes.assign(comp.passes.begin() + 1, comp.passes.end() - 1);
    edges.assign(e.begin() + 1, e.end() - 2);
    edges.push_back(concat_cancel(at(n - 2), at(0)));
  } else {
    passes = comp.passes;
    passes.erase(passes.begin() + i, passes.begin() + i + 2);
    edges = e;
    edges[static_cast<std::size_t>(i - 1)] = concat_cancel(at(i - 1), at(i + 1));
    edges.erase(edges.begin() + i, edges.begin() + i + 2);
  }
  comp.passes = std::move(passes);
  comp.edges = std::move(edges);
}

// Two consecutive passes of one component joined by an empty arc.
struct Segment {
  int component = 0;
  int index = 0;
  PassRef first;
  PassRef second;
};

std::vector<Segment> segments(const LinkDiagram& d) {
  std::vector<Segment> out;
  for (std::size_t c = 0; c < d.components.size(); ++c) {
    const DiagramComponent& comp = d.components[c];
    const std::size_t n = comp.passes.size();
    // A lone pass closing up on itself is not a segment.
    if (n < 2) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (!comp.edges[i].empty()) continue;
      out.push_back({static_cast<int>(c), static_cast<int>(i), comp.passes[i], comp.passes[(i + 1) % n]});
    }
  }
  return out;
}

int find_pass(const DiagramComponent& comp, const PassRef& p) {
  auto it = std::find(comp.passes.begin(), comp.passes.end(), p);
  if (it == comp.passes.end()) throw std::logic_error("pass vanished during a rewrite");
  return static_cast<int>(it - comp.passes.begin());
}

// Removes the passes of segment s, located afresh in the current diagram.
void remove_located(LinkDiagram& d, const Segment& s) {
  remove_segment(d, s.component, find_pass(d.components[static_cast<std::size_t>(s.component)], s.first));
}

// Does strand j, crossing strand i at x, move from i's left to its right?
bool crosses_left_to_right(Corner corner, Role role_of_i) {
  return (corner == Corner::ccw) == (role_of_i == Role::over);
}

bool is_bigon(const LinkDiagram& d, const Segment& a, const Segment& b) {
  std::set<int> xa{a.first.crossing, a.second.crossing};
  std::set<int> xb{b.first.crossing, b.second.crossing};
  if (xa != xb || xa.size() != 2) return false;
  auto role_at = [](const Segment& s, int x) { return s.first.crossing == x ? s.first.role : s.second.role; };
  for (int x : xa) {
    if (role_at(a, x) == role_at(b, x)) return false;
  }
  bool same_over = a.first.role == a.second.role;
  if (!d.flat && !same_over) return false;
  bool corners_differ = d.corners.at(a.first.crossing) != d.corners.at(a.second.crossing);
  return corners_differ == same_over;
}

std::optional<std::pair<Segment, Segment>> find_bigon(const LinkDiagram& d, int x, int y) {
  auto segs = segments(d);
  for (const Segment& a : segs) {
    for (const Segment& b : segs) {
      std::set<int> want{x, y};
      if (std::set<int>{a.first.crossing, a.second.crossing} != want) continue;
      if (is_bigon(d, a, b)) return std::pair{a, b};
    }
  }
  return std::nullopt;
}

struct Triangle {
  std::array<Segment, 3> sides;
};

bool is_triangle(const LinkDiagram& d, const std::array<Segment, 3>& s) {
  std::vector<PassRef> all;
  for (const Segment& seg : s) {
    all.push_back(seg.first);
    all.push_back(seg.second);
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (all[i] == all[j]) return false;
    }
  }
  if (!d.flat) {
    int overs_count_mask = 0;
    for (const Segment& seg : s) {
      int overs = (seg.first.role == Role::over) + (seg.second.role == Role::over);
      overs_count_mask |= 1 << overs;
    }
    if (overs_count_mask != 0b111) return false;
  }
  // Each side of the triangle must see the triangle on one consistent side,
  // as judged from both strands that cross it.
  for (std::size_t i = 0; i < 3; ++i) {
    const Segment& side = s[i];
    std::optional<Side> seen;
    for (const PassRef& mine : {side.first, side.second}) {
      int x = mine.crossing;
      const Segment* other = nullptr;
      for (std::size_t j = 0; j < 3; ++j) {
        if (j != i && (s[j].first.crossing == x || s[j].second.crossing == x)) other = &s[j];
      }
      if (other == nullptr) return false;
      bool lr = crosses_left_to_right(d.corners.at(x), mine.role);
      bool other_meets_here_first = other->first.crossing == x;
      Side lambda = other_meets_here_first == lr ? Side::right : Side::left;
      if (seen && *seen != lambda) return false;
      seen = lambda;
    }
  }
  return true;
}

std::vector<Triangle> find_triangles(const LinkDiagram& d) {
  std::map<std::pair<int, int>, std::vector<Segment>> by_pair;
  for (const Segment& s : segments(d)) {
    int x = s.first.crossing, y = s.second.crossing;
    if (x == y) continue;
    by_pair[{std::min(x, y), std::max(x, y)}].push_back(s);
  }
  auto lookup = [&](int x, int y) -> const std::vector<Segment>* {
    auto it = by_pair.find({std::min(x, y), std::max(x, y)});
    return it == by_pair.end() ? nullptr : &it->second;
  };
  std::vector<Triangle> out;
  for (const auto& [ab, sab] : by_pair) {
    auto [a, b] = ab;
    for (const auto& [x, corner] : d.corners) {
      if (x <= b) continue;
      const auto* sbc = lookup(b, x);
      const auto* sac = lookup(a, x);
      if (sbc == nullptr || sac == nullptr) continue;
      for (const Segment& s1 : sab) {
        for (const Segment& s2 : *sbc) {
          for (const Segment& s3 : *sac) {
            std::array<Segment, 3> sides{s1, s2, s3};
            if (is_triangle(d, sides)) out.push_back({sides});
          }
        }
      }
    }
  }
  return out;
}

std::array<int, 3> crossings_of(const Triangle& t) {
  std::set<int> xs;
  for (const Segment& s : t.sides) {
    xs.insert(s.first.crossing);
    xs.insert(s.second.crossing);
  }
  std::array<int, 3> out{};
  std::copy(xs.begin(), xs.end(), out.begin());
  return out;
}

std::string role_text(bool over) { return over ? "over" : "under"; }

}  // namespace

int next_crossing_id(const LinkDiagram& d) { return d.corners.empty() ? 1 : std::max(1, d.corners.rbegin()->first + 1); }

LinkDiagram r1_insert(const LinkDiagram& d, const R1Insert& m) {
  LinkDiagram out = d;
  int x = next_crossing_id(d);
  Role first = m.over_first ? Role::over : Role::under;
  splice(out, m.component, m.edge, m.split, Word{}, {x, first}, {x, opposite(first)});
  out.corners[x] = m.chirality;
  return out;
}

std::vector<R1Remove> r1_removals(const LinkDiagram& d) {
  std::set<int> found;
  for (const Segment& s : segments(d)) {
    if (s.first.crossing == s.second.crossing) found.insert(s.first.crossing);
  }
  std::vector<R1Remove> out;
  for (int x : found) out.push_back({x});
  return out;
}

LinkDiagram r1_remove(const LinkDiagram& d, const R1Remove& m) {
  for (const Segment& s : segments(d)) {
    if (s.first.crossing == m.crossing && s.second.crossing == m.crossing) {
      LinkDiagram out = d;
      remove_segment(out, s.component, s.index);
      out.corners.erase(m.crossing);
      return out;
    }
  }
  throw MoveError("crossing " + std::to_string(m.crossing) + " is not a removable curl");
}

LinkDiagram r2_insert(const LinkDiagram& d, const R2Insert& m) {
  if (!d.flat && m.a_over_first != m.a_over_second) {
    throw MoveError("the same strand must pass over at both bigon crossings");
  }
  LinkDiagram out = d;
  const DiagramComponent& host_a = component_at(out, m.component_a);
  component_at(out, m.component_b);
  if (m.component_a == m.component_b && host_a.passes.empty()) {
    throw MoveError("a crossing-free component cannot host both strands of a bigon");
  }
  try {
    check_word(m.band, d.surface);
  } catch (const std::out_of_range& e) {
    throw MoveError(e.what());
  }

  const int x1 = next_crossing_id(d), x2 = x1 + 1;
  const Role a1 = m.a_over_first ? Role::over : Role::under;
  const Role a2 = m.a_over_second ? Role::over : Role::under;
  PassRef b1{x1, opposite(a1)}, b2{x2, opposite(a2)};
  bool parallel = m.orientation == Orientation::parallel;
  PassRef b_first = parallel ? b1 : b2, b_second = parallel ? b2 : b1;

  // B crosses A away from its approach side at the crossing it meets first,
  // and back at the other one.
  auto corner_for = [&](int x, Role a_role) {
    bool b_first_here = (x == x1) == parallel;
    bool left_to_right = b_first_here == (m.approach == Side::left);
    return (left_to_right == (a_role == Role::over)) ? Corner::ccw : Corner::cw;
  };
  out.corners[x1] = corner_for(x1, a1);
  out.corners[x2] = corner_for(x2, a2);

  auto splice_a = [&] { splice(out, m.component_a, m.edge_a, m.split_a, Word{}, {x1, a1}, {x2, a2}); };
  auto splice_b = [&] { splice(out, m.component_b, m.edge_b, m.split_b, m.band, b_first, b_second); };
  // Splice the later position first so the earlier indices stay valid.
  if (m.component_a == m.component_b && std::pair{m.edge_b, m.split_b} > std::pair{m.edge_a, m.split_a}) {
    splice_b();
    splice_a();
  } else {
    splice_a();
    splice_b();
  }

  DiagramIndex idx(out);
  if (idx.pseudo_classical(idx.over(x1).component) && idx.pseudo_classical(idx.under(x1).component)) {
    GaussianInt s1 = raw_sign(idx, x1), s2 = raw_sign(idx, x2);
    GaussianInt expected = a1 == a2 ? -s2 : s2.conj();
    if (s1 != expected) {
      throw std::logic_error("bigon template produced signs " + to_string(s1) + " and " + to_string(s2));
    }
  }
  return out;
}

std::vector<R2Remove> r2_removals(const LinkDiagram& d) {
  std::set<std::pair<int, int>> found;
  auto segs = segments(d);
  for (const Segment& a : segs) {
    for (const Segment& b : segs) {
      if (is_bigon(d, a, b)) {
        int x = a.first.crossing, y = a.second.crossing;
        found.insert({std::min(x, y), std::max(x, y)});
      }
    }
  }
  std::vector<R2Remove> out;
  for (auto [x, y] : found) out.push_back({x, y});
  return out;
}

LinkDiagram r2_remove(const LinkDiagram& d, const R2Remove& m) {
  auto bigon = find_bigon(d, m.first, m.second);
  if (!bigon) {
    throw MoveError("crossings " + std::to_string(m.first) + " and " + std::to_string(m.second) + " bound no bigon");
  }
  LinkDiagram out = d;
  remove_located(out, bigon->first);
  remove_located(out, bigon->second);
  out.corners.erase(m.first);
  out.corners.erase(m.second);
  return out;
}

std::vector<R3Move> r3_moves(const LinkDiagram& d) {
  std::set<std::array<int, 3>> found;
  for (const Triangle& t : find_triangles(d)) found.insert(crossings_of(t));
  return {found.begin(), found.end()};
}

LinkDiagram r3_apply(const LinkDiagram& d, const R3Move& m) {
  std::array<int, 3> want = m.crossings;
  std::sort(want.begin(), want.end());
  std::optional<Triangle> tri;
  for (const Triangle& t : find_triangles(d)) {
    if (crossings_of(t) == want) {
      tri = t;
      break;
    }
  }
  if (!tri) throw MoveError("crossings do not form an applicable triangle");

  LinkDiagram out = d;
  for (const Segment& s : tri->sides) {
    auto& passes = out.components[static_cast<std::size_t>(s.component)].passes;
    std::swap(passes[static_cast<std::size_t>(s.index)], passes[(static_cast<std::size_t>(s.index) + 1) % passes.size()]);
  }

  DiagramIndex before(d), after(out);
  for (int x : want) {
    bool signed_ok = before.pseudo_classical(before.over(x).component) && before.pseudo_classical(before.under(x).component);
    if (signed_ok && raw_sign(before, x) != raw_sign(after, x)) {
      throw std::logic_error("triangle move changed the sign of crossing " + std::to_string(x));
    }
    if (before.is_self_crossing(x) && !d.surface.is_closed()) {
      auto [l1, l2] = loops_at(d, x);
      auto [k1, k2] = loops_at(out, x);
      if (free_homotopy_class(loop_word(d, l1), d.surface) != free_homotopy_class(loop_word(out, k1), d.surface) ||
          free_homotopy_class(loop_word(d, l2), d.surface) != free_homotopy_class(loop_word(out, k2), d.surface)) {
        throw std::logic_error("triangle move changed a loop class at crossing " + std::to_string(x));
      }
    }
  }
  return out;
}

LinkDiagram apply_move(const LinkDiagram& d, const Move& m) {
  return std::visit(
      [&](const auto& mv) -> LinkDiagram {
        using T = std::decay_t<decltype(mv)>;
        if constexpr (std::is_same_v<T, R1Insert>) return r1_insert(d, mv);
        if constexpr (std::is_same_v<T, R1Remove>) return r1_remove(d, mv);
        if constexpr (std::is_same_v<T, R2Insert>) return r2_insert(d, mv);
        if constexpr (std::is_same_v<T, R2Remove>) return r2_remove(d, mv);
        if constexpr (std::is_same_v<T, R3Move>) return r3_apply(d, mv);
      },
      m);
}

std::string describe(const Move& m, const SurfacePresentation& s) {
  std::ostringstream out;
  std::visit(
      [&](const auto& mv) {
        using T = std::decay_t<decltype(mv)>;
        if constexpr (std::is_same_v<T, R1Insert>) {
          out << "R1+ component " << mv.component << " edge " << mv.edge << " split " << mv.split << ' '
              << (mv.chirality == Corner::ccw ? "ccw" : "cw") << ' ' << (mv.over_first ? "over-first" : "under-first");
        } else if constexpr (std::is_same_v<T, R1Remove>) {
          out << "R1- crossing " << mv.crossing;
        } else if constexpr (std::is_same_v<T, R2Insert>) {
          out << "R2+ A " << mv.component_a << ':' << mv.edge_a << ':' << mv.split_a << " B " << mv.component_b << ':'
              << mv.edge_b << ':' << mv.split_b << " band " << format_word(mv.band, s) << ' '
              << (mv.orientation == Orientation::parallel ? "parallel" : "antiparallel") << " from "
              << (mv.approach == Side::left ? "left" : "right") << " A " << role_text(mv.a_over_first) << '/'
              << role_text(mv.a_over_second);
        } else if constexpr (std::is_same_v<T, R2Remove>) {
          out << "R2- crossings " << mv.first << ' ' << mv.second;
        } else {
          out << "R3 crossings " << mv.crossings[0] << ' ' << mv.crossings[1] << ' ' << mv.crossings[2];
        }
      },
      m);
  return out.str();
}

}  // namespace pcknot
