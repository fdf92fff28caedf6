#include "pcknot/random.hpp"

#include <algorithm>

namespace pcknot {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool coin(Rng& rng) { return uniform(rng, 0, 1) == 1; }

template <class T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(v.size()) - 1))];
}

struct EdgeSpot {
  int component;
  int edge;
  int split;
};

EdgeSpot random_spot(Rng& rng, const LinkDiagram& d) {
  int c = uniform(rng, 0, static_cast<int>(d.components.size()) - 1);
  const DiagramComponent& comp = d.components[static_cast<std::size_t>(c)];
  int e = uniform(rng, 0, static_cast<int>(comp.edges.size()) - 1);
  int split = comp.passes.empty() ? 0 : uniform(rng, 0, static_cast<int>(comp.edges[static_cast<std::size_t>(e)].size()));
  return {c, e, split};
}

PassLocation locate(const LinkDiagram& d, int crossing, Role r) {
  DiagramIndex idx(d);
  return idx.location(crossing, r);
}

}  // namespace

SurfacePresentation random_surface(Rng& rng, int max_generators) {
  int k = uniform(rng, 1, std::max(1, max_generators));
  std::vector<Generator> gens;
  for (int i = 0; i < k; ++i) gens.push_back({std::string(1, static_cast<char>('a' + i)), uniform(rng, 0, 1)});
  gens[static_cast<std::size_t>(uniform(rng, 0, k - 1))].w1 = 1;
  return SurfacePresentation::with_boundary(gens);
}

Word random_word(Rng& rng, const SurfacePresentation& s, int max_length) {
  int len = uniform(rng, 0, max_length);
  int gens = static_cast<int>(s.generators().size());
  Word w;
  while (static_cast<int>(w.size()) < len) {
    Letter l{uniform(rng, 0, gens - 1), coin(rng) ? 1 : -1};
    if (!w.letters.empty() && w.letters.back() == l.inverse()) continue;
    w.letters.push_back(l);
  }
  return w;
}

LinkDiagram random_diagram(Rng& rng, const SurfacePresentation& s, const RandomSpec& spec) {
  const int n = spec.crossings;
  const int comps = std::max(1, spec.components);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    LinkDiagram d;
    d.surface = s;
    d.flat = spec.flat;
    std::vector<PassRef> seq;
    for (int x = 1; x <= n; ++x) {
      d.corners[x] = coin(rng) ? Corner::ccw : Corner::cw;
      seq.push_back({x, Role::over});
      seq.push_back({x, Role::under});
    }
    std::shuffle(seq.begin(), seq.end(), rng);
    std::vector<int> cuts{0};
    for (int c = 1; c < comps; ++c) cuts.push_back(uniform(rng, 0, 2 * n));
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(2 * n);
    for (int c = 0; c < comps; ++c) {
      DiagramComponent comp;
      comp.passes.assign(seq.begin() + cuts[static_cast<std::size_t>(c)], seq.begin() + cuts[static_cast<std::size_t>(c) + 1]);
      std::size_t edges = std::max<std::size_t>(1, comp.passes.size());
      for (std::size_t e = 0; e < edges; ++e) comp.edges.push_back(random_word(rng, s, spec.max_word_length));
      comp.labeling = uniform(rng, 0, 1);
      d.components.push_back(std::move(comp));
    }
    bool ok = true;
    for (int c = 0; c < comps && ok; ++c) ok = is_pseudo_classical(d, c);
    if (ok) return d;
  }
  throw std::runtime_error("random diagram sampler found no orientation-preserving sample");
}

LinkDiagram random_diagram(std::uint64_t seed, int crossings, const SurfacePresentation& s) {
  Rng rng(seed);
  return random_diagram(rng, s, RandomSpec{crossings, 1, false, 2});
}

R1Insert random_r1(Rng& rng, const LinkDiagram& d) {
  EdgeSpot at = random_spot(rng, d);
  return {at.component, at.edge, at.split, coin(rng) ? Corner::ccw : Corner::cw, coin(rng)};
}

R2Insert random_r2(Rng& rng, const LinkDiagram& d) {
  for (;;) {
    EdgeSpot a = random_spot(rng, d);
    EdgeSpot b = random_spot(rng, d);
    if (a.component == b.component && d.components[static_cast<std::size_t>(a.component)].passes.empty()) continue;
    R2Insert m;
    m.component_a = a.component;
    m.edge_a = a.edge;
    m.split_a = a.split;
    m.component_b = b.component;
    m.edge_b = b.edge;
    m.split_b = b.split;
    m.band = random_word(rng, d.surface, 2);
    m.orientation = coin(rng) ? Orientation::parallel : Orientation::antiparallel;
    m.approach = coin(rng) ? Side::left : Side::right;
    m.a_over_first = coin(rng);
    m.a_over_second = d.flat ? coin(rng) : m.a_over_first;
    return m;
  }
}

std::pair<std::vector<Move>, LinkDiagram> plant_triangle(Rng& rng, const LinkDiagram& d) {
  if (d.corners.empty()) return {{}, d};
  std::vector<int> ids;
  for (const auto& [x, corner] : d.corners) ids.push_back(x);
  int c = pick(rng, ids);

  // Third strand pushed across the arc leaving c along its over branch.
  PassLocation over = locate(d, c, Role::over);
  R2Insert first = random_r2(rng, d);
  first.component_a = over.component;
  first.edge_a = over.index;
  first.split_a = 0;
  if (first.component_b == first.component_a && first.edge_b == first.edge_a) first.split_b = 0;
  LinkDiagram mid = r2_insert(d, first);

  // Its tip, between the two new passes, pushed across the arc leaving c
  // along the under branch.
  int x1 = next_crossing_id(d);
  bool parallel = first.orientation == Orientation::parallel;
  int b_first = parallel ? x1 : x1 + 1;
  Role b_role = parallel ? (first.a_over_first ? Role::under : Role::over) : (first.a_over_second ? Role::under : Role::over);
  PassLocation tip = locate(mid, b_first, b_role);
  PassLocation under = locate(mid, c, Role::under);

  R2Insert second;
  second.component_a = under.component;
  second.edge_a = under.index;
  second.split_a = 0;
  second.component_b = tip.component;
  second.edge_b = tip.index;
  second.split_b = 0;
  second.orientation = coin(rng) ? Orientation::parallel : Orientation::antiparallel;
  second.approach = coin(rng) ? Side::left : Side::right;
  second.a_over_first = coin(rng);
  second.a_over_second = mid.flat ? coin(rng) : second.a_over_first;
  LinkDiagram out = r2_insert(mid, second);
  return {{first, second}, out};
}

std::pair<std::vector<Move>, LinkDiagram> random_moves(Rng& rng, const LinkDiagram& d) {
  int kind = uniform(rng, 0, 6);
  if (kind == 0) {
    auto r1 = r1_removals(d);
    if (!r1.empty()) {
      R1Remove m = pick(rng, r1);
      return {{m}, r1_remove(d, m)};
    }
  } else if (kind == 1) {
    auto r2 = r2_removals(d);
    if (!r2.empty()) {
      R2Remove m = pick(rng, r2);
      return {{m}, r2_remove(d, m)};
    }
  } else if (kind == 2) {
    auto r3 = r3_moves(d);
    if (!r3.empty()) {
      R3Move m = pick(rng, r3);
      return {{m}, r3_apply(d, m)};
    }
    auto [planted, next] = plant_triangle(rng, d);
    auto r3_after = r3_moves(next);
    if (!r3_after.empty()) {
      R3Move m = pick(rng, r3_after);
      planted.push_back(m);
      return {planted, r3_apply(next, m)};
    }
    if (!planted.empty()) return {planted, next};
  } else if (kind <= 5) {
    // A crossing-free knot cannot host both strands of a bigon.
    bool lonely = d.components.size() == 1 && d.components[0].passes.empty();
    if (!lonely) {
      R2Insert m = random_r2(rng, d);
      return {{m}, r2_insert(d, m)};
    }
  }
  R1Insert m = random_r1(rng, d);
  return {{m}, r1_insert(d, m)};
}

}  // namespace pcknot
