#include "pcknot/diagram.hpp"

#include <set>

namespace pcknot {

DiagramIndex::DiagramIndex(const LinkDiagram& d) : d_(&d) {
  parity_.resize(d.components.size());
  total_parity_.resize(d.components.size());
  for (std::size_t c = 0; c < d.components.size(); ++c) {
    const DiagramComponent& comp = d.components[c];
    int p = 0;
    for (std::size_t j = 0; j < comp.passes.size(); ++j) {
      parity_[c].push_back(p);
      p ^= w1(comp.edges.at(j), d.surface);
      auto& slot = where_[comp.passes[j].crossing];
      slot[comp.passes[j].role == Role::over ? 0 : 1] = {static_cast<int>(c), static_cast<int>(j)};
    }
    if (comp.passes.empty() && !comp.edges.empty()) p = w1(comp.edges[0], d.surface);
    total_parity_[c] = p;
  }
}

const std::array<PassLocation, 2>& DiagramIndex::at(int crossing) const {
  auto it = where_.find(crossing);
  if (it == where_.end()) throw DiagramError("crossing " + std::to_string(crossing) + " not found");
  return it->second;
}

std::vector<std::string> validate(const LinkDiagram& d) {
  std::vector<std::string> out;
  std::map<int, std::array<int, 2>> uses;
  for (std::size_t c = 0; c < d.components.size(); ++c) {
    const DiagramComponent& comp = d.components[c];
    std::string where = "component " + std::to_string(c);
    if (comp.passes.empty() && comp.edges.size() != 1) {
      out.push_back(where + ": crossing-free component needs exactly one closed edge word");
    } else if (!comp.passes.empty() && comp.edges.size() != comp.passes.size()) {
      out.push_back(where + ": " + std::to_string(comp.passes.size()) + " passes but " +
                    std::to_string(comp.edges.size()) + " edge words");
    }
    if (comp.labeling != 0 && comp.labeling != 1) out.push_back(where + ": labeling must be 0 or 1");
    for (std::size_t j = 0; j < comp.edges.size(); ++j) {
      try {
        check_word(comp.edges[j], d.surface);
      } catch (const std::out_of_range&) {
        out.push_back(where + ": edge " + std::to_string(j) + " uses a generator outside the surface");
      }
    }
    for (const PassRef& p : comp.passes) uses[p.crossing][p.role == Role::over ? 0 : 1]++;
  }
  for (const auto& [x, n] : uses) {
    std::string where = "crossing " + std::to_string(x);
    if (n[0] != 1) out.push_back(where + ": over pass used " + std::to_string(n[0]) + " times");
    if (n[1] != 1) out.push_back(where + ": under pass used " + std::to_string(n[1]) + " times");
    if (!d.corners.count(x)) out.push_back(where + ": missing corner bit");
  }
  for (const auto& [x, corner] : d.corners) {
    if (!uses.count(x)) out.push_back("crossing " + std::to_string(x) + ": corner bit for a crossing with no passes");
  }
  return out;
}

Word component_word(const LinkDiagram& d, int component) {
  Word w;
  for (const Word& e : d.components.at(static_cast<std::size_t>(component)).edges) w = w * e;
  return w;
}

bool is_pseudo_classical(const LinkDiagram& d, int component) {
  return w1(component_word(d, component), d.surface) == 0;
}

int twist_parity(const LinkDiagram& d, int component, int position) {
  if (!is_pseudo_classical(d, component)) {
    throw DiagramError("component " + std::to_string(component) + " is orientation-reversing");
  }
  const auto& edges = d.components.at(static_cast<std::size_t>(component)).edges;
  if (position < 0 || static_cast<std::size_t>(position) > edges.size()) throw DiagramError("position out of range");
  int p = 0;
  for (int j = 0; j < position; ++j) p ^= w1(edges[static_cast<std::size_t>(j)], d.surface);
  return p;
}

namespace {

int component_size(const LinkDiagram& d, int c) {
  return static_cast<int>(d.components.at(static_cast<std::size_t>(c)).passes.size());
}

const Word& edge(const LinkDiagram& d, int c, int j) {
  const auto& comp = d.components.at(static_cast<std::size_t>(c));
  return comp.edges.at(static_cast<std::size_t>(j));
}

// Edge indices covered by the loop, in traversal order.
std::vector<int> covered_edges(const LinkDiagram& d, const Loop& l) {
  int n = component_size(d, l.component);
  std::vector<int> out;
  if (n == 0) return {0};
  if (l.whole) {
    for (int j = 0; j < n; ++j) out.push_back(j);
    return out;
  }
  int m = ((l.end - l.start) % n + n) % n;
  if (m == 0) m = n;
  for (int t = 0; t < m; ++t) out.push_back((l.start + t) % n);
  return out;
}

}  // namespace

int edge_count(const LinkDiagram& d, const Loop& l) { return static_cast<int>(covered_edges(d, l).size()); }

Word loop_word(const LinkDiagram& d, const Loop& l) {
  Word w;
  for (int j : covered_edges(d, l)) w = w * edge(d, l.component, j);
  return w;
}

bool loop_contains(const LinkDiagram& d, const Loop& l, PassLocation p) {
  if (p.component != l.component) return false;
  if (l.whole) return true;
  int n = component_size(d, l.component);
  int offset = ((p.index - l.start) % n + n) % n;
  int len = ((l.end - l.start) % n + n) % n;
  return offset > 0 && offset < len;
}

Word rebased_word(const LinkDiagram& d, const Loop& l, int index) {
  if (!loop_contains(d, l, {l.component, index})) throw DiagramError("rebase point is not inside the loop");
  std::vector<int> edges = covered_edges(d, l);
  std::size_t at = 0;
  while (edges[at] != index) ++at;
  Word w;
  for (std::size_t t = 0; t < edges.size(); ++t) w = w * edge(d, l.component, edges[(at + t) % edges.size()]);
  return w;
}

std::pair<Loop, Loop> loops_at(const LinkDiagram& d, int crossing) {
  DiagramIndex idx(d);
  PassLocation o = idx.over(crossing);
  PassLocation u = idx.under(crossing);
  if (o.component != u.component) {
    throw DiagramError("crossing " + std::to_string(crossing) + " joins two components; it has no loops");
  }
  return {Loop{o.component, o.index, u.index, false}, Loop{o.component, u.index, o.index, false}};
}

std::vector<int> mutual_crossings(const LinkDiagram& d, const Loop& a, const Loop& b) {
  DiagramIndex idx(d);
  std::vector<int> out;
  for (const auto& [x, corner] : d.corners) {
    PassLocation o = idx.over(x), u = idx.under(x);
    if ((loop_contains(d, a, o) && loop_contains(d, b, u)) || (loop_contains(d, a, u) && loop_contains(d, b, o))) {
      out.push_back(x);
    }
  }
  return out;
}

LinkDiagram extract_subdiagram(const LinkDiagram& d, const Loop& l) {
  DiagramIndex idx(d);
  const DiagramComponent& comp = d.components.at(static_cast<std::size_t>(l.component));
  int n = static_cast<int>(comp.passes.size());

  // Alternating walk of the loop: pass indices (>= 0) and edge words.
  struct Step {
    int pass;
    const Word* word;
  };
  std::vector<Step> walk;
  int start_parity = 0;
  if (n == 0) {
    walk.push_back({-1, &comp.edges.at(0)});
  } else if (l.whole) {
    for (int j = 0; j < n; ++j) {
      walk.push_back({j, nullptr});
      walk.push_back({-1, &comp.edges[static_cast<std::size_t>(j)]});
    }
  } else {
    start_parity = idx.parity({l.component, l.start});
    std::vector<int> edges = covered_edges(d, l);
    for (std::size_t t = 0; t < edges.size(); ++t) {
      if (t) walk.push_back({edges[t], nullptr});
      walk.push_back({-1, &comp.edges[static_cast<std::size_t>(edges[t])]});
    }
  }

  auto kept = [&](int j) {
    int x = comp.passes[static_cast<std::size_t>(j)].crossing;
    return loop_contains(d, l, idx.over(x)) && loop_contains(d, l, idx.under(x));
  };

  LinkDiagram out;
  out.surface = d.surface;
  out.flat = true;
  DiagramComponent sub;
  Word leading, current;
  bool seen_kept = false;
  int first_kept = -1;
  for (const Step& s : walk) {
    if (s.pass < 0) {
      current = current * *s.word;
      continue;
    }
    if (!kept(s.pass)) continue;
    if (seen_kept) {
      sub.edges.push_back(current);
    } else {
      leading = current;
      first_kept = s.pass;
    }
    current = Word{};
    seen_kept = true;
    const PassRef& p = comp.passes[static_cast<std::size_t>(s.pass)];
    sub.passes.push_back(p);
    out.corners[p.crossing] = d.corners.at(p.crossing);
  }
  if (seen_kept) {
    sub.edges.push_back(current * leading);
    sub.labeling = comp.labeling ^ idx.parity({l.component, first_kept});
  } else {
    sub.edges.push_back(current);
    sub.labeling = comp.labeling ^ start_parity;
  }
  out.components.push_back(std::move(sub));
  return out;
}

Word smooth(const LinkDiagram& d, const Loop& a, const Loop& b, int y) {
  DiagramIndex idx(d);
  PassLocation o = idx.over(y), u = idx.under(y);
  PassLocation in_a, in_b;
  if (loop_contains(d, a, o) && loop_contains(d, b, u)) {
    in_a = o;
    in_b = u;
  } else if (loop_contains(d, a, u) && loop_contains(d, b, o)) {
    in_a = u;
    in_b = o;
  } else {
    throw DiagramError("crossing " + std::to_string(y) + " is not a mutual crossing of the two curves");
  }
  return rebased_word(d, a, in_a.index) * rebased_word(d, b, in_b.index);
}

LinkDiagram reverse_component(const LinkDiagram& d, int component) {
  LinkDiagram r = d;
  DiagramComponent& comp = r.components.at(static_cast<std::size_t>(component));
  const DiagramComponent& old = d.components[static_cast<std::size_t>(component)];
  std::size_t n = old.passes.size();
  if (n == 0) {
    comp.edges[0] = old.edges[0].inverse();
  } else {
    for (std::size_t k = 0; k < n; ++k) {
      comp.passes[k] = old.passes[(n - k) % n];
      comp.edges[k] = old.edges[n - k - 1].inverse();
    }
  }
  comp.labeling ^= 1;

  DiagramIndex idx(d);
  for (auto& [x, corner] : r.corners) {
    bool o = idx.over(x).component == component;
    bool u = idx.under(x).component == component;
    if (o != u) corner = flipped(corner);
  }
  return r;
}

LinkDiagram reverse(const LinkDiagram& d) {
  LinkDiagram r = d;
  for (std::size_t c = 0; c < d.components.size(); ++c) r = reverse_component(r, static_cast<int>(c));
  return r;
}

LinkDiagram relabel_component(const LinkDiagram& d, int component) {
  LinkDiagram r = d;
  r.components.at(static_cast<std::size_t>(component)).labeling ^= 1;
  return r;
}

LinkDiagram relabel(const LinkDiagram& d) {
  LinkDiagram r = d;
  for (auto& c : r.components) c.labeling ^= 1;
  return r;
}

LinkDiagram switch_crossing(const LinkDiagram& d, int crossing) {
  LinkDiagram r = d;
  auto it = r.corners.find(crossing);
  if (it == r.corners.end()) throw DiagramError("crossing " + std::to_string(crossing) + " not found");
  it->second = flipped(it->second);
  for (auto& comp : r.components) {
    for (auto& p : comp.passes) {
      if (p.crossing == crossing) p.role = opposite(p.role);
    }
  }
  return r;
}

LinkDiagram flatten(const LinkDiagram& d) {
  LinkDiagram r = d;
  r.flat = true;
  return r;
}

}  // namespace pcknot
