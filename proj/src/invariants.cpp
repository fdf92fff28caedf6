#include "pcknot/invariants.hpp"

#include <map>

#include "pcknot/io.hpp"

namespace pcknot {

namespace {

void require_knot(const LinkDiagram& d) {
  if (d.components.size() != 1) {
    throw DiagramError("knot invariant needs exactly one component, got " + std::to_string(d.components.size()));
  }
  if (!is_pseudo_classical(d, 0)) throw DiagramError("component 0 is orientation-reversing");
}

void require_free_group(const LinkDiagram& d) {
  if (d.surface.is_closed()) throw UnsupportedOperation("unsupported: closed surface");
}

FreeHomotopyClass loop_class(const LinkDiagram& d, const Loop& l) { return free_homotopy_class(loop_word(d, l), d.surface); }

}  // namespace

GaussianInt linking(const LinkDiagram& d, int c1, int c2, const SignRule& rule) {
  if (d.components.size() < 2) throw DiagramError("linking needs at least two components");
  if (c1 == c2) throw DiagramError("linking needs two distinct components");
  if (d.flat) throw DiagramError("linking needs over/under information; diagram is flat");
  DiagramIndex idx(d);
  GaussianInt sum;
  for (const auto& [x, corner] : d.corners) {
    int co = idx.over(x).component, cu = idx.under(x).component;
    if (co == c1 && cu == c2) {
      sum += raw_sign(idx, x, rule);
    } else if (co == c2 && cu == c1) {
      sum -= raw_sign(idx, x, rule);
    }
  }
  return sum;
}

GaussianInt intersection_number(const LinkDiagram& d, const Loop& a, const Loop& b, const SignRule& rule) {
  DiagramIndex idx(d);
  GaussianInt sum;
  for (int y : mutual_crossings(d, a, b)) {
    bool first_under = loop_contains(d, a, idx.under(y));
    sum += flat_pair_sign(raw_sign(idx, y, rule), first_under);
  }
  return sum;
}

BracketValue goldman(const LinkDiagram& d, const Loop& a, const Loop& b, const SignRule& rule) {
  require_free_group(d);
  DiagramIndex idx(d);
  BracketValue out;
  for (int y : mutual_crossings(d, a, b)) {
    bool first_under = loop_contains(d, a, idx.under(y));
    GaussianInt s = flat_pair_sign(raw_sign(idx, y, rule), first_under);
    out.add(free_homotopy_class(smooth(d, a, b, y), d.surface), s);
  }
  return out;
}

std::vector<DeltaTerm> delta_terms(const LinkDiagram& d, const SignRule& rule) {
  require_knot(d);
  if (d.flat) throw DiagramError("comultiplication needs over/under information; diagram is flat");
  DiagramIndex idx(d);
  std::vector<DeltaTerm> out;
  for (const auto& [x, corner] : d.corners) {
    auto [l1, l2] = loops_at(d, x);
    out.push_back({x, raw_sign(idx, x, rule), l1, l2});
  }
  return out;
}

Tensor2Value delta(const LinkDiagram& d, const SignRule& rule) {
  require_free_group(d);
  Tensor2Value out;
  for (const DeltaTerm& t : delta_terms(d, rule)) out.add({loop_class(d, t.first), loop_class(d, t.second)}, t.sign);
  return out;
}

Tensor2Value symmetrized(const Tensor2Value& v) {
  return v.map_keys([](const auto& k) { return k.second < k.first ? std::pair{k.second, k.first} : k; });
}

Tensor2Value delta0(const LinkDiagram& d, const SignRule& rule) {
  return delta(d, rule) + delta(relabel(reverse(d)), rule);
}

HomTensorValue delta_homology(const LinkDiagram& d, const SignRule& rule) {
  HomTensorValue out;
  for (const DeltaTerm& t : delta_terms(d, rule)) {
    HomologyClass h1 = homology_class(loop_word(d, t.first), d.surface);
    HomologyClass h2 = homology_class(loop_word(d, t.second), d.surface);
    if (h1.is_zero() || h2.is_zero()) continue;
    out.add({h1, h2}, t.sign);
  }
  return out;
}

HomTensorValue homology_projection(const Tensor2Value& v, const SurfacePresentation& s) {
  HomTensorValue out;
  for (const auto& [k, c] : v.terms()) out.add({homology_class(k.first.word, s), homology_class(k.second.word, s)}, c);
  return out;
}

BracketValue bracket_delta(const LinkDiagram& d, const SignRule& rule) {
  require_free_group(d);
  BracketValue out;
  for (const DeltaTerm& t : delta_terms(d, rule)) {
    BracketValue inner = goldman(d, t.first, t.second, rule);
    for (const auto& [cls, c] : inner.terms()) out.add(cls, t.sign * c);
  }
  return out;
}

SymTensorValue flat_delta(const LinkDiagram& d, BarRing ring, const SignRule& rule) {
  require_knot(d);
  require_free_group(d);
  DiagramIndex idx(d);
  SymTensorValue out(2);
  for (const auto& [x, corner] : d.corners) {
    auto [l1, l2] = loops_at(d, x);
    BarCoeff c = reduce_to_bar(flat_self_sign(raw_sign(idx, x, rule)), ring);
    out.add({loop_class(d, l1), loop_class(d, l2)}, c);
  }
  return out;
}

namespace {

struct Factor {
  LinkDiagram diagram;
  std::string key;
  FreeHomotopyClass cls;
};

Factor make_factor(LinkDiagram d) {
  d.flat = true;
  Factor f{d, serialize(d), free_homotopy_class(component_word(d, 0), d.surface)};
  return f;
}

struct Term {
  BarCoeff coeff;
  std::vector<Factor> factors;
};

using Level = std::map<std::vector<std::string>, Term>;

void accumulate(Level& level, std::vector<Factor> factors, BarCoeff c) {
  if (c.is_zero()) return;
  // Products with a contractible factor are zero and are not expanded further.
  for (const Factor& f : factors) {
    if (f.cls.contractible()) return;
  }
  std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) { return a.key < b.key; });
  std::vector<std::string> key;
  for (const Factor& f : factors) key.push_back(f.key);
  auto [it, inserted] = level.try_emplace(key, Term{c, std::move(factors)});
  if (!inserted) {
    it->second.coeff += c;
    if (it->second.coeff.is_zero()) level.erase(it);
  }
}

SymTensorValue to_value(const Level& level, std::size_t degree) {
  SymTensorValue v(degree);
  for (const auto& [key, t] : level) {
    std::vector<FreeHomotopyClass> classes;
    for (const Factor& f : t.factors) classes.push_back(f.cls);
    v.add(classes, t.coeff);
  }
  return v;
}

}  // namespace

std::vector<SymTensorValue> iterated_flat_delta(const LinkDiagram& d, BarRing ring, const SignRule& rule) {
  require_knot(d);
  require_free_group(d);
  std::vector<SymTensorValue> out;
  Level level;
  accumulate(level, {make_factor(d)}, BarCoeff{1, 0});
  std::size_t degree = 1;
  while (!level.empty()) {
    out.push_back(to_value(level, degree));
    Level next;
    for (const auto& [key, term] : level) {
      for (std::size_t i = 0; i < term.factors.size(); ++i) {
        const LinkDiagram& f = term.factors[i].diagram;
        // Orientation-reversing factors have no flat comultiplication.
        if (!is_pseudo_classical(f, 0)) continue;
        DiagramIndex idx(f);
        for (const auto& [x, corner] : f.corners) {
          BarCoeff s = reduce_to_bar(flat_self_sign(raw_sign(idx, x, rule)), ring);
          auto [l1, l2] = loops_at(f, x);
          std::vector<Factor> factors;
          for (std::size_t j = 0; j < term.factors.size(); ++j) {
            if (j != i) factors.push_back(term.factors[j]);
          }
          factors.push_back(make_factor(extract_subdiagram(f, l1)));
          factors.push_back(make_factor(extract_subdiagram(f, l2)));
          accumulate(next, std::move(factors), term.coeff * s);
        }
      }
    }
    level = std::move(next);
    ++degree;
  }
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

Laurent2 affine_index(const LinkDiagram& d, const SignRule& rule) {
  require_knot(d);
  require_free_group(d);
  if (d.flat) throw DiagramError("affine index needs over/under information; diagram is flat");
  DiagramIndex idx(d);
  Laurent2 out;
  for (const auto& [x, corner] : d.corners) {
    auto [l1, l2] = loops_at(d, x);
    if (loop_class(d, l1).contractible() || loop_class(d, l2).contractible()) continue;
    GaussianInt n = intersection_number(d, l1, l2, rule);
    out.add({static_cast<long long>(n.re), static_cast<long long>(n.im)}, raw_sign(idx, x, rule));
  }
  return out;
}

Laurent2 apply_index_map(const LinkDiagram& d, const std::vector<DeltaTerm>& terms, const SignRule& rule) {
  Laurent2 out;
  for (const DeltaTerm& t : terms) {
    std::pair<FreeHomotopyClass, FreeHomotopyClass> key{loop_class(d, t.first), loop_class(d, t.second)};
    if (ClassPairTraits::vanishes(key)) continue;
    GaussianInt n = intersection_number(d, t.first, t.second, rule);
    out.add({static_cast<long long>(n.re), static_cast<long long>(n.im)}, t.sign);
  }
  return out;
}

}  // namespace pcknot
