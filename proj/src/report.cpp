#include "pcknot/report.hpp"

#include <functional>

#include "pcknot/invariants.hpp"

namespace pcknot {

namespace {

const char* const kSign = "{id, -1}";
const char* const kKlein = "{id, -1, S, -S}";
const char* const kConj = "{id, conj}";
const char* const kAffine = "{id, P(x,y) -> -P(1/x,1/y)}";

std::vector<SymTensorValue> conj_all(const std::vector<SymTensorValue>& v) {
  std::vector<SymTensorValue> out;
  for (const SymTensorValue& t : v) out.push_back(t.conj());
  return out;
}

std::string format_degrees(const std::vector<SymTensorValue>& v, const SurfacePresentation& s) {
  if (v.empty()) return "0";
  std::string out;
  for (std::size_t n = 0; n < v.size(); ++n) {
    if (n) out += "; ";
    out += "d" + std::to_string(n + 1) + ": " + format_value(v[n], s);
  }
  return out;
}

class Builder {
 public:
  explicit Builder(const ReportOptions& o) : o_(o) {}

  // Adds a record unless filtered out. `blocker` names why the invariant
  // cannot be evaluated here; empty means evaluate `fill`.
  void add(const std::string& base, const std::string& name, const std::string& group, const std::string& blocker,
           const std::function<void(InvariantRecord&)>& fill) {
    if (o_.skip.count(base) != 0) return;
    if (o_.only && o_.only->count(base) == 0) return;
    InvariantRecord r{name, group, true, "", "", ""};
    if (!blocker.empty()) {
      r.supported = false;
      r.note = "unsupported: " + blocker;
    } else {
      fill(r);
    }
    out_.push_back(std::move(r));
  }

  std::vector<InvariantRecord> take() { return std::move(out_); }

 private:
  const ReportOptions& o_;
  std::vector<InvariantRecord> out_;
};

template <class V, class Canon, class Fmt>
void fill_pair(InvariantRecord& r, const V& raw, Canon canon, Fmt fmt) {
  r.raw = fmt(raw);
  r.canonical = fmt(canon(raw));
}

}  // namespace

const std::vector<std::string>& invariant_names() {
  static const std::vector<std::string> names{"delta",   "delta0",       "deltaH",   "bracket_delta",
                                              "flat_delta", "iterated_flat_delta", "affine_index",
                                              "linking", "intersection", "goldman"};
  return names;
}

std::vector<InvariantRecord> invariant_report(const LinkDiagram& d, const ReportOptions& o) {
  Builder b(o);
  const SurfacePresentation& s = d.surface;
  const SignRule& rule = o.rule;
  auto fmt = [&](const auto& v) { return format_value(v, s); };

  std::string reversing;
  for (std::size_t c = 0; c < d.components.size(); ++c) {
    if (!is_pseudo_classical(d, static_cast<int>(c))) {
      reversing = "orientation-reversing component " + std::to_string(c);
      break;
    }
  }
  const std::string closed = s.is_closed() ? "closed surface" : "";
  auto first_of = [](std::initializer_list<std::string> reasons) {
    for (const std::string& r : reasons) {
      if (!r.empty()) return r;
    }
    return std::string{};
  };
  const std::string flat = d.flat ? "flat diagram" : "";

  if (d.components.size() == 1) {
    b.add("delta", "delta", kSign, first_of({reversing, flat, closed}), [&](InvariantRecord& r) {
      fill_pair(r, delta(d, rule), [](const auto& v) { return canonical_up_to_sign(v); }, fmt);
    });
    b.add("delta0", "delta0", kSign, first_of({reversing, flat, closed}), [&](InvariantRecord& r) {
      fill_pair(r, delta0(d, rule), [](const auto& v) { return canonical_up_to_sign(v); }, fmt);
    });
    b.add("deltaH", "deltaH", kSign, first_of({reversing, flat}), [&](InvariantRecord& r) {
      fill_pair(r, delta_homology(d, rule), [](const auto& v) { return canonical_up_to_sign(v); }, fmt);
    });
    b.add("bracket_delta", "bracket_delta", kSign, first_of({reversing, flat, closed}), [&](InvariantRecord& r) {
      fill_pair(r, bracket_delta(d, rule), [](const auto& v) { return canonical_up_to_sign(v); }, fmt);
    });
    b.add("flat_delta", "flat_delta", kConj, first_of({reversing, closed}), [&](InvariantRecord& r) {
      fill_pair(r, flat_delta(d, o.ring, rule), [](const auto& v) { return canonical_up_to_conj(v); }, fmt);
    });
    b.add("iterated_flat_delta", "iterated_flat_delta", kConj, first_of({reversing, closed}), [&](InvariantRecord& r) {
      auto v = iterated_flat_delta(d, o.ring, rule);
      auto c = conj_all(v);
      r.raw = format_degrees(v, s);
      r.canonical = format_degrees(c < v ? c : v, s);
    });
    b.add("affine_index", "affine_index", kAffine, first_of({reversing, flat, closed}), [&](InvariantRecord& r) {
      r.raw = format_value(affine_index(d, rule));
      r.canonical = format_value(canonical_affine(affine_index(d, rule)));
    });
    return b.take();
  }

  for (int c1 = 0; c1 < static_cast<int>(d.components.size()); ++c1) {
    for (int c2 = c1 + 1; c2 < static_cast<int>(d.components.size()); ++c2) {
      std::string pair = "(" + std::to_string(c1) + "," + std::to_string(c2) + ")";
      b.add("linking", "linking" + pair, kKlein, first_of({reversing, flat}), [&](InvariantRecord& r) {
        GaussianInt v = linking(d, c1, c2, rule);
        r.raw = to_string(v);
        r.canonical = to_string(canonical_klein(v));
      });
      b.add("intersection", "intersection" + pair, kKlein, reversing, [&](InvariantRecord& r) {
        GaussianInt v = intersection_number(d, Loop::whole_component(c1), Loop::whole_component(c2), rule);
        r.raw = to_string(v);
        r.canonical = to_string(canonical_klein(v));
      });
      b.add("goldman", "goldman" + pair, kKlein, first_of({reversing, closed}), [&](InvariantRecord& r) {
        fill_pair(r, goldman(d, Loop::whole_component(c1), Loop::whole_component(c2), rule),
                  [](const auto& v) { return canonical_klein(v); }, fmt);
      });
    }
  }
  return b.take();
}

}  // namespace pcknot
