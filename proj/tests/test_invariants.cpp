#include "support.hpp"
#include "pcknot/invariants.hpp"
#include "pcknot/io.hpp"
#include "pcknot/random.hpp"
#include "pcknot/report.hpp"

using namespace pcknot;

namespace {

const GaussianInt one{1, 0};
const GaussianInt i_{0, 1};


const InvariantRecord& record(const std::vector<InvariantRecord>& rs, const std::string& name) {
  for (const auto& r : rs)
    if (r.name == name) return r;
  throw std::out_of_range("no record " + name);
}

FreeHomotopyClass cls(const std::string& w, const SurfacePresentation& s) { return free_homotopy_class(parse_word(w, s), s); }

}  // namespace

TEST_CASE("Mobius diagram values") {
  auto d = fixture("mobius.pck");
  const auto& s = d.surface;
  Tensor2Value expected;
  expected.add({cls("a", s), cls("a", s)}, -i_);
  CHECK(delta(d) == expected);
  CHECK(format_value(canonical_up_to_sign(delta(d)), s) == "+i·[a]⊗[a]");
  CHECK(format_value(canonical_affine(affine_index(d))) == "+i");
  CHECK(bracket_delta(d).is_zero());

  SymTensorValue flat(2);
  flat.add({cls("a", s), cls("a", s)}, BarCoeff{0, 1});
  CHECK(flat_delta(d) == flat);
  CHECK(flat_delta(d, BarRing::z2).is_zero());

  auto iterated = iterated_flat_delta(d);
  REQUIRE(iterated.size() == 2);
  CHECK(format_value(iterated[0], s) == "1·{[a.a]}");
  CHECK(iterated[1] == flat);
}

TEST_CASE("a crossing-free knot has vanishing invariants") {
  for (const char* name : {"unknot_aa.pck", "unknot_empty.pck"}) {
    auto d = fixture(name);
    CHECK(delta(d).is_zero());
    CHECK(delta0(d).is_zero());
    CHECK(delta_homology(d).is_zero());
    CHECK(bracket_delta(d).is_zero());
    CHECK(flat_delta(d).is_zero());
    CHECK(affine_index(d).is_zero());
  }
}

TEST_CASE("closed surfaces support only homology-level invariants") {
  auto rs = invariant_report(fixture("closed_k2_curl.pck"));
  CHECK_FALSE(record(rs, "delta").supported);
  CHECK(record(rs, "delta").note == "unsupported: closed surface");
  CHECK(record(rs, "deltaH").supported);
  CHECK_FALSE(record(rs, "flat_delta").supported);
  CHECK_THROWS_AS(goldman(fixture("closed_k2_curl.pck"), Loop::whole_component(0), Loop::whole_component(0)),
                  UnsupportedOperation);
}

TEST_CASE("flat diagrams report only flat invariants") {
  auto rs = invariant_report(fixture("mobius_flat.pck"));
  CHECK(record(rs, "delta").note == "unsupported: flat diagram");
  CHECK(record(rs, "flat_delta").supported);
}

TEST_CASE("affine index is the index map applied to delta") {
  Rng rng(71);
  for (int k = 0; k < 200; ++k) {
    LinkDiagram d = random_diagram(rng, random_surface(rng, 3), RandomSpec{1 + k % 7, 1, false, 2});
    CHECK(affine_index(d) == apply_index_map(d, delta_terms(d)));
  }
}

TEST_CASE("deltaH is the homology projection of delta") {
  Rng rng(73);
  for (int k = 0; k < 200; ++k) {
    LinkDiagram d = random_diagram(rng, random_surface(rng, 3), RandomSpec{1 + k % 7, 1, false, 2});
    CHECK(delta_homology(d) == homology_projection(delta(d), d.surface));
  }
}

TEST_CASE("delta terms reassemble into delta") {
  Rng rng(79);
  for (int k = 0; k < 100; ++k) {
    LinkDiagram d = random_diagram(rng, random_surface(rng, 3), RandomSpec{1 + k % 7, 1, false, 2});
    Tensor2Value sum;
    for (const DeltaTerm& t : delta_terms(d)) {
      sum.add({free_homotopy_class(loop_word(d, t.first), d.surface), free_homotopy_class(loop_word(d, t.second), d.surface)},
              t.sign);
    }
    CHECK(sum == delta(d));
  }
}

TEST_CASE("relabeling negates delta and keeps its canonical form") {
  Rng rng(83);
  for (int k = 0; k < 100; ++k) {
    LinkDiagram d = random_diagram(rng, random_surface(rng, 3), RandomSpec{1 + k % 7, 1, false, 2});
    CHECK(delta(relabel(d)) == negated(delta(d)));
    CHECK(canonical_up_to_sign(delta(relabel(d))) == canonical_up_to_sign(delta(d)));
    CHECK(canonical_affine(affine_index(relabel(d))) == canonical_affine(affine_index(d)));
  }
}

TEST_CASE("linking number") {
  Rng rng(89);
  for (int k = 0; k < 100; ++k) {
    LinkDiagram d = random_diagram(rng, random_surface(rng, 3), RandomSpec{1 + k % 6, 2, false, 2});
    GaussianInt lk = linking(d, 0, 1);
    CHECK(canonical_klein(linking(relabel(d), 0, 1)) == canonical_klein(lk));
    CHECK(linking(d, 1, 0) == -lk);
  }
  auto one_comp = fixture("mobius.pck");
  CHECK_THROWS(linking(one_comp, 0, 1));
}

TEST_CASE("intersection numbers are antisymmetric") {
  Rng rng(97);
  for (int k = 0; k < 100; ++k) {
    LinkDiagram d = random_diagram(rng, random_surface(rng, 3), RandomSpec{2 + k % 6, 1, false, 2});
    for (const auto& [x, corner] : d.corners) {
      auto [l1, l2] = loops_at(d, x);
      GaussianInt ab = intersection_number(d, l1, l2), ba = intersection_number(d, l2, l1);
      // Swapping the curves conjugates and negates the pair sign.
      CHECK(ba == -ab.conj());
    }
  }
}

TEST_CASE("iterated flat comultiplication is bounded by the crossing count") {
  Rng rng(101);
  for (int k = 0; k < 100; ++k) {
    LinkDiagram d = random_diagram(rng, random_surface(rng, 3), RandomSpec{k % 6, 1, k % 2 == 0, 2});
    auto degrees = iterated_flat_delta(d);
    CHECK(degrees.size() <= d.crossing_count() + 1);
    if (!degrees.empty()) CHECK_FALSE(degrees.back().is_zero());
  }
}

TEST_CASE("reports are deterministic and complete") {
  auto d = fixture("knot_05.pck");
  auto a = invariant_report(d), b = invariant_report(d);
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k].raw == b[k].raw);
  CHECK(a.size() == 7);
  ReportOptions skip;
  skip.skip = {"goldman", "delta"};
  CHECK(invariant_report(d, skip).size() == 6);
  auto link = invariant_report(fixture("link_10.pck"));
  CHECK(link.size() == 9);
}
