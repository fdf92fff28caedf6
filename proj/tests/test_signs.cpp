#include "support.hpp"
#include "pcknot/cable.hpp"
#include "pcknot/io.hpp"
#include "pcknot/random.hpp"
#include "pcknot/signs.hpp"

using namespace pcknot;

namespace {

const GaussianInt one{1, 0};
const GaussianInt i_{0, 1};


// S(a+bi) = b+ai
GaussianInt swap_parts(const GaussianInt& z) { return {z.im, z.re}; }

}  // namespace

TEST_CASE("the Mobius crossing has sign -i, its mirror +i") {
  CHECK(crossing_sign(fixture("mobius.pck"), 1) == -i_);
  CHECK(crossing_sign(relabel(fixture("mobius.pck")), 1) == i_);
  CHECK(crossing_sign(fixture("closed_k2_curl.pck"), 1).is_imaginary_unit());
}

TEST_CASE("crossing signs agree with the explicit cable") {
  Rng rng(41);
  int checked = 0;
  for (int k = 0; k < 300; ++k) {
    LinkDiagram d = random_diagram(rng, random_surface(rng, 3), RandomSpec{1 + k % 7, 1 + k % 3, false, 3});
    CableDiagram cable = explicit_cable(d);
    CHECK(validate(cable.diagram).empty());
    CHECK(cable.diagram.crossing_count() == 4 * d.crossing_count());
    CHECK(cable.diagram.components.size() == 2 * d.components.size());
    for (const auto& [x, corner] : d.corners) {
      CHECK(crossing_sign(d, x) == oracle_sign(cable, x));
      ++checked;
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("cable files round-trip and reproduce the signs") {
  Rng rng(43);
  for (int k = 0; k < 50; ++k) {
    LinkDiagram d = random_diagram(rng, random_surface(rng, 3), RandomSpec{1 + k % 5, 1, false, 2});
    CableDiagram reread = parse_cable(serialize_cable(explicit_cable(d)));
    CHECK(reread == explicit_cable(d));
    for (const auto& [x, corner] : d.corners) CHECK(oracle_sign(reread, x) == crossing_sign(d, x));
  }
}

TEST_CASE("cabling an orientation-reversing knot is refused") {
  auto rev = parse_diagram(read_file(std::string(FIXTURE_DIR) + "/../invalid/reversing.pck"));
  CHECK_THROWS_AS(explicit_cable(rev), DiagramError);
  CHECK_THROWS_AS(crossing_sign(rev, 1), DiagramError);
}

TEST_CASE("knot sign symmetries") {
  Rng rng(47);
  for (int k = 0; k < 200; ++k) {
    LinkDiagram d = random_diagram(rng, random_surface(rng, 3), RandomSpec{1 + k % 6, 1, false, 2});
    auto signs = crossing_signs(d);
    auto relabeled = crossing_signs(relabel(d));
    auto reversed = crossing_signs(reverse(d));
    for (const auto& [x, z] : signs) {
      CHECK(relabeled.at(x) == -z);
      CHECK(reversed.at(x) == -z);
      CHECK(crossing_sign(switch_crossing(d, x), x) == -z.conj());
    }
  }
}

TEST_CASE("link sign symmetries at crossings between components") {
  Rng rng(53);
  int checked = 0;
  for (int k = 0; k < 200; ++k) {
    LinkDiagram d = random_diagram(rng, random_surface(rng, 3), RandomSpec{2 + k % 6, 2, false, 2});
    DiagramIndex idx(d);
    for (const auto& [x, corner] : d.corners) {
      if (idx.is_self_crossing(x)) continue;
      ++checked;
      GaussianInt z = crossing_sign(d, x);
      const int over = idx.over(x).component, under = idx.under(x).component;
      CHECK(crossing_sign(relabel_component(d, over), x) == swap_parts(-z));
      CHECK(crossing_sign(relabel_component(d, under), x) == swap_parts(z));
      CHECK(crossing_sign(reverse_component(d, over), x) == swap_parts(z));
      CHECK(crossing_sign(reverse_component(d, under), x) == swap_parts(-z));
      CHECK(crossing_sign(relabel(d), x) == -z);
      CHECK(crossing_sign(reverse(d), x) == -z);
      CHECK(crossing_sign(switch_crossing(d, x), x) == -z.conj());
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("sign type follows the orientation character of the loops") {
  Rng rng(59);
  for (int k = 0; k < 200; ++k) {
    LinkDiagram d = random_diagram(rng, random_surface(rng, 3), RandomSpec{1 + k % 6, 1, false, 2});
    for (const auto& [x, z] : crossing_signs(d)) {
      auto [l1, l2] = loops_at(d, x);
      int a = w1(loop_word(d, l1), d.surface), b = w1(loop_word(d, l2), d.surface);
      CHECK(a == b);
      CHECK(z.is_real_unit() == (a == 0));
      CHECK(z.is_imaginary_unit() == (a == 1));
    }
  }
}

TEST_CASE("flat signs forget the real sign") {
  CHECK(flat_self_sign(one) == one);
  CHECK(flat_self_sign(-one) == one);
  CHECK(flat_self_sign(i_) == i_);
  CHECK(flat_self_sign(-i_) == -i_);
  auto flat = fixture("mobius_flat.pck");
  CHECK_THROWS_AS(crossing_sign(flat, 1), DiagramError);
  CHECK(sign_f1(flat, 1) == -i_);
}

TEST_CASE("the mirrored side convention equals relabeling") {
  Rng rng(61);
  for (int k = 0; k < 100; ++k) {
    LinkDiagram d = random_diagram(rng, random_surface(rng, 3), RandomSpec{1 + k % 6, 1 + k % 2, false, 2});
    CHECK(crossing_signs(d, SideConvention::mirrored) == crossing_signs(relabel(d)));
  }
}

TEST_CASE("a corrupted sign table disagrees with the cable") {
  SignRule bad(SideConvention::standard, {one, i_, -one, -i_});
  Rng rng(67);
  int disagreements = 0;
  for (int k = 0; k < 50; ++k) {
    LinkDiagram d = random_diagram(rng, random_surface(rng, 3), RandomSpec{1 + k % 5, 1, false, 2});
    CableDiagram cable = explicit_cable(d);
    for (const auto& [x, corner] : d.corners) disagreements += crossing_sign(d, x, bad) != oracle_sign(cable, x) ? 1 : 0;
  }
  CHECK(disagreements > 0);
}
