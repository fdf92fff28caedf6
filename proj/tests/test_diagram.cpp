#include <filesystem>

#include "support.hpp"
#include "pcknot/io.hpp"
#include "pcknot/random.hpp"
#include "pcknot/signs.hpp"

using namespace pcknot;

namespace {


std::vector<std::filesystem::path> fixture_files() {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(FIXTURE_DIR)) {
    if (e.path().extension() == ".pck") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("every fixture is valid and round-trips bit-exactly") {
  auto files = fixture_files();
  CHECK(files.size() >= 50);
  for (const auto& f : files) {
    CAPTURE(f.string());
    std::string text = read_file(f.string());
    LinkDiagram d = parse_diagram(text);
    CHECK(validate(d).empty());
    CHECK(serialize(d) == text);
    CHECK(parse_diagram(serialize(d)) == d);
  }
}

TEST_CASE("random diagrams round-trip") {
  Rng rng(29);
  for (int k = 0; k < 200; ++k) {
    LinkDiagram d = random_diagram(rng, random_surface(rng, 3), RandomSpec{k % 7, 1 + k % 3, k % 4 == 0, 3});
    CHECK(parse_diagram(serialize(d)) == d);
  }
}

TEST_CASE("parse errors carry line and column") {
  try {
    parse_diagram("surface boundary\ngen a 1\ncomponent\n  edge a.q\nlabeling 0\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() == 8);
  }
  CHECK_THROWS_AS(parse_diagram("surface boundary\ngen a 1\ncomponent\n  pass sideways 1\n"), ParseError);
  CHECK_THROWS_AS(parse_diagram("surface boundary\ngen a 0\ncomponent\n  edge .\nlabeling 0\n"), ParseError);
  CHECK_THROWS_AS(parse_diagram("surface boundary\ngen a 1\ncomponent\n  pass over 1\nlabeling 0\n"), ParseError);
}

TEST_CASE("validation lists structural violations") {
  auto d = fixture("mobius.pck");
  CHECK(validate(d).empty());

  auto doubled = d;
  doubled.components[0].passes[1].role = Role::over;
  CHECK_FALSE(validate(doubled).empty());

  auto missing_corner = d;
  missing_corner.corners.clear();
  CHECK_FALSE(validate(missing_corner).empty());

  auto short_edges = d;
  short_edges.components[0].edges.pop_back();
  CHECK_FALSE(validate(short_edges).empty());
}

TEST_CASE("pseudo-classical means even total w1") {
  CHECK(is_pseudo_classical(fixture("mobius.pck"), 0));
  CHECK(is_pseudo_classical(fixture("unknot_aa.pck"), 0));
  auto rev = parse_diagram(read_file(std::string(FIXTURE_DIR) + "/../invalid/reversing.pck"));
  CHECK_FALSE(is_pseudo_classical(rev, 0));
}

TEST_CASE("the crossing of the Mobius diagram splits it into two a-loops") {
  auto d = fixture("mobius.pck");
  auto [l1, l2] = loops_at(d, 1);
  CHECK(format_word(loop_word(d, l1), d.surface) == "a");
  CHECK(format_word(loop_word(d, l2), d.surface) == "a");
  CHECK(mutual_crossings(d, l1, l2).empty());
}

TEST_CASE("relabel, reverse and switch are involutions") {
  Rng rng(31);
  for (int k = 0; k < 100; ++k) {
    LinkDiagram d = random_diagram(rng, random_surface(rng, 3), RandomSpec{1 + k % 6, 1 + k % 2, false, 2});
    CHECK(relabel(relabel(d)) == d);
    CHECK(crossing_signs(reverse(reverse(d))) == crossing_signs(d));
    int x = d.corners.begin()->first;
    CHECK(switch_crossing(switch_crossing(d, x), x) == d);
    CHECK(validate(reverse(d)).empty());
    CHECK(validate(flatten(d)).empty());
  }
}

TEST_CASE("moving the basepoint along an edge flips the labeling by its w1") {
  Rng rng(37);
  for (int k = 0; k < 100; ++k) {
    LinkDiagram d = random_diagram(rng, random_surface(rng, 3), RandomSpec{2 + k % 5, 1, false, 2});
    LinkDiagram moved = d;
    auto& c = moved.components[0];
    c.labeling ^= w1(c.edges[0], d.surface);
    std::rotate(c.passes.begin(), c.passes.begin() + 1, c.passes.end());
    std::rotate(c.edges.begin(), c.edges.begin() + 1, c.edges.end());
    CHECK(crossing_signs(moved) == crossing_signs(d));
  }
}
