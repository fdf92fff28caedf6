#include "support.hpp"
#include "pcknot/fuzz.hpp"
#include "pcknot/io.hpp"

using namespace pcknot;

namespace {

FuzzConfig small(FuzzMode mode, int diagrams = 30) {
  FuzzConfig c;
  c.mode = mode;
  c.diagrams = diagrams;
  return c;
}

int changed(const FuzzReport& r, const std::string& name) {
  auto it = r.tally.find(name);
  return it == r.tally.end() ? 0 : it->second.second;
}

}  // namespace

TEST_CASE("surface specs") {
  auto s = parse_surface_spec("a:1,b:0");
  REQUIRE(s.generators().size() == 2);
  CHECK(s.generators()[0].w1 == 1);
  CHECK(s.generators()[1].w1 == 0);
  CHECK(parse_surface_spec("closed:3").closed_genus() == 3);
  CHECK_THROWS(parse_surface_spec("a:2"));
  CHECK_THROWS(parse_surface_spec("b:0"));
  CHECK_THROWS(parse_surface_spec("closed:0"));
  CHECK(parse_fuzz_mode("link") == FuzzMode::link);
  CHECK_THROWS(parse_fuzz_mode("spiral"));
}

TEST_CASE("fuzz summaries are reproducible") {
  auto c = small(FuzzMode::knot, 10);
  CHECK(summary(fuzz(c)) == summary(fuzz(c)));
}

TEST_CASE("flat and link campaigns are clean") {
  for (FuzzMode m : {FuzzMode::flat, FuzzMode::link}) {
    FuzzReport r = fuzz(small(m));
    CHECK(r.failures() == 0);
    for (const auto& c : r.cases) CHECK(c.error.empty());
  }
}

TEST_CASE("the tensor-level comultiplications survive knot campaigns") {
  FuzzReport r = fuzz(small(FuzzMode::knot));
  for (const char* name : {"delta", "delta0", "deltaH"}) CHECK(changed(r, name) == 0);
  for (const auto& c : r.cases) {
    CHECK(c.error.empty());
    for (auto [degree, crossings] : c.degree_bounds) CHECK(degree <= crossings + 1);
  }
}

TEST_CASE("fixed surfaces are honoured") {
  FuzzConfig c = small(FuzzMode::knot, 10);
  c.surface = parse_surface_spec("x:1,y:0");
  for (const auto& fc : fuzz(c).cases) CHECK(fc.initial.surface == *c.surface);
  c.surface = parse_surface_spec("closed:2");
  FuzzReport closed = fuzz(c);
  CHECK(changed(closed, "deltaH") == 0);
}

TEST_CASE("a corrupted sign table is caught") {
  const GaussianInt one{1, 0}, i_{0, 1};
  // A table giving +1 to two cable configurations makes the sign of a curl
  // depend on its chirality, which both campaigns see.
  for (FuzzMode m : {FuzzMode::knot, FuzzMode::flat}) {
    FuzzConfig c = small(m, 40);
    c.rule = SignRule(SideConvention::standard, {one, one, -one, -i_});
    CHECK(fuzz(c).failures() > 0);
  }
  // Swapping a real and an imaginary entry breaks delta itself.
  FuzzConfig c = small(FuzzMode::knot, 40);
  c.rule = SignRule(SideConvention::standard, {one, i_, -one, -i_});
  CHECK(changed(fuzz(c), "delta") > 0);
  // -conj of the standard table is the mirror convention: consistent, so
  // nothing changes.
  c.rule = SignRule(SideConvention::standard, {i_, -one, one, -i_});
  CHECK(changed(fuzz(c), "delta") == 0);
}

TEST_CASE("traces replay bit-exactly") {
  FuzzConfig c = small(FuzzMode::knot, 20);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    FuzzCase fc = fuzz_case(seed, c);
    Trace t = parse_trace(trace_json(fc));
    CHECK(t.seed == seed);
    CHECK(t.initial == fc.initial);
    FuzzCase again = replay(t.initial, t.moves, t.mode, c);
    again.seed = seed;
    if (fc.passed()) {
      CHECK(trace_json(again) == trace_json(fc));
    } else {
      // The trace stops at the first failing move and fails there again.
      CHECK_FALSE(again.passed());
      CHECK(t.moves.size() <= fc.moves.size());
      REQUIRE(again.checks.size() == fc.checks.size());
      for (std::size_t k = 0; k < fc.checks.size(); ++k) {
        if (fc.checks[k].first_change >= 0 && fc.checks[k].first_change < static_cast<int>(t.moves.size()))
          CHECK(again.checks[k].first_change == fc.checks[k].first_change);
      }
    }
  }
  CHECK_THROWS_AS(parse_trace("{"), std::invalid_argument);
  CHECK_THROWS_AS(parse_trace("{\"seed\": 1}"), std::invalid_argument);
}

TEST_CASE("skipped invariants are not compared") {
  FuzzConfig c = small(FuzzMode::knot, 10);
  c.skip = {"bracket_delta", "affine_index"};
  FuzzReport r = fuzz(c);
  CHECK(r.tally.count("affine_index") == 0);
  CHECK(r.failures() == 0);
}
