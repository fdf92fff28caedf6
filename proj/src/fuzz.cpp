#include "pcknot/fuzz.hpp"

#include <sstream>

#include "json.hpp"
#include "pcknot/invariants.hpp"
#include "pcknot/io.hpp"
#include "pcknot/random.hpp"

namespace pcknot {

using Json = nlohmann::ordered_json;

std::string to_string(FuzzMode m) {
  switch (m) {
    case FuzzMode::knot:
      return "knot";
    case FuzzMode::flat:
      return "flat";
    case FuzzMode::link:
      return "link";
  }
  return "knot";
}

FuzzMode parse_fuzz_mode(const std::string& text) {
  if (text == "knot") return FuzzMode::knot;
  if (text == "flat") return FuzzMode::flat;
  if (text == "link") return FuzzMode::link;
  throw std::invalid_argument("unknown fuzz mode '" + text + "' (expected knot, flat or link)");
}

SurfacePresentation parse_surface_spec(const std::string& text) {
  if (text.rfind("closed:", 0) == 0) {
    int k = std::stoi(text.substr(7));
    if (k < 1) throw std::invalid_argument("closed surface needs k >= 1");
    return SurfacePresentation::closed(k);
  }
  std::vector<Generator> gens;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos || colon == 0) throw std::invalid_argument("expected <symbol>:<w1>, got '" + item + "'");
    std::string bit = item.substr(colon + 1);
    if (bit != "0" && bit != "1") throw std::invalid_argument("w1 of '" + item.substr(0, colon) + "' must be 0 or 1");
    gens.push_back({item.substr(0, colon), bit == "1" ? 1 : 0});
  }
  return SurfacePresentation::with_boundary(gens);
}

std::set<std::string> compared_invariants(FuzzMode mode) {
  switch (mode) {
    case FuzzMode::knot:
      return {"delta", "delta0", "deltaH", "bracket_delta", "affine_index"};
    case FuzzMode::flat:
      return {"flat_delta"};
    case FuzzMode::link:
      return {"linking"};
  }
  return {};
}

bool FuzzCase::passed() const {
  if (!error.empty()) return false;
  for (const InvariantCheck& c : checks) {
    if (!c.passed()) return false;
  }
  for (auto [degree, crossings] : degree_bounds) {
    if (degree > crossings + 1) return false;
  }
  return true;
}

std::vector<Move> FuzzCase::reproduction() const {
  int last = error_move;
  for (const InvariantCheck& c : checks) {
    if (!c.passed() && (last < 0 || c.first_change < last)) last = c.first_change;
  }
  if (last < 0) return moves;
  return {moves.begin(), moves.begin() + last + 1};
}

int FuzzReport::failures() const {
  int n = 0;
  for (const FuzzCase& c : cases) n += c.passed() ? 0 : 1;
  return n;
}

namespace {

ReportOptions options_for(FuzzMode mode, const FuzzConfig& config) {
  ReportOptions o;
  o.rule = config.rule;
  std::set<std::string> only;
  for (const std::string& name : compared_invariants(mode)) {
    if (config.skip.count(name) == 0) only.insert(name);
  }
  o.only = only;
  return o;
}

void record_degree_bound(FuzzCase& c, const LinkDiagram& d, const FuzzConfig& config) {
  if (c.mode == FuzzMode::link || d.surface.is_closed()) return;
  auto degrees = iterated_flat_delta(d, BarRing::gaussian_mod2, config.rule);
  c.degree_bounds.emplace_back(degrees.size(), d.crossing_count());
}

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

FuzzCase replay(const LinkDiagram& initial, const std::vector<Move>& moves, FuzzMode mode, const FuzzConfig& config) {
  FuzzCase out;
  out.mode = mode;
  out.initial = initial;
  out.moves = moves;
  ReportOptions opts = options_for(mode, config);
  std::vector<InvariantRecord> before = invariant_report(initial, opts);
  std::vector<int> first_change(before.size(), -1);
  std::vector<InvariantRecord> at_change(before.size());
  LinkDiagram current = initial;
  for (std::size_t k = 0; k < moves.size(); ++k) {
    try {
      current = apply_move(current, moves[k]);
      auto violations = validate(current);
      if (!violations.empty()) throw std::logic_error("move left an invalid diagram: " + violations.front());
      auto now = invariant_report(current, opts);
      for (std::size_t i = 0; i < before.size(); ++i) {
        if (first_change[i] < 0 && now[i].canonical != before[i].canonical) {
          first_change[i] = static_cast<int>(k);
          at_change[i] = now[i];
        }
      }
    } catch (const std::exception& e) {
      out.error = "move " + std::to_string(k) + " (" + describe(moves[k], initial.surface) + "): " + e.what();
      out.error_move = static_cast<int>(k);
      break;
    }
  }
  std::vector<InvariantRecord> after = invariant_report(current, opts);
  for (std::size_t i = 0; i < before.size(); ++i) {
    out.checks.push_back({before[i].name, before[i], first_change[i] < 0 ? after[i] : at_change[i], first_change[i]});
  }
  try {
    record_degree_bound(out, initial, config);
    record_degree_bound(out, current, config);
  } catch (const std::exception& e) {
    if (out.error.empty()) out.error = std::string("iterated flat comultiplication: ") + e.what();
  }
  return out;
}

FuzzCase fuzz_case(std::uint64_t seed, const FuzzConfig& config) {
  Rng rng(seed);
  SurfacePresentation s = config.surface ? *config.surface : random_surface(rng, config.max_generators);
  RandomSpec spec;
  spec.crossings = uniform(rng, 0, config.max_crossings);
  spec.components = config.mode == FuzzMode::link ? 2 : 1;
  spec.flat = config.mode == FuzzMode::flat;
  LinkDiagram initial = random_diagram(rng, s, spec);

  const std::size_t target = static_cast<std::size_t>(uniform(rng, 1, std::max(1, config.max_moves)));
  std::vector<Move> moves;
  LinkDiagram current = initial;
  std::string generation_error;
  try {
    while (moves.size() < target) {
      auto step = random_moves(rng, current).first;
      for (const Move& m : step) {
        if (moves.size() >= target) break;
        current = apply_move(current, m);
        moves.push_back(m);
      }
    }
  } catch (const std::exception& e) {
    generation_error = e.what();
  }
  FuzzCase out = replay(initial, moves, config.mode, config);
  out.seed = seed;
  if (!generation_error.empty() && out.error.empty()) {
    out.error = "move generation: " + generation_error;
    out.error_move = static_cast<int>(moves.size());
  }
  return out;
}

FuzzReport fuzz(const FuzzConfig& config) {
  FuzzReport r;
  r.config = config;
  for (int i = 0; i < config.diagrams; ++i) {
    FuzzCase c = fuzz_case(config.seed + static_cast<std::uint64_t>(i), config);
    for (const InvariantCheck& ch : c.checks) {
      auto& t = r.tally[ch.name.substr(0, ch.name.find('('))];
      (ch.passed() ? t.first : t.second) += 1;
    }
    r.cases.push_back(std::move(c));
  }
  return r;
}

std::string summary(const FuzzReport& r) {
  std::ostringstream out;
  const FuzzConfig& c = r.config;
  out << "fuzz mode " << to_string(c.mode) << ", seeds " << c.seed << ".." << c.seed + static_cast<std::uint64_t>(c.diagrams) - 1
      << ", up to " << c.max_moves << " moves, up to " << c.max_crossings << " crossings\n";
  for (const auto& [name, counts] : r.tally) {
    out << "  " << name << ": " << counts.first << " preserved, " << counts.second << " changed\n";
  }
  int bound_ok = 0, bound_bad = 0, errors = 0;
  for (const FuzzCase& fc : r.cases) {
    for (auto [degree, crossings] : fc.degree_bounds) (degree <= crossings + 1 ? bound_ok : bound_bad) += 1;
    errors += fc.error.empty() ? 0 : 1;
  }
  if (c.mode != FuzzMode::link) {
    out << "  iterated_flat_delta degree bound: " << bound_ok << " within, " << bound_bad << " exceeded\n";
  }
  out << "  errors: " << errors << '\n';
  out << (r.failures() == 0 ? "PASS" : "FAIL") << ": " << r.cases.size() - static_cast<std::size_t>(r.failures()) << " of "
      << r.cases.size() << " cases clean\n";
  return out.str();
}

namespace {

Json move_json(const Move& m, const SurfacePresentation& s) {
  return std::visit(
      [&](const auto& mv) -> Json {
        using T = std::decay_t<decltype(mv)>;
        Json j;
        if constexpr (std::is_same_v<T, R1Insert>) {
          j["kind"] = "R1+";
          j["component"] = mv.component;
          j["edge"] = mv.edge;
          j["split"] = mv.split;
          j["chirality"] = mv.chirality == Corner::ccw ? "ccw" : "cw";
          j["over_first"] = mv.over_first;
        } else if constexpr (std::is_same_v<T, R1Remove>) {
          j["kind"] = "R1-";
          j["crossing"] = mv.crossing;
        } else if constexpr (std::is_same_v<T, R2Insert>) {
          j["kind"] = "R2+";
          j["a"] = {mv.component_a, mv.edge_a, mv.split_a};
          j["b"] = {mv.component_b, mv.edge_b, mv.split_b};
          j["band"] = format_word(mv.band, s);
          j["orientation"] = mv.orientation == Orientation::parallel ? "parallel" : "antiparallel";
          j["approach"] = mv.approach == Side::left ? "left" : "right";
          j["a_over"] = {mv.a_over_first, mv.a_over_second};
        } else if constexpr (std::is_same_v<T, R2Remove>) {
          j["kind"] = "R2-";
          j["crossings"] = {mv.first, mv.second};
        } else {
          j["kind"] = "R3";
          j["crossings"] = {mv.crossings[0], mv.crossings[1], mv.crossings[2]};
        }
        return j;
      },
      m);
}

Move move_from_json(const Json& j, const SurfacePresentation& s) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "R1+") {
    return R1Insert{j.at("component").get<int>(), j.at("edge").get<int>(), j.at("split").get<int>(),
                    j.at("chirality").get<std::string>() == "ccw" ? Corner::ccw : Corner::cw, j.at("over_first").get<bool>()};
  }
  if (kind == "R1-") return R1Remove{j.at("crossing").get<int>()};
  if (kind == "R2+") {
    R2Insert m;
    m.component_a = j.at("a").at(0).get<int>();
    m.edge_a = j.at("a").at(1).get<int>();
    m.split_a = j.at("a").at(2).get<int>();
    m.component_b = j.at("b").at(0).get<int>();
    m.edge_b = j.at("b").at(1).get<int>();
    m.split_b = j.at("b").at(2).get<int>();
    m.band = parse_word(j.at("band").get<std::string>(), s);
    m.orientation = j.at("orientation").get<std::string>() == "parallel" ? Orientation::parallel : Orientation::antiparallel;
    m.approach = j.at("approach").get<std::string>() == "left" ? Side::left : Side::right;
    m.a_over_first = j.at("a_over").at(0).get<bool>();
    m.a_over_second = j.at("a_over").at(1).get<bool>();
    return m;
  }
  if (kind == "R2-") return R2Remove{j.at("crossings").at(0).get<int>(), j.at("crossings").at(1).get<int>()};
  if (kind == "R3") {
    return R3Move{{j.at("crossings").at(0).get<int>(), j.at("crossings").at(1).get<int>(), j.at("crossings").at(2).get<int>()}};
  }
  throw std::invalid_argument("unknown move kind '" + kind + "'");
}

}  // namespace

std::string trace_json(const FuzzCase& c) {
  Json j;
  j["seed"] = c.seed;
  j["mode"] = to_string(c.mode);
  j["initial"] = serialize(c.initial);
  Json moves = Json::array();
  for (const Move& m : c.passed() ? c.moves : c.reproduction()) moves.push_back(move_json(m, c.initial.surface));
  j["moves"] = moves;
  Json failed = Json::array();
  for (const InvariantCheck& ch : c.checks) {
    if (ch.passed()) continue;
    failed.push_back({{"name", ch.name},
                      {"before", ch.before.canonical},
                      {"after", ch.after.canonical},
                      {"first_change", ch.first_change}});
  }
  j["changed"] = failed;
  if (!c.error.empty()) j["error"] = c.error;
  return j.dump(2) + "\n";
}

Trace parse_trace(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("trace is not valid JSON: ") + e.what());
  }
  try {
    Trace t;
    t.seed = j.at("seed").get<std::uint64_t>();
    t.mode = parse_fuzz_mode(j.at("mode").get<std::string>());
    t.initial = parse_diagram(j.at("initial").get<std::string>());
    for (const Json& m : j.at("moves")) t.moves.push_back(move_from_json(m, t.initial.surface));
    return t;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed trace: ") + e.what());
  }
}

}  // namespace pcknot
