// Command-line front end. Exit codes: 0 success, 1 domain failure (invalid
// diagram, distinguished pair, failed fuzz case), 2 usage or parse error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pcknot/cable.hpp"
#include "pcknot/fuzz.hpp"
#include "pcknot/io.hpp"
#include "pcknot/report.hpp"

using namespace pcknot;

namespace {

constexpr int kOk = 0;
constexpr int kDomain = 1;
constexpr int kUsage = 2;

// Thrown for problems that belong to the caller's input rather than to the
// mathematics: unreadable files, malformed flags.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

LinkDiagram load(const std::string& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  try {
    return parse_diagram(text);
  } catch (const ParseError& e) {
    throw UsageError(path + ":" + e.what());
  }
}

// Loads and validates; prints the violations and returns nullopt when invalid.
std::optional<LinkDiagram> load_valid(const std::string& path) {
  LinkDiagram d = load(path);
  auto violations = validate(d);
  if (violations.empty()) return d;
  std::cerr << path << ": invalid diagram\n";
  for (const std::string& v : violations) std::cerr << "  " << v << '\n';
  return std::nullopt;
}

BarRing parse_ring(const std::string& text) {
  if (text == "gaussian-mod2") return BarRing::gaussian_mod2;
  if (text == "z2") return BarRing::z2;
  throw UsageError("unknown bar ring '" + text + "' (expected gaussian-mod2 or z2)");
}

std::set<std::string> parse_skip(const std::vector<std::string>& names) {
  const auto& known = invariant_names();
  std::set<std::string> out;
  for (const std::string& n : names) {
    if (std::find(known.begin(), known.end(), n) == known.end()) throw UsageError("unknown invariant '" + n + "'");
    out.insert(n);
  }
  return out;
}

GaussianInt parse_unit(const std::string& t) {
  if (t == "1" || t == "+1") return {1, 0};
  if (t == "-1") return {-1, 0};
  if (t == "i" || t == "+i") return {0, 1};
  if (t == "-i") return {0, -1};
  if (t == "0") return {0, 0};
  throw UsageError("sign table entries are 0, 1, -1, i or -i; got '" + t + "'");
}

// "i,1,-1,-i": entries for (over left, under left) = (0,0), (0,1), (1,0), (1,1).
SignRule::Table parse_sign_table(const std::string& text) {
  SignRule::Table t{};
  std::stringstream ss(text);
  std::string item;
  std::size_t k = 0;
  while (std::getline(ss, item, ',')) {
    if (k == t.size()) throw UsageError("sign table needs exactly four entries");
    t[k++] = parse_unit(item);
  }
  if (k != t.size()) throw UsageError("sign table needs exactly four entries");
  return t;
}

int cmd_validate(const std::string& path) {
  LinkDiagram d = load(path);
  auto violations = validate(d);
  for (const std::string& v : violations) std::cout << v << '\n';
  if (violations.empty()) std::cout << "valid\n";
  return violations.empty() ? kOk : kDomain;
}

int cmd_invariants(const std::string& path, bool json, const std::string& ring, const std::vector<std::string>& skip) {
  auto d = load_valid(path);
  if (!d) return kDomain;
  ReportOptions opts;
  opts.ring = parse_ring(ring);
  opts.skip = parse_skip(skip);
  auto records = invariant_report(*d, opts);
  if (json) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const InvariantRecord& r : records) {
      nlohmann::ordered_json j;
      j["name"] = r.name;
      j["group"] = r.group;
      j["supported"] = r.supported;
      if (r.supported) {
        j["raw"] = r.raw;
        j["canonical"] = r.canonical;
      } else {
        j["note"] = r.note;
      }
      doc.push_back(j);
    }
    std::cout << doc.dump(2) << '\n';
    return kOk;
  }
  for (const InvariantRecord& r : records) {
    if (!r.supported) {
      std::cout << r.name << ": " << r.note << '\n';
      continue;
    }
    std::cout << r.name << '\n'
              << "  raw:       " << r.raw << '\n'
              << "  canonical: " << r.canonical << '\n'
              << "  group:     " << r.group << '\n';
  }
  return kOk;
}

struct FuzzArgs {
  std::uint64_t seed = 1;
  int seeds = 100;
  int crossings = 6;
  int moves = 10;
  int generators = 3;
  std::string surface;
  std::string mode = "all";
  std::vector<std::string> skip;
  std::string sign_table;
  std::string trace_dir = "fuzz-traces";
};

int cmd_fuzz(const FuzzArgs& a) {
  FuzzConfig base;
  base.seed = a.seed;
  base.diagrams = a.seeds;
  base.max_crossings = a.crossings;
  base.max_moves = a.moves;
  base.max_generators = a.generators;
  base.skip = parse_skip(a.skip);
  if (!a.surface.empty()) {
    try {
      base.surface = parse_surface_spec(a.surface);
    } catch (const std::exception& e) {
      throw UsageError(std::string("--surface-spec: ") + e.what());
    }
  }
  if (!a.sign_table.empty()) base.rule = SignRule(SideConvention::standard, parse_sign_table(a.sign_table));

  std::vector<FuzzMode> modes;
  if (a.mode == "all") {
    modes = {FuzzMode::knot, FuzzMode::flat, FuzzMode::link};
  } else {
    try {
      modes = {parse_fuzz_mode(a.mode)};
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
  }

  int failures = 0;
  for (FuzzMode m : modes) {
    FuzzConfig config = base;
    config.mode = m;
    FuzzReport report = fuzz(config);
    std::cout << summary(report);
    failures += report.failures();
    for (const FuzzCase& c : report.cases) {
      if (c.passed()) continue;
      std::filesystem::create_directories(a.trace_dir);
      auto file = std::filesystem::path(a.trace_dir) / ("trace-" + to_string(m) + "-" + std::to_string(c.seed) + ".json");
      std::ofstream(file) << trace_json(c);
    }
  }
  if (failures > 0) std::cout << failures << " failing trace(s) written to " << a.trace_dir << '\n';
  return failures == 0 ? kOk : kDomain;
}

int cmd_cable(const std::string& path, const std::string& output) {
  auto d = load_valid(path);
  if (!d) return kDomain;
  std::string text;
  try {
    text = serialize_cable(explicit_cable(*d));
  } catch (const DiagramError& e) {
    std::cerr << "cannot cable: " << e.what() << '\n';
    return kDomain;
  }
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream(output) << text;
  }
  return kOk;
}

int cmd_compare(const std::string& path_a, const std::string& path_b, const std::string& ring) {
  auto a = load_valid(path_a);
  auto b = load_valid(path_b);
  if (!a || !b) return kDomain;
  if (!(a->surface == b->surface)) {
    std::cerr << "surface mismatch: the diagrams live on differently presented surfaces\n";
    return kDomain;
  }
  ReportOptions opts;
  opts.ring = parse_ring(ring);
  std::map<std::string, InvariantRecord> left, right;
  std::vector<std::string> order;
  for (auto& r : invariant_report(*a, opts)) {
    order.push_back(r.name);
    left[r.name] = r;
  }
  for (auto& r : invariant_report(*b, opts)) {
    if (!left.count(r.name)) order.push_back(r.name);
    right[r.name] = r;
  }
  bool distinguished = false;
  for (const std::string& name : order) {
    auto l = left.find(name);
    auto r = right.find(name);
    if (l == left.end() || r == right.end()) {
      std::cout << name << ": only defined for " << (l == left.end() ? "B" : "A") << '\n';
      distinguished = true;
      continue;
    }
    if (!l->second.supported || !r->second.supported) {
      std::cout << name << ": not compared ("
                << (!l->second.supported ? l->second.note : r->second.note) << ")\n";
      continue;
    }
    bool equal = l->second.canonical == r->second.canonical;
    distinguished = distinguished || !equal;
    std::cout << name << ": " << (equal ? "equal" : "distinct") << '\n';
    if (!equal) {
      std::cout << "  A: " << l->second.canonical << '\n' << "  B: " << r->second.canonical << '\n';
    }
  }
  std::cout << (distinguished ? "distinguished" : "not distinguished") << '\n';
  return distinguished ? kDomain : kOk;
}

int cmd_replay(const std::string& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  Trace t;
  try {
    t = parse_trace(text);
  } catch (const std::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
  FuzzConfig config;
  config.mode = t.mode;
  FuzzCase c = replay(t.initial, t.moves, t.mode, config);
  std::cout << "seed " << t.seed << ", mode " << to_string(t.mode) << ", " << t.moves.size() << " move(s)\n";
  for (std::size_t k = 0; k < t.moves.size(); ++k) std::cout << "  " << k << ": " << describe(t.moves[k], t.initial.surface) << '\n';
  for (const InvariantCheck& ch : c.checks) {
    if (ch.passed()) {
      std::cout << ch.name << ": preserved\n";
    } else {
      std::cout << ch.name << ": changed after move " << ch.first_change << '\n'
                << "  before: " << ch.before.canonical << '\n'
                << "  after:  " << ch.after.canonical << '\n';
    }
  }
  for (auto [degree, crossings] : c.degree_bounds) {
    if (degree > crossings + 1) std::cout << "degree bound exceeded: " << degree << " > " << crossings << " + 1\n";
  }
  if (!c.error.empty()) std::cout << "error: " << c.error << '\n';
  std::cout << (c.passed() ? "PASS" : "FAIL") << '\n';
  return c.passed() ? kOk : kDomain;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of pseudo-classical knots and links in thickened non-orientable surfaces"};
  app.require_subcommand(1);

  std::string path, path_b, output, ring = "gaussian-mod2";
  bool json = false;
  std::vector<std::string> skip;
  FuzzArgs fuzz_args;
  std::function<int()> run;

  auto* validate_cmd = app.add_subcommand("validate", "Check a diagram file for structural violations");
  validate_cmd->add_option("file", path, "Diagram file")->required();
  validate_cmd->callback([&] { run = [&] { return cmd_validate(path); }; });

  auto* inv = app.add_subcommand("invariants", "Report every applicable invariant, raw and canonical");
  inv->add_option("file", path, "Diagram file")->required();
  inv->add_flag("--json", json, "Machine-readable output");
  inv->add_option("--bar-ring", ring, "Coefficient ring of the flat comultiplication: gaussian-mod2 or z2");
  inv->add_option("--skip", skip, "Invariants to leave out")->delimiter(',');
  inv->callback([&] { run = [&] { return cmd_invariants(path, json, ring, skip); }; });

  auto* fz = app.add_subcommand("fuzz", "Check invariance under random Reidemeister move sequences");
  fz->add_option("--seed", fuzz_args.seed, "First seed");
  fz->add_option("--seeds", fuzz_args.seeds, "Number of random diagrams per mode")->check(CLI::PositiveNumber);
  fz->add_option("--crossings", fuzz_args.crossings, "Maximum crossings of an initial diagram")->check(CLI::NonNegativeNumber);
  fz->add_option("--moves", fuzz_args.moves, "Maximum moves per diagram")->check(CLI::PositiveNumber);
  fz->add_option("--generators", fuzz_args.generators, "Maximum generators of a random surface")->check(CLI::PositiveNumber);
  fz->add_option("--surface-spec", fuzz_args.surface, "Fixed surface: a:1,b:0 or closed:k");
  fz->add_option("--mode", fuzz_args.mode, "knot, flat, link or all");
  fz->add_option("--skip", fuzz_args.skip, "Invariants to leave out of the comparison")->delimiter(',');
  fz->add_option("--sign-table", fuzz_args.sign_table, "Replace the crossing sign table (harness self-test), e.g. i,1,-1,-i");
  fz->add_option("--trace-dir", fuzz_args.trace_dir, "Directory for failing traces");
  fz->callback([&] { run = [&] { return cmd_fuzz(fuzz_args); }; });

  auto* cab = app.add_subcommand("cable", "Emit the explicit 2-cable of a diagram");
  cab->add_option("file", path, "Diagram file")->required();
  cab->add_option("-o,--output", output, "Output file (default stdout)");
  cab->callback([&] { run = [&] { return cmd_cable(path, output); }; });

  auto* cmp = app.add_subcommand("compare", "Compare the canonical invariants of two diagrams");
  cmp->add_option("a", path, "First diagram file")->required();
  cmp->add_option("b", path_b, "Second diagram file")->required();
  cmp->add_option("--bar-ring", ring, "Coefficient ring of the flat comultiplication: gaussian-mod2 or z2");
  cmp->callback([&] { run = [&] { return cmd_compare(path, path_b, ring); }; });

  auto* rep = app.add_subcommand("replay", "Replay a fuzz trace file");
  rep->add_option("trace", path, "Trace file written by fuzz")->required();
  rep->callback([&] { run = [&] { return cmd_replay(path); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return run();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomain;
  }
}
