#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pcknot/moves.hpp"
#include "pcknot/report.hpp"

namespace pcknot {

/// knot: single component, over/under moves, Delta-family invariants.
/// flat: single flat component, flat moves, flat comultiplication.
/// link: two components, over/under moves, linking number.
enum class FuzzMode { knot, flat, link };

std::string to_string(FuzzMode m);
FuzzMode parse_fuzz_mode(const std::string& text);

struct FuzzConfig {
  std::uint64_t seed = 1;
  int diagrams = 100;
  int max_moves = 10;
  int max_crossings = 6;
  int max_generators = 3;
  FuzzMode mode = FuzzMode::knot;
  /// Fixed surface; a random one per diagram when empty.
  std::optional<SurfacePresentation> surface;
  SignRule rule;
  /// Invariants left out of the comparison.
  std::set<std::string> skip;
};

/// "a:1,b:0" for a surface with boundary, "closed:k" for a closed one.
SurfacePresentation parse_surface_spec(const std::string& text);

struct InvariantCheck {
  std::string name;
  InvariantRecord before;
  /// Value right after the first change, or the final value if none.
  InvariantRecord after;
  /// Index of the first move after which the canonical value differed from
  /// the initial one; -1 when it never did.
  int first_change = -1;
  bool passed() const { return first_change < 0; }
};

struct FuzzCase {
  std::uint64_t seed = 0;
  FuzzMode mode = FuzzMode::knot;
  LinkDiagram initial;
  std::vector<Move> moves;
  std::vector<InvariantCheck> checks;
  /// Highest nonzero degree of the iterated flat comultiplication on the
  /// initial and final diagrams, with their crossing counts (knot and flat
  /// modes only).
  std::vector<std::pair<std::size_t, std::size_t>> degree_bounds;
  std::string error;
  int error_move = -1;
  bool passed() const;
  /// Moves up to and including the first one after which something failed.
  std::vector<Move> reproduction() const;
};

struct FuzzReport {
  FuzzConfig config;
  std::vector<FuzzCase> cases;
  /// Per invariant: (preserved, changed) counts over cases.
  std::map<std::string, std::pair<int, int>> tally;
  int failures() const;
};

/// The invariants compared in a mode, as report base names.
std::set<std::string> compared_invariants(FuzzMode mode);

FuzzCase fuzz_case(std::uint64_t seed, const FuzzConfig& config);
/// Cases use seeds config.seed, config.seed + 1, ...
FuzzReport fuzz(const FuzzConfig& config);
/// Applies `moves` to `initial`, checking after every move.
FuzzCase replay(const LinkDiagram& initial, const std::vector<Move>& moves, FuzzMode mode, const FuzzConfig& config);

std::string summary(const FuzzReport& r);

/// Trace document: seed, mode, initial diagram text and the move list with
/// full parameters (only up to the failing move when the case failed).
std::string trace_json(const FuzzCase& c);
struct Trace {
  std::uint64_t seed = 0;
  FuzzMode mode = FuzzMode::knot;
  LinkDiagram initial;
  std::vector<Move> moves;
};
Trace parse_trace(const std::string& text);

}  // namespace pcknot
