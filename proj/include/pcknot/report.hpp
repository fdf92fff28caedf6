#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pcknot/diagram.hpp"
#include "pcknot/signs.hpp"

namespace pcknot {

/// One invariant evaluated on one diagram. `raw` depends on labeling and
/// orientation; `canonical` is the minimum over `group` and is the actual
/// invariant.
struct InvariantRecord {
  std::string name;
  std::string group;
  bool supported = true;
  std::string note;
  std::string raw;
  std::string canonical;
};

struct ReportOptions {
  BarRing ring = BarRing::gaussian_mod2;
  SignRule rule;
  /// Base names to leave out ("linking" covers every component pair).
  std::set<std::string> skip;
  /// When set, only these base names are evaluated.
  std::optional<std::set<std::string>> only;
};

/// Base names accepted by ReportOptions::skip and ::only.
const std::vector<std::string>& invariant_names();

/// Every invariant applicable to the diagram's shape: knot invariants for a
/// single component, pairwise ones for links. Inapplicable ones are kept
/// with supported = false and a note such as "unsupported: closed surface".
std::vector<InvariantRecord> invariant_report(const LinkDiagram& d, const ReportOptions& options = {});

}  // namespace pcknot
