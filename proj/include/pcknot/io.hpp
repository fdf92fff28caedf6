#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "pcknot/cable.hpp"
#include "pcknot/diagram.hpp"

namespace pcknot {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Reads the diagram text format:
///
///   surface boundary | surface closed <k>
///   gen <symbol> <w1>        (boundary surfaces only)
///   flat                     (optional)
///   component
///     pass over|under <id>
///     edge <word>            ('.' is empty, letters dot-joined, '-' inverts)
///   corner <id> ccw|cw
///   labeling <bit per component>
///
/// '#' starts a comment. Structural problems that parse cleanly (duplicate
/// passes, missing corners) are left for validate().
LinkDiagram parse_diagram(std::string_view text);

/// Canonical text; parse_diagram(serialize(d)) == d and the text of any
/// canonical file survives a parse/serialize round trip byte for byte.
std::string serialize(const LinkDiagram& d);

/// Diagram text plus `strand <i> <component> left|right` and
/// `pattern <x> <t0> <t1> <t2> <t3> inp <a> out <b>` annotation lines.
std::string serialize_cable(const CableDiagram& c);
CableDiagram parse_cable(std::string_view text);

std::string read_file(const std::string& path);

}  // namespace pcknot
