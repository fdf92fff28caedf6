#pragma once

#include <string>

#include "doctest.h"
#include "pcknot/gaussian.hpp"
#include "pcknot/io.hpp"

namespace doctest {
template <>
struct StringMaker<pcknot::GaussianInt> {
  static String convert(const pcknot::GaussianInt& z) { return pcknot::to_string(z).c_str(); }
};
}  // namespace doctest

inline pcknot::LinkDiagram fixture(const std::string& name) {
  return pcknot::parse_diagram(pcknot::read_file(std::string(FIXTURE_DIR) + "/" + name));
}
