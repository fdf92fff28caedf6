#pragma once

#include <array>
#include <map>

#include "pcknot/diagram.hpp"
#include "pcknot/gaussian.hpp"

namespace pcknot {

/// Global side convention. `standard`: a strand entering at slot s has its
/// left hand toward slot s+1. `mirrored`: toward slot s-1. Switching between
/// them is equivalent to relabeling every component.
enum class SideConvention { standard, mirrored };

/// Which cable of each branch faces the input corner, then a lookup of the
/// sign by the names of those two cables. The default table is the only
/// correct one; others exist to exercise the test harness.
struct SignRule {
  // Indexed by 2 * over_is_left + under_is_left.
  using Table = std::array<GaussianInt, 4>;
  static constexpr Table standard_table{GaussianInt{0, 1}, GaussianInt{1, 0}, GaussianInt{-1, 0}, GaussianInt{0, -1}};

  SideConvention side = SideConvention::standard;
  Table table = standard_table;

  SignRule() = default;
  SignRule(SideConvention s) : side(s) {}  // NOLINT(google-explicit-constructor)
  SignRule(SideConvention s, const Table& t) : side(s), table(t) {}
};

/// Sign of a crossing from the cable-side parity rule. Throws DiagramError on
/// flat diagrams or when a component through x is orientation-reversing.
GaussianInt crossing_sign(const LinkDiagram& d, int crossing, const SignRule& rule = {});

/// Same rule, ignoring the flat flag; flat sign operations are built on it.
GaussianInt raw_sign(const DiagramIndex& idx, int crossing, const SignRule& rule = {});

/// Signs of all crossings.
std::map<int, GaussianInt> crossing_signs(const LinkDiagram& d, const SignRule& rule = {});

/// Flat self-intersection sign: +-1 collapse to 1, +-i unchanged.
GaussianInt sign_f1(const LinkDiagram& d, int crossing, const SignRule& rule = {});
GaussianInt flat_self_sign(const GaussianInt& sign);

/// Flat sign of a mutual crossing of an ordered pair of curves: the sign the
/// crossing would have with `first` passing over.
GaussianInt sign_f2(const LinkDiagram& d, int crossing, const Loop& first, const Loop& second,
                    const SignRule& rule = {});
GaussianInt flat_pair_sign(const GaussianInt& sign, bool first_is_under);

}  // namespace pcknot
