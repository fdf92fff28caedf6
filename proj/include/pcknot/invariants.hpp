#pragma once

#include <vector>

#include "pcknot/diagram.hpp"
#include "pcknot/signs.hpp"
#include "pcknot/values.hpp"

namespace pcknot {

/// Sum of +-sign(x) over crossings between two components, +1 where c1 is
/// over. Invariant up to {id, -1, S, -S}.
GaussianInt linking(const LinkDiagram& d, int c1, int c2, const SignRule& rule = {});

/// Sum of flat pair signs over the mutual crossings of two curves.
GaussianInt intersection_number(const LinkDiagram& d, const Loop& a, const Loop& b,
                                const SignRule& rule = {});

/// Signed sum of the classes of the smoothings at mutual crossings.
BracketValue goldman(const LinkDiagram& d, const Loop& a, const Loop& b, const SignRule& rule = {});

/// One summand of the comultiplication before classes are aggregated.
struct DeltaTerm {
  int crossing = 0;
  GaussianInt sign;
  Loop first;
  Loop second;
};

/// Per-crossing data for a single pseudo-classical component.
std::vector<DeltaTerm> delta_terms(const LinkDiagram& d, const SignRule& rule = {});

Tensor2Value delta(const LinkDiagram& d, const SignRule& rule = {});
/// Projection onto unordered pairs, for comparison with the ordered value.
Tensor2Value symmetrized(const Tensor2Value& v);
/// delta(d) + delta of d with orientation reversed and labeling permuted.
Tensor2Value delta0(const LinkDiagram& d, const SignRule& rule = {});
HomTensorValue delta_homology(const LinkDiagram& d, const SignRule& rule = {});
/// Homology image of a homotopy-level tensor; null-homologous factors vanish.
HomTensorValue homology_projection(const Tensor2Value& v, const SurfacePresentation& s);
BracketValue bracket_delta(const LinkDiagram& d, const SignRule& rule = {});

/// Flat comultiplication with symmetric products over the bar ring. Accepts
/// flat and non-flat diagrams; over/under data is ignored.
SymTensorValue flat_delta(const LinkDiagram& d, BarRing ring = BarRing::gaussian_mod2,
                          const SignRule& rule = {});

/// Degrees 1, 2, ... of the iterated flat comultiplication; the last entry
/// is the highest nonzero degree (empty result for a contractible curve).
std::vector<SymTensorValue> iterated_flat_delta(const LinkDiagram& d, BarRing ring = BarRing::gaussian_mod2,
                                                const SignRule& rule = {});

Laurent2 affine_index(const LinkDiagram& d, const SignRule& rule = {});

/// The linear map [l1] (x) [l2] -> x^Re(l1.l2) y^Im(l1.l2) applied to delta terms.
Laurent2 apply_index_map(const LinkDiagram& d, const std::vector<DeltaTerm>& terms,
                         const SignRule& rule = {});

}  // namespace pcknot
