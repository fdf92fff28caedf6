#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pcknot/gaussian.hpp"
#include "pcknot/surface.hpp"

namespace pcknot {

/// Finite formal sum of keys with coefficients. Zero coefficients are dropped
/// eagerly and keys for which `Traits::vanishes` holds act as zero, so map
/// equality is value equality.
template <class Key, class Coeff, class Traits>
class LinearCombination {
 public:
  using key_type = Key;
  using coeff_type = Coeff;
  using Terms = std::map<Key, Coeff>;

  LinearCombination() = default;

  void add(const Key& key, const Coeff& c) {
    if (c.is_zero() || Traits::vanishes(key)) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  LinearCombination& operator+=(const LinearCombination& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }

  template <class F>
  LinearCombination map_coeffs(F&& f) const {
    LinearCombination r;
    for (const auto& [k, c] : terms_) r.add(k, f(c));
    return r;
  }

  template <class F>
  LinearCombination map_keys(F&& f) const {
    LinearCombination r;
    for (const auto& [k, c] : terms_) r.add(f(k), c);
    return r;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  friend bool operator==(const LinearCombination&, const LinearCombination&) = default;
  // Lexicographic on the sorted term list: key first, then coefficient.
  friend bool operator<(const LinearCombination& a, const LinearCombination& b) {
    return std::lexicographical_compare(a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
                                        [](const auto& x, const auto& y) {
                                          if (x.first < y.first) return true;
                                          if (y.first < x.first) return false;
                                          return x.second < y.second;
                                        });
  }

 private:
  Terms terms_;
};

struct ClassPairTraits {
  static bool vanishes(const std::pair<FreeHomotopyClass, FreeHomotopyClass>& k) {
    return k.first.contractible() || k.second.contractible();
  }
};
struct ClassTraits {
  static bool vanishes(const FreeHomotopyClass& k) { return k.contractible(); }
};
struct ClassMultisetTraits {
  static bool vanishes(const std::vector<FreeHomotopyClass>& k) {
    return std::any_of(k.begin(), k.end(), [](const FreeHomotopyClass& c) { return c.contractible(); });
  }
};
struct HomologyPairTraits {
  static bool vanishes(const std::pair<HomologyClass, HomologyClass>& k) {
    return k.first.is_zero() || k.second.is_zero();
  }
};
struct MonomialTraits {
  static bool vanishes(const std::pair<long long, long long>&) { return false; }
};

/// Ordered tensors [l1] (x) [l2] with Gaussian coefficients.
using Tensor2Value = LinearCombination<std::pair<FreeHomotopyClass, FreeHomotopyClass>, GaussianInt, ClassPairTraits>;
/// Degree-one elements: Gaussian combinations of free homotopy classes.
using BracketValue = LinearCombination<FreeHomotopyClass, GaussianInt, ClassTraits>;
/// Ordered tensors of homology classes.
using HomTensorValue = LinearCombination<std::pair<HomologyClass, HomologyClass>, GaussianInt, HomologyPairTraits>;
/// Laurent polynomials in x, y keyed by (x exponent, y exponent).
using Laurent2 = LinearCombination<std::pair<long long, long long>, GaussianInt, MonomialTraits>;

/// Symmetric products of `degree` classes over the bar ring; keys are sorted
/// class lists (multisets).
class SymTensorValue {
 public:
  using Sum = LinearCombination<std::vector<FreeHomotopyClass>, BarCoeff, ClassMultisetTraits>;

  explicit SymTensorValue(std::size_t degree = 2) : degree_(degree) {}

  void add(std::vector<FreeHomotopyClass> factors, BarCoeff c);
  std::size_t degree() const { return degree_; }
  const Sum& sum() const { return sum_; }
  bool is_zero() const { return sum_.is_zero(); }
  SymTensorValue conj() const;

  friend bool operator==(const SymTensorValue&, const SymTensorValue&) = default;
  friend bool operator<(const SymTensorValue& a, const SymTensorValue& b) { return a.sum_ < b.sum_; }

 private:
  std::size_t degree_;
  Sum sum_;
};

/// Minimum of the orbit of `v` under `group`; `group` must be closed under
/// composition. Two values are equal up to the group iff their canonical
/// forms are equal.
template <class V>
V canonicalize(const V& v, const std::vector<std::function<V(const V&)>>& group) {
  V best = v;
  for (const auto& g : group) {
    V candidate = g(v);
    if (candidate < best) best = candidate;
  }
  return best;
}

/// Canonical representative of a Gaussian integer under {id, -1, S, -S}.
GaussianInt canonical_klein(const GaussianInt& z);

// Symmetry actions used by the invariants.
Tensor2Value negated(const Tensor2Value& v);
BracketValue negated(const BracketValue& v);
HomTensorValue negated(const HomTensorValue& v);
Laurent2 negated(const Laurent2& v);
BracketValue apply_coefficients(SymmetryOp op, const BracketValue& v);
/// P(x, y) -> -P(1/x, 1/y).
Laurent2 invert_exponents_and_negate(const Laurent2& p);

Tensor2Value canonical_up_to_sign(const Tensor2Value& v);
HomTensorValue canonical_up_to_sign(const HomTensorValue& v);
BracketValue canonical_up_to_sign(const BracketValue& v);
BracketValue canonical_klein(const BracketValue& v);
SymTensorValue canonical_up_to_conj(const SymTensorValue& v);
Laurent2 canonical_affine(const Laurent2& p);

std::string format_value(const Tensor2Value& v, const SurfacePresentation& s);
std::string format_value(const BracketValue& v, const SurfacePresentation& s);
std::string format_value(const HomTensorValue& v, const SurfacePresentation& s);
std::string format_value(const SymTensorValue& v, const SurfacePresentation& s);
std::string format_value(const Laurent2& p);

}  // namespace pcknot
