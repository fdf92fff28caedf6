#include "pcknot/values.hpp"

namespace pcknot {

void SymTensorValue::add(std::vector<FreeHomotopyClass> factors, BarCoeff c) {
  if (factors.size() != degree_) throw std::invalid_argument("symmetric tensor degree mismatch");
  std::sort(factors.begin(), factors.end());
  sum_.add(factors, c);
}

SymTensorValue SymTensorValue::conj() const {
  SymTensorValue r(degree_);
  r.sum_ = sum_.map_coeffs([](const BarCoeff& c) { return c.conj(); });
  return r;
}

GaussianInt canonical_klein(const GaussianInt& z) {
  GaussianInt best = z;
  for (SymmetryOp op : {SymmetryOp::negate, SymmetryOp::swap_parts, SymmetryOp::neg_swap_parts}) {
    best = std::min(best, gaussian_apply(op, z));
  }
  return best;
}

namespace {

template <class V>
V negate_coeffs(const V& v) {
  return v.map_coeffs([](const GaussianInt& c) { return -c; });
}

template <class V>
V sign_canonical(const V& v) {
  return canonicalize<V>(v, {[](const V& x) { return x; }, [](const V& x) { return negate_coeffs(x); }});
}

}  // namespace

Tensor2Value negated(const Tensor2Value& v) { return negate_coeffs(v); }
BracketValue negated(const BracketValue& v) { return negate_coeffs(v); }
HomTensorValue negated(const HomTensorValue& v) { return negate_coeffs(v); }
Laurent2 negated(const Laurent2& v) { return negate_coeffs(v); }

BracketValue apply_coefficients(SymmetryOp op, const BracketValue& v) {
  return v.map_coeffs([op](const GaussianInt& c) { return gaussian_apply(op, c); });
}

Laurent2 invert_exponents_and_negate(const Laurent2& p) {
  Laurent2 r;
  for (const auto& [m, c] : p.terms()) r.add({-m.first, -m.second}, -c);
  return r;
}

Tensor2Value canonical_up_to_sign(const Tensor2Value& v) { return sign_canonical(v); }
HomTensorValue canonical_up_to_sign(const HomTensorValue& v) { return sign_canonical(v); }
BracketValue canonical_up_to_sign(const BracketValue& v) { return sign_canonical(v); }

BracketValue canonical_klein(const BracketValue& v) {
  using F = std::function<BracketValue(const BracketValue&)>;
  std::vector<F> group;
  for (SymmetryOp op : {SymmetryOp::identity, SymmetryOp::negate, SymmetryOp::swap_parts, SymmetryOp::neg_swap_parts}) {
    group.push_back([op](const BracketValue& x) { return apply_coefficients(op, x); });
  }
  return canonicalize(v, group);
}

SymTensorValue canonical_up_to_conj(const SymTensorValue& v) {
  return canonicalize<SymTensorValue>(v, {[](const SymTensorValue& x) { return x; },
                                          [](const SymTensorValue& x) { return x.conj(); }});
}

Laurent2 canonical_affine(const Laurent2& p) {
  return canonicalize<Laurent2>(p, {[](const Laurent2& x) { return x; },
                                    [](const Laurent2& x) { return invert_exponents_and_negate(x); }});
}

namespace {

template <class V, class F>
std::string join_terms(const V& v, F&& render) {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : v.terms()) {
    if (!out.empty()) out += ' ';
    out += render(k, c);
  }
  return out;
}

}  // namespace

std::string format_value(const Tensor2Value& v, const SurfacePresentation& s) {
  return join_terms(v, [&](const auto& k, const GaussianInt& c) {
    return to_string(c) + "·" + format_class(k.first, s) + "⊗" + format_class(k.second, s);
  });
}

std::string format_value(const BracketValue& v, const SurfacePresentation& s) {
  return join_terms(v, [&](const auto& k, const GaussianInt& c) { return to_string(c) + "·" + format_class(k, s); });
}

std::string format_value(const HomTensorValue& v, const SurfacePresentation& s) {
  return join_terms(v, [&](const auto& k, const GaussianInt& c) {
    return to_string(c) + "·" + format_homology(k.first, s) + "⊗" + format_homology(k.second, s);
  });
}

std::string format_value(const SymTensorValue& v, const SurfacePresentation& s) {
  return join_terms(v.sum(), [&](const auto& k, const BarCoeff& c) {
    std::string out = to_string(c) + "·{";
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (i) out += ',';
      out += format_class(k[i], s);
    }
    return out + "}";
  });
}

std::string format_value(const Laurent2& p) {
  return join_terms(p, [](const auto& m, const GaussianInt& c) {
    std::string out = to_string(c);
    if (m.first != 0) out += "·x^" + std::to_string(m.first);
    if (m.second != 0) out += "·y^" + std::to_string(m.second);
    return out;
  });
}

}  // namespace pcknot
