#include "pcknot/gaussian.hpp"

#include <algorithm>

namespace pcknot {

std::string to_string(Integer v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  // Work with the negative magnitude so INT128_MIN is representable.
  std::string digits;
  Integer n = neg ? v : -v;
  while (n != 0) {
    int d = static_cast<int>(-(n % 10));
    digits.push_back(static_cast<char>('0' + d));
    n /= 10;
  }
  if (neg) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Integer checked_add(Integer a, Integer b) {
  Integer r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Gaussian integer overflow");
  return r;
}

Integer checked_sub(Integer a, Integer b) {
  Integer r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("Gaussian integer overflow");
  return r;
}

Integer checked_mul(Integer a, Integer b) {
  Integer r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Gaussian integer overflow");
  return r;
}

std::string to_string(const GaussianInt& z) {
  if (z.is_zero()) return "0";
  if (z.im == 0) return (z.re > 0 ? "+" : "") + to_string(z.re);
  if (z.re == 0) {
    if (z.im == 1) return "+i";
    if (z.im == -1) return "-i";
    return (z.im > 0 ? "+" : "") + to_string(z.im) + "i";
  }
  std::string im;
  if (z.im == 1) {
    im = "+i";
  } else if (z.im == -1) {
    im = "-i";
  } else {
    im = (z.im > 0 ? "+" : "") + to_string(z.im) + "i";
  }
  return "+(" + to_string(z.re) + im + ")";
}

std::string to_string(const BarCoeff& c) {
  if (c.re2 && c.im2) return "1+i";
  if (c.re2) return "1";
  if (c.im2) return "i";
  return "0";
}

BarCoeff reduce_to_bar(const GaussianInt& z, BarRing ring) {
  int r = static_cast<int>(z.re & 1);
  int i = ring == BarRing::z2 ? 0 : static_cast<int>(z.im & 1);
  return {r, i};
}

GaussianInt gaussian_apply(SymmetryOp op, const GaussianInt& z) {
  switch (op) {
    case SymmetryOp::identity:
      return z;
    case SymmetryOp::negate:
      return -z;
    case SymmetryOp::conj:
      return z.conj();
    case SymmetryOp::swap_parts:
      return {z.im, z.re};
    case SymmetryOp::neg_swap_parts:
      return -GaussianInt{z.im, z.re};
    case SymmetryOp::invert_exponents_and_negate:
      break;
  }
  throw std::invalid_argument("symmetry operation applies to Laurent polynomials only");
}

}  // namespace pcknot
