#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace pcknot {

/// Exact integer type backing all coefficients. Arithmetic is checked: any
/// result outside the 128-bit range throws std::overflow_error.
using Integer = __int128;

std::string to_string(Integer v);

Integer checked_add(Integer a, Integer b);
Integer checked_sub(Integer a, Integer b);
Integer checked_mul(Integer a, Integer b);

/// Element a+bi of the Gaussian integers. Crossing signs take the values
/// +1, -1, +i, -i; sums of signs are general Gaussian integers.
struct GaussianInt {
  Integer re = 0;
  Integer im = 0;

  constexpr GaussianInt() = default;
  constexpr GaussianInt(Integer r, Integer i = 0) : re(r), im(i) {}

  static constexpr GaussianInt one() { return {1, 0}; }
  static constexpr GaussianInt unit_i() { return {0, 1}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real_unit() const { return im == 0 && (re == 1 || re == -1); }
  bool is_imaginary_unit() const { return re == 0 && (im == 1 || im == -1); }

  GaussianInt operator-() const { return {checked_sub(0, re), checked_sub(0, im)}; }
  GaussianInt conj() const { return {re, checked_sub(0, im)}; }

  GaussianInt& operator+=(const GaussianInt& o) {
    re = checked_add(re, o.re);
    im = checked_add(im, o.im);
    return *this;
  }
  GaussianInt& operator-=(const GaussianInt& o) {
    re = checked_sub(re, o.re);
    im = checked_sub(im, o.im);
    return *this;
  }
  friend GaussianInt operator+(GaussianInt a, const GaussianInt& b) { return a += b; }
  friend GaussianInt operator-(GaussianInt a, const GaussianInt& b) { return a -= b; }
  friend GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
    return {checked_sub(checked_mul(a.re, b.re), checked_mul(a.im, b.im)),
            checked_add(checked_mul(a.re, b.im), checked_mul(a.im, b.re))};
  }

  friend bool operator==(const GaussianInt&, const GaussianInt&) = default;
  // Total order used by canonicalization: (re, im) lexicographic, larger
  // first, so that canonical forms lead with +1 or +i rather than -1 or -i.
  friend std::strong_ordering operator<=>(const GaussianInt& a, const GaussianInt& b) {
    if (auto c = b.re <=> a.re; c != 0) return c;
    return b.im <=> a.im;
  }
};

/// Renders +1, -1, +i, -i, +2, +(1+2i), ... ; zero renders as "0".
std::string to_string(const GaussianInt& z);

/// Element of Z[i]/(2): four values {0, 1, i, 1+i}.
struct BarCoeff {
  std::uint8_t re2 = 0;
  std::uint8_t im2 = 0;

  constexpr BarCoeff() = default;
  constexpr BarCoeff(int r, int i) : re2(static_cast<std::uint8_t>(r & 1)), im2(static_cast<std::uint8_t>(i & 1)) {}

  bool is_zero() const { return re2 == 0 && im2 == 0; }
  // In Z[i]/(2) conjugation is the identity (-i = i); kept for symmetry-group uniformity.
  BarCoeff conj() const { return *this; }

  friend BarCoeff operator+(BarCoeff a, BarCoeff b) { return {a.re2 ^ b.re2, a.im2 ^ b.im2}; }
  BarCoeff& operator+=(BarCoeff o) { return *this = *this + o; }
  friend BarCoeff operator*(BarCoeff a, BarCoeff b) {
    // (a + bi)(c + di) = (ac - bd) + (ad + bc)i, mod 2.
    return {(a.re2 & b.re2) ^ (a.im2 & b.im2), (a.re2 & b.im2) ^ (a.im2 & b.re2)};
  }
  friend bool operator==(const BarCoeff&, const BarCoeff&) = default;
  friend auto operator<=>(const BarCoeff& a, const BarCoeff& b) {
    if (auto c = a.re2 <=> b.re2; c != 0) return c;
    return a.im2 <=> b.im2;
  }
};

std::string to_string(const BarCoeff& c);

/// Which quotient of the Gaussian integers the flat comultiplication uses.
enum class BarRing {
  gaussian_mod2,  // Z[i]/(2), default
  z2,             // additionally projects i -> 0 (literal additive quotient)
};

BarCoeff reduce_to_bar(const GaussianInt& z, BarRing ring = BarRing::gaussian_mod2);

enum class SymmetryOp {
  identity,
  negate,
  conj,
  swap_parts,      // S(a+bi) = b+ai
  neg_swap_parts,  // -S
  invert_exponents_and_negate,  // Laurent polynomials only
};

/// Applies a coefficient-level symmetry. Throws std::invalid_argument for the
/// polynomial-only operation.
GaussianInt gaussian_apply(SymmetryOp op, const GaussianInt& z);

}  // namespace pcknot
