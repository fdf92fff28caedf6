#include <random>

#include "support.hpp"
#include "pcknot/gaussian.hpp"
#include "pcknot/values.hpp"

using namespace pcknot;

namespace {

const GaussianInt one{1, 0};
const GaussianInt i_{0, 1};

GaussianInt random_gaussian(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-5, 5);
  return {d(rng), d(rng)};
}

}  // namespace

TEST_CASE("gaussian integers form a commutative ring") {
  CHECK(i_ * i_ == -one);
  CHECK((one + i_) * (one - i_) == GaussianInt{2, 0});
  CHECK(i_.conj() == -i_);
  std::mt19937_64 rng(3);
  for (int k = 0; k < 200; ++k) {
    GaussianInt a = random_gaussian(rng), b = random_gaussian(rng), c = random_gaussian(rng);
    CHECK(a * b == b * a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b).conj() == a.conj() * b.conj());
  }
}

TEST_CASE("gaussian arithmetic refuses to overflow") {
  const Integer big = Integer(1) << 125;
  GaussianInt z{big, 0};
  CHECK_THROWS_AS(z * z, std::overflow_error);
  CHECK_THROWS_AS(z + z + z + z, std::overflow_error);
}

TEST_CASE("gaussian integers render with explicit signs") {
  CHECK(to_string(one) == "+1");
  CHECK(to_string(-one) == "-1");
  CHECK(to_string(i_) == "+i");
  CHECK(to_string(-i_) == "-i");
  CHECK(to_string(GaussianInt{}) == "0");
  CHECK(to_string(Integer(-12345678901234567)) == "-12345678901234567");
}

TEST_CASE("the bar ring is Z[i] modulo 2") {
  const BarCoeff b1{1, 0}, bi{0, 1}, b1i{1, 1};
  CHECK(bi * bi == b1);
  CHECK(b1i * b1i == BarCoeff{});
  CHECK(b1 + b1 == BarCoeff{});
  CHECK(reduce_to_bar(-i_) == bi);
  CHECK(reduce_to_bar(GaussianInt{3, -2}) == b1);
  CHECK(reduce_to_bar(i_, BarRing::z2) == BarCoeff{});
  CHECK(reduce_to_bar(-one, BarRing::z2) == b1);
  // Reduction is a ring map.
  std::mt19937_64 rng(5);
  for (int k = 0; k < 200; ++k) {
    GaussianInt a = random_gaussian(rng), b = random_gaussian(rng);
    CHECK(reduce_to_bar(a * b) == reduce_to_bar(a) * reduce_to_bar(b));
    CHECK(reduce_to_bar(a + b) == reduce_to_bar(a) + reduce_to_bar(b));
  }
}

TEST_CASE("klein canonical form is constant on orbits") {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 200; ++k) {
    GaussianInt z = random_gaussian(rng);
    GaussianInt c = canonical_klein(z);
    for (SymmetryOp op : {SymmetryOp::negate, SymmetryOp::swap_parts, SymmetryOp::neg_swap_parts}) {
      CHECK(canonical_klein(gaussian_apply(op, z)) == c);
    }
  }
  CHECK(gaussian_apply(SymmetryOp::swap_parts, GaussianInt{2, 3}) == GaussianInt{3, 2});
  CHECK_THROWS_AS(gaussian_apply(SymmetryOp::invert_exponents_and_negate, one), std::invalid_argument);
}

TEST_CASE("canonical forms prefer positive leading coefficients") {
  CHECK(canonical_klein(-i_) == one);
  Laurent2 p;
  p.add({0, 0}, -i_);
  CHECK(format_value(canonical_affine(p)) == "+i");
}

TEST_CASE("affine canonical form identifies P with -P(1/x,1/y)") {
  Laurent2 p;
  p.add({1, 0}, one);
  p.add({0, -2}, -i_);
  Laurent2 q = invert_exponents_and_negate(p);
  CHECK(canonical_affine(p) == canonical_affine(q));
  CHECK(invert_exponents_and_negate(q) == p);
}
