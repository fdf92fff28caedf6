#include <numeric>
#include <random>

#include "support.hpp"
#include "pcknot/random.hpp"
#include "pcknot/surface.hpp"

using namespace pcknot;

namespace {

using Matrix = std::vector<std::vector<std::int64_t>>;

SurfacePresentation abc() { return SurfacePresentation::with_boundary({{"a", 1}, {"b", 0}, {"c", 1}}); }

Matrix multiply(const Matrix& x, const Matrix& y) {
  Matrix r(x.size(), std::vector<std::int64_t>(y.empty() ? 0 : y[0].size(), 0));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t k = 0; k < y.size(); ++k)
      for (std::size_t j = 0; j < y[0].size(); ++j) r[i][j] += x[i][k] * y[k][j];
  return r;
}

// Laplace expansion; the matrices here are at most 4x4.
std::int64_t determinant(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  std::int64_t det = 0;
  for (std::size_t col = 0; col < n; ++col) {
    Matrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(row);
    }
    det += (col % 2 == 0 ? 1 : -1) * m[0][col] * determinant(minor);
  }
  return det;
}

void subsets(std::size_t n, std::size_t k, std::size_t from, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// gcd of all k x k minors: the product of the first k invariant factors.
std::int64_t determinantal_divisor(const Matrix& m, std::size_t k) {
  std::vector<std::vector<std::size_t>> rows, cols;
  std::vector<std::size_t> cur;
  subsets(m.size(), k, 0, cur, rows);
  subsets(m[0].size(), k, 0, cur, cols);
  std::int64_t g = 0;
  for (const auto& rs : rows)
    for (const auto& cs : cols) {
      Matrix sub;
      for (std::size_t r : rs) {
        std::vector<std::int64_t> row;
        for (std::size_t c : cs) row.push_back(m[r][c]);
        sub.push_back(row);
      }
      g = std::gcd(g, determinant(sub));
    }
  return g;
}

}  // namespace

TEST_CASE("words parse, print and reduce") {
  auto s = abc();
  Word w = parse_word("a.b.b-.c-", s);
  CHECK(format_word(w, s) == "a.b.b-.c-");
  CHECK(format_word(reduce_word(w), s) == "a.c-");
  CHECK(format_word(parse_word(".", s), s) == ".");
  CHECK(format_word(cyclic_reduce(parse_word("a.b.c.a-", s)), s) == "b.c");
  CHECK_THROWS_AS(parse_word("a.z", s), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("a..b", s), std::invalid_argument);
}

TEST_CASE("w1 is a homomorphism to Z/2") {
  auto s = abc();
  Rng rng(11);
  for (int k = 0; k < 200; ++k) {
    Word u = random_word(rng, s, 5), v = random_word(rng, s, 5);
    CHECK(w1(u * v, s) == (w1(u, s) ^ w1(v, s)));
    CHECK(w1(u.inverse(), s) == w1(u, s));
  }
  CHECK(w1(parse_word("a.b", s), s) == 1);
  CHECK(w1(parse_word("a.c", s), s) == 0);
}

TEST_CASE("free homotopy classes are conjugacy classes") {
  auto s = abc();
  Rng rng(13);
  for (int k = 0; k < 300; ++k) {
    Word u = random_word(rng, s, 5), v = random_word(rng, s, 5), g = random_word(rng, s, 4);
    CHECK(free_homotopy_class(u * v, s) == free_homotopy_class(v * u, s));
    CHECK(free_homotopy_class(g * u * g.inverse(), s) == free_homotopy_class(u, s));
  }
  CHECK(free_homotopy_class(parse_word("a.a-", s), s).contractible());
  CHECK_FALSE(free_homotopy_class(parse_word("a.b", s), s) == free_homotopy_class(parse_word("a.b-", s), s));
  CHECK(format_class(free_homotopy_class(parse_word("b.a", s), s), s) == "[a.b]");
}

TEST_CASE("conjugacy agrees with a rotation oracle") {
  // Two cyclically reduced words are conjugate iff one is a rotation of the other.
  auto s = abc();
  Rng rng(17);
  int conjugate_pairs = 0;
  for (int k = 0; k < 2000; ++k) {
    Word u = cyclic_reduce(random_word(rng, s, 3)), v = cyclic_reduce(random_word(rng, s, 3));
    bool rotation = false;
    if (u.size() == v.size()) {
      for (std::size_t r = 0; r <= u.size() && !rotation; ++r) {
        std::vector<Letter> rot(u.letters.begin() + static_cast<std::ptrdiff_t>(r % std::max<std::size_t>(1, u.size())),
                                u.letters.end());
        rot.insert(rot.end(), u.letters.begin(), u.letters.begin() + static_cast<std::ptrdiff_t>(r % std::max<std::size_t>(1, u.size())));
        rotation = rot == v.letters;
      }
    }
    conjugate_pairs += rotation ? 1 : 0;
    CHECK((free_homotopy_class(u, s) == free_homotopy_class(v, s)) == rotation);
  }
  CHECK(conjugate_pairs > 10);
}

TEST_CASE("smith normal form matches determinantal divisors") {
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<int> entry(-4, 4), dim(1, 4);
  for (int k = 0; k < 200; ++k) {
    std::size_t rows = static_cast<std::size_t>(dim(rng)), cols = static_cast<std::size_t>(dim(rng));
    Matrix m(rows, std::vector<std::int64_t>(cols));
    for (auto& row : m)
      for (auto& x : row) x = entry(rng);
    SmithForm f = smith_normal_form(m, cols);
    CHECK(multiply(multiply(f.left, m), f.right) == f.diagonal);
    CHECK(std::abs(determinant(f.left)) == 1);
    CHECK(std::abs(determinant(f.right)) == 1);
    std::int64_t product = 1;
    for (std::size_t j = 0; j < std::min(rows, cols); ++j) {
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
          if (r != c) CHECK(f.diagonal[r][c] == 0);
      std::int64_t dj = f.diagonal[j][j];
      CHECK(dj >= 0);
      if (j + 1 < std::min(rows, cols) && dj != 0) CHECK(f.diagonal[j + 1][j + 1] % dj == 0);
      product *= dj;
      CHECK(product == determinantal_divisor(m, j + 1));
    }
  }
}

TEST_CASE("closed surfaces have homology Z^(k-1) + Z/2") {
  for (int k = 1; k <= 4; ++k) {
    auto s = SurfacePresentation::closed(k);
    // Invariant factors: one 2, then k - 1 free summands.
    std::vector<std::int64_t> factors(static_cast<std::size_t>(k), 0);
    factors[0] = 2;
    CHECK(s.homology_basis().torsion == factors);
    CHECK(homology_class(s.relator(), s).is_zero());
    // Each generator is nonzero; twice the sum of all of them vanishes.
    for (int g = 0; g < k; ++g) CHECK_FALSE(homology_class(Word{{Letter{g, 1}}}, s).is_zero());
    Word doubled;
    for (int g = 0; g < k; ++g) doubled.letters.push_back({g, 1});
    CHECK_FALSE(homology_class(doubled, s).is_zero());
    CHECK(homology_class(doubled * doubled, s).is_zero());
  }
}

TEST_CASE("homology of a surface with boundary is the abelianization") {
  auto s = abc();
  Rng rng(23);
  for (int k = 0; k < 100; ++k) {
    Word u = random_word(rng, s, 6), v = random_word(rng, s, 6);
    CHECK(homology_class(u * v, s) == homology_class(v * u, s));
    CHECK(homology_class(u, s).is_zero() == (abelianize(u, s) == std::vector<std::int64_t>(3, 0)));
  }
}
