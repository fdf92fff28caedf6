#include "pcknot/surface.hpp"

#include <algorithm>
#include <cstdlib>

namespace pcknot {

Word Word::inverse() const {
  Word r;
  r.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) r.letters.push_back(it->inverse());
  return r;
}

Word operator*(const Word& a, const Word& b) {
  Word r = a;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

Word concat_cancel(const Word& a, const Word& b) {
  Word r = a;
  std::size_t i = 0;
  while (!r.letters.empty() && i < b.letters.size() && r.letters.back() == b.letters[i].inverse()) {
    r.letters.pop_back();
    ++i;
  }
  r.letters.insert(r.letters.end(), b.letters.begin() + static_cast<std::ptrdiff_t>(i), b.letters.end());
  return r;
}

SurfacePresentation SurfacePresentation::with_boundary(std::vector<Generator> gens) {
  if (gens.empty()) throw std::invalid_argument("surface needs at least one generator");
  bool reversing = false;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].w1 != 0 && gens[i].w1 != 1) throw std::invalid_argument("w1 bit must be 0 or 1");
    reversing |= gens[i].w1 == 1;
    for (std::size_t j = 0; j < i; ++j) {
      if (gens[i].symbol == gens[j].symbol) throw std::invalid_argument("duplicate generator '" + gens[i].symbol + "'");
    }
  }
  if (!reversing) throw std::invalid_argument("surface must be non-orientable: no generator has w1 = 1");
  SurfacePresentation s;
  s.kind_ = SurfaceKind::with_boundary;
  s.gens_ = std::move(gens);
  s.build_homology();
  return s;
}

SurfacePresentation SurfacePresentation::closed(int k) {
  if (k < 1) throw std::invalid_argument("closed surface needs k >= 1 cross-caps");
  SurfacePresentation s;
  s.kind_ = SurfaceKind::closed;
  for (int i = 1; i <= k; ++i) {
    s.gens_.push_back({"a" + std::to_string(i), 1});
    s.relator_.letters.push_back({i - 1, 1});
    s.relator_.letters.push_back({i - 1, 1});
  }
  s.build_homology();
  return s;
}

void SurfacePresentation::build_homology() {
  std::size_t k = gens_.size();
  std::vector<std::vector<std::int64_t>> relations;
  if (kind_ == SurfaceKind::closed) relations.push_back(abelianize(relator_, *this));
  SmithForm snf = smith_normal_form(relations, k);
  basis_.basis_change = snf.right;
  basis_.torsion.assign(k, 0);
  for (std::size_t j = 0; j < k && j < relations.size(); ++j) basis_.torsion[j] = snf.diagonal[j][j];
}

std::optional<int> SurfacePresentation::index_of(std::string_view symbol) const {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].symbol == symbol) return static_cast<int>(i);
  }
  return std::nullopt;
}

Word parse_word(std::string_view text, const SurfacePresentation& s) {
  Word w;
  if (text == ".") return w;
  if (text.empty()) throw std::invalid_argument("empty word token (use '.')");
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t dot = text.find('.', pos);
    std::string_view tok = text.substr(pos, dot == std::string_view::npos ? std::string_view::npos : dot - pos);
    int exp = 1;
    if (!tok.empty() && tok.back() == '-') {
      exp = -1;
      tok.remove_suffix(1);
    }
    if (tok.empty()) throw std::invalid_argument("malformed letter in word '" + std::string(text) + "'");
    auto g = s.index_of(tok);
    if (!g) throw std::invalid_argument("unknown generator '" + std::string(tok) + "'");
    w.letters.push_back({*g, exp});
    if (dot == std::string_view::npos) break;
    pos = dot + 1;
  }
  return w;
}

std::string format_word(const Word& w, const SurfacePresentation& s) {
  if (w.empty()) return ".";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '.';
    out += s.symbol(w.letters[i].gen);
    if (w.letters[i].exp < 0) out += '-';
  }
  return out;
}

void check_word(const Word& w, const SurfacePresentation& s) {
  for (const Letter& l : w.letters) {
    if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= s.generators().size() || (l.exp != 1 && l.exp != -1)) {
      throw std::out_of_range("word letter outside the surface presentation");
    }
  }
}

Word reduce_word(const Word& w) {
  Word r;
  for (const Letter& l : w.letters) {
    if (!r.letters.empty() && r.letters.back() == l.inverse()) {
      r.letters.pop_back();
    } else {
      r.letters.push_back(l);
    }
  }
  return r;
}

Word cyclic_reduce(const Word& w) {
  Word r = reduce_word(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r.letters[lo] == r.letters[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return Word{{r.letters.begin() + static_cast<std::ptrdiff_t>(lo), r.letters.begin() + static_cast<std::ptrdiff_t>(hi)}};
}

int w1(const Word& w, const SurfacePresentation& s) {
  int bit = 0;
  for (const Letter& l : w.letters) bit ^= s.generators().at(static_cast<std::size_t>(l.gen)).w1;
  return bit;
}

FreeHomotopyClass free_homotopy_class(const Word& w, const SurfacePresentation& s) {
  if (s.is_closed()) {
    throw UnsupportedOperation("free homotopy classes are unsupported on closed surfaces");
  }
  check_word(w, s);
  Word r = cyclic_reduce(w);
  Word best = r;
  std::vector<Letter> rot = r.letters;
  for (std::size_t i = 1; i < r.size(); ++i) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (rot < best.letters) best.letters = rot;
  }
  return {best};
}

std::string format_class(const FreeHomotopyClass& c, const SurfacePresentation& s) {
  return "[" + (c.contractible() ? std::string("1") : format_word(c.word, s)) + "]";
}

std::vector<std::int64_t> abelianize(const Word& w, const SurfacePresentation& s) {
  std::vector<std::int64_t> v(s.generators().size(), 0);
  for (const Letter& l : w.letters) v.at(static_cast<std::size_t>(l.gen)) += l.exp;
  return v;
}

bool HomologyClass::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](std::int64_t c) { return c == 0; });
}

HomologyClass homology_of_exponents(const std::vector<std::int64_t>& exponents, const SurfacePresentation& s) {
  const HomologyBasis& b = s.homology_basis();
  std::size_t k = exponents.size();
  HomologyClass h;
  for (std::size_t j = 0; j < k; ++j) {
    std::int64_t t = b.torsion[j];
    if (t == 1) continue;
    std::int64_t y = 0;
    for (std::size_t i = 0; i < k; ++i) y += exponents[i] * b.basis_change[i][j];
    if (t > 1) y = ((y % t) + t) % t;
    h.coords.push_back(y);
  }
  return h;
}

HomologyClass homology_class(const Word& w, const SurfacePresentation& s) {
  check_word(w, s);
  return homology_of_exponents(abelianize(w, s), s);
}

std::string format_homology(const HomologyClass& h, const SurfacePresentation& s) {
  const auto& torsion = s.homology_basis().torsion;
  std::string out = "H(";
  std::size_t c = 0;
  bool first = true;
  for (std::int64_t t : torsion) {
    if (t == 1) continue;
    if (!first) out += ',';
    first = false;
    out += std::to_string(h.coords.at(c++));
    if (t > 1) out += " mod " + std::to_string(t);
  }
  return out + ")";
}

namespace {

using Matrix = std::vector<std::vector<std::int64_t>>;

Matrix identity(std::size_t n) {
  Matrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

void swap_rows(Matrix& m, std::size_t a, std::size_t b) { std::swap(m[a], m[b]); }

void swap_cols(Matrix& m, std::size_t a, std::size_t b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

// row[dst] += f * row[src]
void add_row(Matrix& m, std::size_t dst, std::size_t src, std::int64_t f) {
  for (std::size_t j = 0; j < m[dst].size(); ++j) m[dst][j] += f * m[src][j];
}

void add_col(Matrix& m, std::size_t dst, std::size_t src, std::int64_t f) {
  for (auto& row : m) row[dst] += f * row[src];
}

}  // namespace

SmithForm smith_normal_form(const Matrix& m, std::size_t cols) {
  const std::size_t rows = m.size();
  SmithForm f{m, identity(rows), identity(cols)};
  Matrix& d = f.diagonal;
  for (const auto& row : d) {
    if (row.size() != cols) throw std::invalid_argument("ragged matrix");
  }

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // Smallest nonzero magnitude in the trailing block becomes the pivot.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (d[i][j] != 0 && (pr == rows || std::llabs(d[i][j]) < std::llabs(d[pr][pc]))) {
            pr = i;
            pc = j;
          }
        }
      }
      if (pr == rows) return f;
      swap_rows(d, t, pr);
      swap_rows(f.left, t, pr);
      swap_cols(d, t, pc);
      swap_cols(f.right, t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        std::int64_t q = d[i][t] / d[t][t];
        add_row(d, i, t, -q);
        add_row(f.left, i, t, -q);
        clean &= d[i][t] == 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        std::int64_t q = d[t][j] / d[t][t];
        add_col(d, j, t, -q);
        add_col(f.right, j, t, -q);
        clean &= d[t][j] == 0;
      }
      if (!clean) continue;

      // Enforce divisibility of the trailing block by the pivot.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (d[i][j] % d[t][t] != 0) {
            add_row(d, t, i, 1);
            add_row(f.left, t, i, 1);
            divides = false;
            break;
          }
        }
      }
      if (!divides) continue;
      if (d[t][t] < 0) {
        for (auto& x : d[t]) x = -x;
        for (auto& x : f.left[t]) x = -x;
      }
      break;
    }
  }
  return f;
}

}  // namespace pcknot
