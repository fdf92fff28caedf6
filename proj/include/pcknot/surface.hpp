#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pcknot {

/// Raised when an operation is not available for the given input class,
/// e.g. free homotopy classes on a closed surface.
class UnsupportedOperation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One letter g^{+1} or g^{-1}; `gen` indexes SurfacePresentation::generators.
struct Letter {
  int gen = 0;
  int exp = 1;

  Letter inverse() const { return {gen, -exp}; }
  friend bool operator==(const Letter&, const Letter&) = default;
  // g < g^-1, then by generator index.
  friend std::strong_ordering operator<=>(const Letter& a, const Letter& b) {
    if (auto c = a.gen <=> b.gen; c != 0) return c;
    return b.exp <=> a.exp;
  }
};

struct Word {
  std::vector<Letter> letters;

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }
  Word inverse() const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;
};

/// Concatenation that cancels inverse pairs only across the junction.
Word concat_cancel(const Word& a, const Word& b);

struct Generator {
  std::string symbol;
  int w1 = 0;

  friend bool operator==(const Generator&, const Generator&) = default;
};

enum class SurfaceKind { with_boundary, closed };

/// Smith-normal-form data for H_1 of a presentation: coordinates are
/// v * basis_change, entry j reduced modulo torsion[j] (0 = free factor).
struct HomologyBasis {
  std::vector<std::vector<std::int64_t>> basis_change;
  std::vector<std::int64_t> torsion;
};

class SurfacePresentation {
 public:
  /// Empty presentation; only useful as a placeholder before assignment.
  SurfacePresentation() = default;

  /// Surface with boundary: free fundamental group on the given generators.
  static SurfacePresentation with_boundary(std::vector<Generator> gens);
  /// Connected sum of k projective planes: generators a1..ak, relator a1^2...ak^2.
  static SurfacePresentation closed(int k);

  SurfaceKind kind() const { return kind_; }
  bool is_closed() const { return kind_ == SurfaceKind::closed; }
  const std::vector<Generator>& generators() const { return gens_; }
  const Word& relator() const { return relator_; }
  const HomologyBasis& homology_basis() const { return basis_; }
  int closed_genus() const { return static_cast<int>(gens_.size()); }

  std::optional<int> index_of(std::string_view symbol) const;
  const std::string& symbol(int gen) const { return gens_.at(static_cast<std::size_t>(gen)).symbol; }

  friend bool operator==(const SurfacePresentation& a, const SurfacePresentation& b) {
    return a.kind_ == b.kind_ && a.gens_ == b.gens_;
  }

 private:
  void build_homology();

  SurfaceKind kind_ = SurfaceKind::with_boundary;
  std::vector<Generator> gens_;
  Word relator_;
  HomologyBasis basis_;
};

/// Parses "a.b-.a"; "." is the empty word. Throws std::invalid_argument with
/// the offending token for unknown generators or malformed letters.
Word parse_word(std::string_view text, const SurfacePresentation& s);
std::string format_word(const Word& w, const SurfacePresentation& s);

/// Throws std::out_of_range if a letter names no generator of `s`.
void check_word(const Word& w, const SurfacePresentation& s);

Word reduce_word(const Word& w);
Word cyclic_reduce(const Word& w);

int w1(const Word& w, const SurfacePresentation& s);

/// Free homotopy class in a free group: cyclically reduced word, least
/// rotation. The empty word is the contractible class.
struct FreeHomotopyClass {
  Word word;

  bool contractible() const { return word.empty(); }
  friend bool operator==(const FreeHomotopyClass&, const FreeHomotopyClass&) = default;
  // Shorter words first, then lexicographic on letters.
  friend std::strong_ordering operator<=>(const FreeHomotopyClass& a, const FreeHomotopyClass& b) {
    if (auto c = a.word.size() <=> b.word.size(); c != 0) return c;
    return a.word.letters <=> b.word.letters;
  }
};

FreeHomotopyClass free_homotopy_class(const Word& w, const SurfacePresentation& s);
std::string format_class(const FreeHomotopyClass& c, const SurfacePresentation& s);

struct HomologyClass {
  std::vector<std::int64_t> coords;

  bool is_zero() const;
  friend bool operator==(const HomologyClass&, const HomologyClass&) = default;
  friend auto operator<=>(const HomologyClass&, const HomologyClass&) = default;
};

HomologyClass homology_class(const Word& w, const SurfacePresentation& s);
HomologyClass homology_of_exponents(const std::vector<std::int64_t>& exponents, const SurfacePresentation& s);
std::string format_homology(const HomologyClass& h, const SurfacePresentation& s);

/// Exponent-sum vector of a word.
std::vector<std::int64_t> abelianize(const Word& w, const SurfacePresentation& s);

struct SmithForm {
  std::vector<std::vector<std::int64_t>> diagonal;  // rows x cols
  std::vector<std::vector<std::int64_t>> left;      // rows x rows, unimodular
  std::vector<std::vector<std::int64_t>> right;     // cols x cols, unimodular
};

/// left * m * right == diagonal, diagonal entries non-negative and each
/// dividing the next.
SmithForm smith_normal_form(const std::vector<std::vector<std::int64_t>>& m, std::size_t cols);

}  // namespace pcknot
