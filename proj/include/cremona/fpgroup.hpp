#pragma once

// Free-group words, finite presentations and their abelianization.

#include "cremona/integer.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace cremona {

struct Letter {
  std::string generator;
  bool inverse = false;

  Letter inverted() const { return {generator, !inverse}; }
  bool operator==(const Letter&) const = default;
};

/// A word in a free group, stored letter by letter exactly as built. Two words
/// compare equal when their freely reduced forms coincide.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  /// `name^exponent` as a single syllable; exponent 0 gives the empty word.
  static Word power(const std::string& generator, long long exponent);
  static Word generator(const std::string& name) { return power(name, 1); }

  /// Parses `term+` with `term := name | name "^" int`, whitespace separated.
  /// The literal `1` (or an empty string) is the identity.
  static Word parse(const std::string& text);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  Word inverse() const;
  Word pow(long long exponent) const;
  /// Concatenation followed by free reduction.
  Word operator*(const Word& rhs) const;

  /// Substitutes each occurrence of `generator` (and its inverse) with `image`.
  Word substitute(const std::string& generator, const Word& image) const;

  /// Exponent sum of `generator` in this word.
  long long exponent_sum(const std::string& generator) const;

  /// Syllable form, e.g. `a b^2 a^-1`; the empty word prints as `1`.
  std::string str() const;

  bool operator==(const Word& rhs) const;

 private:
  std::vector<Letter> letters_;
};

/// Unique freely reduced representative of `w`. Idempotent, never lengthens.
Word free_reduce(const Word& w);

/// Commutator a b a^-1 b^-1.
Word commutator(const Word& a, const Word& b);

class Presentation {
 public:
  Presentation() = default;
  /// Throws Error if a relator mentions an undeclared generator or a generator
  /// name repeats. Relators are stored freely reduced.
  Presentation(std::vector<std::string> generators, std::vector<Word> relators);

  const std::vector<std::string>& generators() const noexcept { return generators_; }
  const std::vector<Word>& relators() const noexcept { return relators_; }
  bool has_generator(const std::string& name) const;

  /// Drops relators that reduce to the empty word.
  Presentation without_empty_relators() const;

  /// `<a, b | a^2, b^3>`.
  std::string str() const;
  static Presentation parse(const std::string& text);

  bool operator==(const Presentation&) const = default;

 private:
  std::vector<std::string> generators_;
  std::vector<Word> relators_;
};

/// Dense matrix of exact integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Finitely generated abelian group Z^free_rank (+) Z/t1 (+) ... with t1 | t2 | ...
struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  /// Throws Error unless every torsion entry is >= 2 and divides the next.
  void validate() const;
  /// Number of cyclic summands in invariant-factor form.
  std::size_t summand_count() const noexcept { return free_rank + torsion.size(); }
  bool finite() const noexcept { return free_rank == 0; }
  /// Product of torsion entries; meaningful only when finite().
  Integer order() const;
  /// `Z^2 (+) Z/2 (+) Z/6`, `0` for the trivial group.
  std::string str() const;

  /// Invariants of the direct sum of two groups.
  static AbelianInvariants direct_sum(const AbelianInvariants& a, const AbelianInvariants& b);

  bool operator==(const AbelianInvariants&) const = default;
};

/// Nonzero invariant factors d1 | d2 | ... | d_rank, all positive. Unit factors
/// are kept.
std::vector<Integer> smith_normal_form(IntMatrix m);

/// Invariants of the abelian group presented by the given exponent relations
/// (rows) on `cols` generators.
AbelianInvariants abelian_invariants_of_relations(const IntMatrix& relations);

/// Relator exponent-sum matrix: one row per relator, one column per generator.
IntMatrix exponent_matrix(const Presentation& p);

AbelianInvariants abelianization(const Presentation& p);

/// <alpha, alpha2, ..., alphak | [alpha, alpha_i], 2 <= i <= k>: the local group
/// Z (+) F_{k-1} of k concurrent lines with central generator alpha.
Presentation local_group(int k);

/// The rank-one local group <alpha | >, i.e. Z.
Presentation local_group_degenerate();

/// The branch-meridian presentation
/// <alpha1..alphak | alpha1...alphak = alpha2...alphak alpha1 = ...>.
Presentation local_group_branches(int k);

/// The central element alpha1 alpha2 ... alphak written over the branch
/// generators of `local_group_branches(k)`.
Word local_group_central_word(int k);

/// Name of the i-th branch meridian (1-based) in the local-group alphabets.
std::string branch_generator(int i);

/// Appends `extra` to the relators. Throws Error on an undeclared generator.
Presentation quotient(const Presentation& p, const std::vector<Word>& extra);

/// Order of (Z (+) F_{k-1}) / <<alpha^{n_i} alpha_i>>, computed in homology
/// through the Smith normal form. Throws Error if `ns` is empty or some n_i < 1.
Integer cyclic_quotient_order(const std::vector<Integer>& ns);

}  // namespace cremona
