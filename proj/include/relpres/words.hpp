// words.hpp -- exact word arithmetic in free groups and free products G * F(x1..xn)
#ifndef RELPRES_WORDS_HPP
#define RELPRES_WORDS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "relpres/core.hpp"

namespace relpres {

/// One occurrence of a generator with exponent +-1.  Coefficient letters
/// index generators of the base group G, variable letters index x_i.
struct Letter {
  enum class Kind : std::uint8_t { Coefficient, Variable };
  Kind kind = Kind::Coefficient;
  int index = 0;
  int exponent = 1;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

inline Letter coeff_letter(int index, int exponent = 1) {
  return {Letter::Kind::Coefficient, index, exponent};
}
inline Letter var_letter(int index, int exponent = 1) {
  return {Letter::Kind::Variable, index, exponent};
}
inline Letter inverse(const Letter& l) { return {l.kind, l.index, -l.exponent}; }
inline bool cancels(const Letter& a, const Letter& b) {
  return a.kind == b.kind && a.index == b.index && a.exponent == -b.exponent;
}

/// Total letter order: coefficients before variables, then by generator
/// index, a letter before its inverse.  Used for canonical rotations.
bool letter_less(const Letter& a, const Letter& b);

/// A freely reduced word over a single indexed alphabet.  Letters carry
/// exponents +-1; powers are stored expanded.
class FreeWord {
 public:
  struct Gen {
    int index;
    int exponent;  // +1 or -1
    friend bool operator==(const Gen&, const Gen&) = default;
  };

  FreeWord() = default;

  /// Builds a word from raw letters, applying free reduction.
  static FreeWord reduced(std::vector<Gen> raw);
  static FreeWord generator(int index, int exponent = 1);
  /// x^k as a word (k may be any integer; k = 0 gives the empty word).
  static FreeWord power(int index, int k);

  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  const std::vector<Gen>& letters() const { return letters_; }

  FreeWord inverse() const;
  FreeWord operator*(const FreeWord& rhs) const;
  FreeWord pow(int k) const;
  /// this^g = g^-1 * this * g
  FreeWord conjugate(const FreeWord& g) const;

  long exponent_sum(int index) const;
  /// Largest generator index occurring, or -1 for the empty word.
  int max_index() const;

  /// Splits w = conj * core * conj^-1 with core cyclically reduced.
  std::pair<FreeWord, FreeWord> cyclically_reduce() const;  // (core, conj)
  bool is_cyclically_reduced() const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  bool operator<(const FreeWord& rhs) const;  // shortlex, index order, gen before inverse

 private:
  std::vector<Gen> letters_;
};

/// Result of the proper-power test.
struct PowerDecomposition {
  bool is_proper_power = false;
  FreeWord root;  // maximal-exponent root; equals the input when not a power
  int exponent = 1;
};

/// Decides whether u = v^k for some k >= 2 in the free group.  The identity
/// counts as a proper power.  Returns the root with maximal exponent.
PowerDecomposition is_proper_power(const FreeWord& u);

/// A reduced word of the free product G * F(x1..xn), stored as a flattened
/// letter sequence.  Syllable views (g_i, t_i) are derived on demand.
class RelativeWord {
 public:
  struct Syllable {
    FreeWord coeff;  // word over G-generators, may be empty
    FreeWord vars;   // nonempty word over the variables
  };

  RelativeWord() = default;

  /// Free-product reduction of a raw letter sequence.  Generator indices
  /// are validated against the declared alphabet sizes.
  /// Throws Errc::UndeclaredGenerator.
  static RelativeWord reduce(const std::vector<Letter>& raw, int coeff_generators,
                             int variables);
  /// Reduction without alphabet validation (indices already checked).
  static RelativeWord reduce_unchecked(std::vector<Letter> raw);
  static RelativeWord from_free_vars(const FreeWord& vars);
  static RelativeWord from_coeff(const FreeWord& coeff);

  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  const std::vector<Letter>& letters() const { return letters_; }

  /// Syllable count q: the number of maximal variable runs.
  int q() const;
  /// The (g_i, t_i) list; a trailing pure-coefficient part is returned
  /// separately as *tail.
  std::vector<Syllable> syllables(FreeWord* tail = nullptr) const;

  RelativeWord inverse() const;
  RelativeWord operator*(const RelativeWord& rhs) const;
  /// this^g = g^-1 * this * g
  RelativeWord conjugate(const RelativeWord& g) const;

  /// Image under the retraction killing G, freely reduced.
  FreeWord erase_coefficients() const;
  long exponent_sum(int variable) const;
  bool has_coefficient_letters() const;

  friend bool operator==(const RelativeWord&, const RelativeWord&) = default;

 private:
  std::vector<Letter> letters_;
};

/// A cyclically reduced word stored in its canonical rotation
/// (lexicographically least under letter_less).
class CyclicWord {
 public:
  CyclicWord() = default;

  /// Returns (cyclic word, conjugator) with w = conj * cyclic * conj^-1.
  static std::pair<CyclicWord, RelativeWord> cyclic_reduce(const RelativeWord& w);
  /// Wraps a word that is already cyclically reduced (throws otherwise).
  static CyclicWord require_cyclically_reduced(const RelativeWord& w);

  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  const std::vector<Letter>& letters() const { return letters_; }
  RelativeWord representative() const;
  /// All rotations of the letter sequence, each a valid reduced word.
  std::vector<std::vector<Letter>> rotations() const;

  int q() const { return representative().q(); }
  long exponent_sum(int variable) const { return representative().exponent_sum(variable); }

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;

 private:
  std::vector<Letter> letters_;
};

bool is_cyclically_reduced(const RelativeWord& w);

/// Equality oracle for coefficient words (three-valued); used when the
/// coefficient group is a proper quotient of the free group on its
/// generators.
using CoeffOracle = std::function<Tri(const FreeWord&, const FreeWord&)>;

/// Conjugacy of cyclically reduced words in the free product: rotation
/// check on letters (exact for free coefficient groups).  With an oracle,
/// syllable rotations are compared through it; coefficient syllables that
/// the oracle cannot separate from the identity give Unknown.
Tri conjugate_in_free_product(const CyclicWord& u, const CyclicWord& v,
                              const CoeffOracle& oracle = nullptr);

}  // namespace relpres

#endif
