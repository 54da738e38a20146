#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace burnside {

/// One letter of a free-group word: a generator (sign +1) or its inverse
/// (sign -1). Generator indices are 1-based; the text form maps index k to
/// the k-th lowercase letter ('a'..'z'), inverses to uppercase.
struct Letter {
  std::int32_t index;  // 1..rank
  std::int32_t sign;   // +1 or -1

  Letter inverse() const { return Letter{index, -sign}; }

  friend bool operator==(const Letter&, const Letter&) = default;
};

// Total order used for deterministic tie-breaking: a < A < b < B < ...
inline bool operator<(const Letter& a, const Letter& b) {
  if (a.index != b.index) return a.index < b.index;
  return a.sign > b.sign;  // +1 before -1
}

char letter_to_char(const Letter& l);
Letter letter_from_char(char c, std::int32_t rank);

/// A freely reduced word over the generators of F_r and their inverses.
/// Words are immutable values; every operation returns a fresh word.
/// The empty word is the identity.
class FreeWord {
 public:
  explicit FreeWord(std::int32_t rank);

  /// Free reduction of an arbitrary letter sequence.
  static FreeWord reduce(std::span<const Letter> letters, std::int32_t rank);

  /// Parses the text form (lowercase generators, uppercase inverses) and
  /// reduces. Throws std::invalid_argument on a character outside the
  /// alphabet or a generator beyond `rank`.
  static FreeWord parse(std::string_view text, std::int32_t rank);

  std::int32_t rank() const { return rank_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& at(std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }

  /// The factor with letter positions [begin, end). A factor of a reduced
  /// word is reduced, so this never re-scans.
  FreeWord subword(std::size_t begin, std::size_t end) const;

  std::string str() const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  struct already_reduced_tag {};
  FreeWord(already_reduced_tag, std::vector<Letter> letters, std::int32_t rank);

  std::vector<Letter> letters_;
  std::int32_t rank_;

  friend FreeWord multiply(const FreeWord&, const FreeWord&);
  friend FreeWord invert(const FreeWord&);
  friend FreeWord power(const FreeWord&, std::int64_t);
};

FreeWord free_reduce(std::span<const Letter> letters, std::int32_t rank);
FreeWord parse_word(std::string_view text, std::int32_t rank);

FreeWord multiply(const FreeWord& a, const FreeWord& b);
inline FreeWord operator*(const FreeWord& a, const FreeWord& b) { return multiply(a, b); }
FreeWord invert(const FreeWord& w);

/// power(w, k) = reduce(w^k); negative k via the inverse.
FreeWord power(const FreeWord& w, std::int64_t k);

/// Longest common prefix length of two reduced words.
std::size_t common_prefix_length(const FreeWord& a, const FreeWord& b);

/// Shortlex order (length first, then letterwise); total and deterministic.
bool shortlex_less(const FreeWord& a, const FreeWord& b);
bool lex_less(const FreeWord& a, const FreeWord& b);

/// w = conjugator . core . conjugator^-1 with no cancellation at the
/// junctions; core is cyclically reduced and of minimal length among
/// conjugates of w.
struct CyclicDecomposition {
  FreeWord conjugator;
  FreeWord core;
};

CyclicDecomposition cyclic_reduce(const FreeWord& w);

bool is_cyclically_reduced(const FreeWord& w);

/// root^exponent == w with root primitive (not a proper power).
/// Pre: w non-empty and cyclically reduced; throws otherwise.
struct PrimitiveRoot {
  FreeWord root;
  std::int64_t exponent;
};

PrimitiveRoot primitive_root(const FreeWord& w);

}  // namespace burnside
