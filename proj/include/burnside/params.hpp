#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace burnside {

/// Exact nonnegative rational, normalized with positive denominator. Used
/// for the move threshold n/2 - xi so comparisons against integer exponents
/// are exact.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational of(std::int64_t num, std::int64_t den);
  /// Parses "2", "1.5", ".25" and the like.
  static Rational parse_decimal(std::string_view text);

  std::string str() const;

  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Parameters of the move system: words live in F_rank, moves multiply by
/// conjugated n-th powers, and a move on a power u^m is admissible when
/// m > n/2 - xi.
struct BurnsideParams {
  std::int32_t rank = 2;      // r >= 2
  std::int32_t exponent = 5;  // odd n >= 3
  Rational xi = Rational{1, 1};

  void validate() const;

  /// m > n/2 - xi, exactly (the combinatorial move condition).
  bool exceeds_threshold(std::int64_t m) const;
  /// m >= n/2 - xi, exactly (the geometric variant).
  bool meets_threshold(std::int64_t m) const;
  /// Smallest integer strictly above n/2 - xi, clamped to >= 1.
  std::int64_t min_move_exponent() const;
};

/// Explicit termination bounds for searches over the (infinite) move graph.
struct SearchBudget {
  std::int64_t max_moves = 12;
  std::int64_t max_word_length = 512;
  std::int64_t max_states = 200000;

  void validate() const;
};

}  // namespace burnside
