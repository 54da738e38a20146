#pragma once

#include <cstdint>
#include <vector>

#include "burnside/word.hpp"

namespace burnside {

/// A maximal repetition: the factor w[start, end) has smallest period
/// `period`, repeats it at least twice (end - start >= 2*period), and cannot
/// be extended by one letter on either side without breaking that period.
struct Run {
  std::int64_t start;
  std::int64_t end;  // exclusive
  std::int64_t period;

  friend bool operator==(const Run&, const Run&) = default;
};

/// A placement w = p . u^m . s read off the letters of w: the letters at
/// positions [prefix_len, prefix_len + m*|u|) spell u^m exactly. The base u
/// is primitive and cyclically reduced. `word` records the scanned word so a
/// factorization cannot silently be replayed against something else.
struct PowerFactorization {
  std::int64_t prefix_len;
  FreeWord base;
  std::int64_t exponent;
  FreeWord word;

  friend bool operator==(const PowerFactorization&, const PowerFactorization&) = default;
};

/// All maximal repetitions of a reduced word with exponent >= 2, each
/// reported once, sorted by (start, period).
std::vector<Run> find_runs(const FreeWord& w);

/// Every placement derived from a run: for a run (s, e, p) and each offset
/// o in [s, e - p], the base u = w[o, o + p) with exponent
/// m = floor((e - o) / p). Entries with m < min_exponent are dropped.
/// Output sorted by (prefix_len, base, exponent).
std::vector<PowerFactorization> find_power_factorizations(const FreeWord& w,
                                                          std::int64_t min_exponent);

/// True iff no factor of w is a p-th power of a non-empty word. Pre: p >= 2.
bool is_power_free(const FreeWord& w, std::int64_t p);

/// Letter-level validity of f against w (same word, base letters in place).
bool factorization_matches(const PowerFactorization& f, const FreeWord& w);

}  // namespace burnside
