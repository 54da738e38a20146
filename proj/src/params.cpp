#include "burnside/params.hpp"

#include <numeric>
#include <stdexcept>

namespace burnside {

Rational Rational::of(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational{num, den};
}

Rational Rational::parse_decimal(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  std::int64_t num = 0;
  std::int64_t den = 1;
  bool seen_digit = false;
  bool seen_dot = false;
  for (char c : text) {
    if (c == '.') {
      if (seen_dot) throw std::invalid_argument("malformed number: " + std::string(text));
      seen_dot = true;
      continue;
    }
    if (c < '0' || c > '9') {
      throw std::invalid_argument("malformed number: " + std::string(text));
    }
    seen_digit = true;
    if (num > (INT64_MAX - 9) / 10) throw std::invalid_argument("number too large");
    num = num * 10 + (c - '0');
    if (seen_dot) {
      if (den > INT64_MAX / 10) throw std::invalid_argument("number too precise");
      den *= 10;
    }
  }
  if (!seen_digit) throw std::invalid_argument("malformed number: " + std::string(text));
  return of(num, den);
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

void BurnsideParams::validate() const {
  if (rank < 2) throw std::invalid_argument("params: rank must be at least 2");
  if (exponent < 3 || exponent % 2 == 0) {
    throw std::invalid_argument("params: exponent must be odd and at least 3");
  }
  if (xi.num < 0 || xi.den <= 0) throw std::invalid_argument("params: xi must be nonnegative");
}

// m > n/2 - xi  <=>  2*den*m > n*den - 2*num   (den > 0)
bool BurnsideParams::exceeds_threshold(std::int64_t m) const {
  return 2 * xi.den * m > static_cast<std::int64_t>(exponent) * xi.den - 2 * xi.num;
}

bool BurnsideParams::meets_threshold(std::int64_t m) const {
  return 2 * xi.den * m >= static_cast<std::int64_t>(exponent) * xi.den - 2 * xi.num;
}

std::int64_t BurnsideParams::min_move_exponent() const {
  // Smallest integer m with 2*den*m > n*den - 2*num.
  const std::int64_t rhs = static_cast<std::int64_t>(exponent) * xi.den - 2 * xi.num;
  const std::int64_t d = 2 * xi.den;
  std::int64_t m = rhs / d;  // floor for rhs >= 0 since d > 0
  if (rhs < 0) m = -((-rhs + d - 1) / d);
  while (2 * xi.den * m <= rhs) ++m;
  while (m > 1 && 2 * xi.den * (m - 1) > rhs) --m;
  return m < 1 ? 1 : m;
}

void SearchBudget::validate() const {
  if (max_moves < 0 || max_word_length < 1 || max_states < 1) {
    throw std::invalid_argument("budget fields must be positive");
  }
}

}  // namespace burnside
