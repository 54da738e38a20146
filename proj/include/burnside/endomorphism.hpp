#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "burnside/word.hpp"

namespace burnside {

/// An endomorphism of F_r given by the images of the generators. Inverse
/// letters map to the inverted image; application reduces the result.
struct Endomorphism {
  std::int32_t rank;
  std::vector<FreeWord> images;  // images[i] is the image of generator i+1

  static Endomorphism identity(std::int32_t rank);

  /// Parses mapping text of the form "a=ab; b=a". Every generator of the
  /// rank must be assigned exactly once.
  static Endomorphism parse(std::string_view text, std::int32_t rank);

  std::string str() const;

  friend bool operator==(const Endomorphism&, const Endomorphism&) = default;
};

FreeWord apply(const Endomorphism& e, const FreeWord& w);
Endomorphism compose(const Endomorphism& e1, const Endomorphism& e2);  // e1 after e2

/// True iff e and f invert each other on every generator.
bool verify_inverse(const Endomorphism& e, const Endomorphism& f);

/// [w, e(w), e^2(w), ..., e^k(w)].
std::vector<FreeWord> orbit(const Endomorphism& e, const FreeWord& w, std::int64_t k);

/// First `length` letters of the limit word of iterating e on the given
/// generator. Requires the iterates to stabilize on that prefix; throws on
/// substitutions that do not grow or do not extend their prefixes.
FreeWord limit_prefix(const Endomorphism& e, Letter seed, std::int64_t length);

/// Prefix of the Thue-Morse word over {a, b} (parity of the bit count).
FreeWord thue_morse(std::int64_t length);

}  // namespace burnside
