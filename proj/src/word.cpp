#include "burnside/word.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace burnside {

namespace {

constexpr std::int32_t kMaxTextRank = 26;

void check_rank(std::int32_t rank) {
  if (rank < 1) throw std::invalid_argument("rank must be at least 1");
}

void check_same_rank(const FreeWord& a, const FreeWord& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch between words");
}

}  // namespace

char letter_to_char(const Letter& l) {
  assert(l.index >= 1 && l.index <= kMaxTextRank);
  return static_cast<char>((l.sign > 0 ? 'a' : 'A') + (l.index - 1));
}

Letter letter_from_char(char c, std::int32_t rank) {
  std::int32_t index;
  std::int32_t sign;
  if (c >= 'a' && c <= 'z') {
    index = c - 'a' + 1;
    sign = +1;
  } else if (c >= 'A' && c <= 'Z') {
    index = c - 'A' + 1;
    sign = -1;
  } else {
    throw std::invalid_argument(std::string("invalid character in word: '") + c + "'");
  }
  if (index > rank) {
    throw std::invalid_argument(std::string("generator '") + c + "' is outside rank " +
                                std::to_string(rank));
  }
  return Letter{index, sign};
}

FreeWord::FreeWord(std::int32_t rank) : rank_(rank) { check_rank(rank); }

FreeWord::FreeWord(already_reduced_tag, std::vector<Letter> letters, std::int32_t rank)
    : letters_(std::move(letters)), rank_(rank) {}

FreeWord FreeWord::reduce(std::span<const Letter> letters, std::int32_t rank) {
  check_rank(rank);
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (const Letter& l : letters) {
    if (l.index < 1 || l.index > rank || (l.sign != 1 && l.sign != -1)) {
      throw std::invalid_argument("letter outside rank");
    }
    if (!out.empty() && out.back() == l.inverse()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return FreeWord(already_reduced_tag{}, std::move(out), rank);
}

FreeWord FreeWord::parse(std::string_view text, std::int32_t rank) {
  check_rank(rank);
  if (rank > kMaxTextRank) throw std::invalid_argument("text form supports rank up to 26");
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char c : text) letters.push_back(letter_from_char(c, rank));
  return reduce(letters, rank);
}

FreeWord FreeWord::subword(std::size_t begin, std::size_t end) const {
  assert(begin <= end && end <= letters_.size());
  std::vector<Letter> slice(letters_.begin() + begin, letters_.begin() + end);
  return FreeWord(already_reduced_tag{}, std::move(slice), rank_);
}

std::string FreeWord::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (const Letter& l : letters_) s.push_back(letter_to_char(l));
  return s;
}

FreeWord free_reduce(std::span<const Letter> letters, std::int32_t rank) {
  return FreeWord::reduce(letters, rank);
}

FreeWord parse_word(std::string_view text, std::int32_t rank) {
  return FreeWord::parse(text, rank);
}

FreeWord multiply(const FreeWord& a, const FreeWord& b) {
  check_same_rank(a, b);
  std::vector<Letter> out = a.letters_;
  for (const Letter& l : b.letters_) {
    if (!out.empty() && out.back() == l.inverse()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return FreeWord(FreeWord::already_reduced_tag{}, std::move(out), a.rank());
}

FreeWord invert(const FreeWord& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters_.rbegin(); it != w.letters_.rend(); ++it) {
    out.push_back(it->inverse());
  }
  return FreeWord(FreeWord::already_reduced_tag{}, std::move(out), w.rank());
}

FreeWord power(const FreeWord& w, std::int64_t k) {
  if (k == 0 || w.empty()) return FreeWord(w.rank());
  // w = p c p^-1 with c cyclically reduced; then p c^k p^-1 is reduced as
  // spelled for either sign of k, so the power is assembled directly.
  CyclicDecomposition d = cyclic_reduce(w);
  const FreeWord core = k > 0 ? d.core : invert(d.core);
  const std::uint64_t reps = k > 0 ? static_cast<std::uint64_t>(k) : static_cast<std::uint64_t>(-k);
  std::vector<Letter> out;
  out.reserve(2 * d.conjugator.size() + reps * core.size());
  out.insert(out.end(), d.conjugator.letters().begin(), d.conjugator.letters().end());
  for (std::uint64_t i = 0; i < reps; ++i) {
    out.insert(out.end(), core.letters().begin(), core.letters().end());
  }
  const FreeWord pinv = invert(d.conjugator);
  out.insert(out.end(), pinv.letters().begin(), pinv.letters().end());
  return FreeWord(FreeWord::already_reduced_tag{}, std::move(out), w.rank());
}

std::size_t common_prefix_length(const FreeWord& a, const FreeWord& b) {
  std::size_t n = std::min(a.size(), b.size());
  std::size_t i = 0;
  while (i < n && a.at(i) == b.at(i)) ++i;
  return i;
}

bool lex_less(const FreeWord& a, const FreeWord& b) {
  return std::lexicographical_compare(a.letters().begin(), a.letters().end(),
                                      b.letters().begin(), b.letters().end());
}

bool shortlex_less(const FreeWord& a, const FreeWord& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a, b);
}

CyclicDecomposition cyclic_reduce(const FreeWord& w) {
  std::size_t i = 0;
  std::size_t j = w.size();
  while (j - i >= 2 && w.at(i) == w.at(j - 1).inverse()) {
    ++i;
    --j;
  }
  return CyclicDecomposition{w.subword(0, i), w.subword(i, j)};
}

bool is_cyclically_reduced(const FreeWord& w) {
  if (w.size() < 2) return true;
  return w.at(0) != w.at(w.size() - 1).inverse();
}

PrimitiveRoot primitive_root(const FreeWord& w) {
  if (w.empty()) throw std::invalid_argument("primitive_root: empty word");
  if (!is_cyclically_reduced(w)) {
    throw std::invalid_argument("primitive_root: word is not cyclically reduced");
  }
  // Smallest period via the KMP failure function; w is a proper power
  // exactly when that period divides |w|.
  const std::size_t n = w.size();
  std::vector<std::size_t> fail(n + 1, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = fail[i];
    while (k > 0 && w.at(i) != w.at(k)) k = fail[k];
    if (w.at(i) == w.at(k)) ++k;
    fail[i + 1] = k;
  }
  const std::size_t period = n - fail[n];
  if (n % period == 0) {
    return PrimitiveRoot{w.subword(0, period), static_cast<std::int64_t>(n / period)};
  }
  return PrimitiveRoot{w, 1};
}

}  // namespace burnside
