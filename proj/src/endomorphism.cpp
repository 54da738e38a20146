#include "burnside/endomorphism.hpp"

#include <bit>
#include <stdexcept>

namespace burnside {

namespace {

void check_endo(const Endomorphism& e) {
  if (e.rank < 1) throw std::invalid_argument("endomorphism: rank must be at least 1");
  if (static_cast<std::int32_t>(e.images.size()) != e.rank) {
    throw std::invalid_argument("endomorphism: one image per generator required");
  }
  for (const FreeWord& im : e.images) {
    if (im.rank() != e.rank) throw std::invalid_argument("endomorphism: image rank mismatch");
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

Endomorphism Endomorphism::identity(std::int32_t rank) {
  Endomorphism e{rank, {}};
  e.images.reserve(rank);
  for (std::int32_t i = 1; i <= rank; ++i) {
    Letter l{i, +1};
    e.images.push_back(FreeWord::reduce({&l, 1}, rank));
  }
  return e;
}

Endomorphism Endomorphism::parse(std::string_view text, std::int32_t rank) {
  if (rank < 1) throw std::invalid_argument("endomorphism: rank must be at least 1");
  std::vector<FreeWord> images(rank, FreeWord(rank));
  std::vector<bool> assigned(rank, false);
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t sep = std::min(text.find(';', pos), text.size());
    const std::string_view entry = trim(text.substr(pos, sep - pos));
    pos = sep + 1;
    if (entry.empty()) continue;
    const std::size_t eq = entry.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("endomorphism: entry without '=' in mapping");
    }
    const std::string_view lhs = trim(entry.substr(0, eq));
    if (lhs.size() != 1 || lhs[0] < 'a' || lhs[0] > 'z') {
      throw std::invalid_argument("endomorphism: left side must be a single generator");
    }
    const Letter gen = letter_from_char(lhs[0], rank);
    if (assigned[gen.index - 1]) {
      throw std::invalid_argument("endomorphism: generator assigned twice");
    }
    assigned[gen.index - 1] = true;
    images[gen.index - 1] = FreeWord::parse(trim(entry.substr(eq + 1)), rank);
  }
  for (std::int32_t i = 0; i < rank; ++i) {
    if (!assigned[i]) {
      throw std::invalid_argument(std::string("endomorphism: no image for generator '") +
                                  letter_to_char(Letter{i + 1, +1}) + "'");
    }
  }
  return Endomorphism{rank, std::move(images)};
}

std::string Endomorphism::str() const {
  check_endo(*this);
  std::string out;
  for (std::int32_t i = 0; i < rank; ++i) {
    if (i > 0) out += "; ";
    out += letter_to_char(Letter{i + 1, +1});
    out += "=";
    out += images[i].str();
  }
  return out;
}

FreeWord apply(const Endomorphism& e, const FreeWord& w) {
  check_endo(e);
  if (w.rank() != e.rank) throw std::invalid_argument("apply: rank mismatch");
  std::vector<Letter> out;
  for (const Letter& l : w.letters()) {
    const FreeWord& image = e.images[l.index - 1];
    if (l.sign > 0) {
      out.insert(out.end(), image.letters().begin(), image.letters().end());
    } else {
      for (auto it = image.letters().rbegin(); it != image.letters().rend(); ++it) {
        out.push_back(it->inverse());
      }
    }
  }
  return FreeWord::reduce(out, e.rank);
}

Endomorphism compose(const Endomorphism& e1, const Endomorphism& e2) {
  check_endo(e1);
  check_endo(e2);
  if (e1.rank != e2.rank) throw std::invalid_argument("compose: rank mismatch");
  Endomorphism out{e1.rank, {}};
  out.images.reserve(e1.rank);
  for (const FreeWord& im : e2.images) out.images.push_back(apply(e1, im));
  return out;
}

bool verify_inverse(const Endomorphism& e, const Endomorphism& f) {
  if (e.rank != f.rank) throw std::invalid_argument("verify_inverse: rank mismatch");
  const Endomorphism id = Endomorphism::identity(e.rank);
  return compose(e, f) == id && compose(f, e) == id;
}

std::vector<FreeWord> orbit(const Endomorphism& e, const FreeWord& w, std::int64_t k) {
  if (k < 0) throw std::invalid_argument("orbit: negative iteration count");
  std::vector<FreeWord> out;
  out.reserve(k + 1);
  out.push_back(w);
  for (std::int64_t i = 0; i < k; ++i) out.push_back(apply(e, out.back()));
  return out;
}

FreeWord limit_prefix(const Endomorphism& e, Letter seed, std::int64_t length) {
  check_endo(e);
  if (length < 0) throw std::invalid_argument("limit_prefix: negative length");
  if (seed.index < 1 || seed.index > e.rank) {
    throw std::invalid_argument("limit_prefix: seed outside rank");
  }
  if (length == 0) return FreeWord(e.rank);
  FreeWord current = FreeWord::reduce({&seed, 1}, e.rank);
  // Iterate until two successive iterates are long enough and agree on the
  // requested prefix; one extra agreement guards against accidental matches.
  const std::int64_t max_rounds = length + 32;
  std::int64_t stable = 0;
  for (std::int64_t round = 0; round < max_rounds; ++round) {
    FreeWord next = apply(e, current);
    if (next == current && static_cast<std::int64_t>(next.size()) < length) {
      throw std::invalid_argument("limit_prefix: substitution does not grow from this seed");
    }
    if (static_cast<std::int64_t>(current.size()) >= length &&
        static_cast<std::int64_t>(next.size()) >= length) {
      bool agree = true;
      for (std::int64_t i = 0; i < length; ++i) {
        if (current.at(i) != next.at(i)) {
          agree = false;
          break;
        }
      }
      if (agree) {
        if (++stable >= 2) return current.subword(0, length);
      } else {
        stable = 0;
      }
    }
    current = std::move(next);
  }
  throw std::invalid_argument("limit_prefix: iterates do not stabilize on a prefix");
}

FreeWord thue_morse(std::int64_t length) {
  if (length < 0) throw std::invalid_argument("thue_morse: negative length");
  std::vector<Letter> letters;
  letters.reserve(length);
  for (std::int64_t i = 0; i < length; ++i) {
    const bool odd = std::popcount(static_cast<std::uint64_t>(i)) % 2 == 1;
    letters.push_back(Letter{odd ? 2 : 1, +1});
  }
  return FreeWord::reduce(letters, 2);
}

}  // namespace burnside
