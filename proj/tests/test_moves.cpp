#include <doctest.h>

#include <random>

#include "burnside/moves.hpp"
#include "test_util.hpp"

using namespace burnside;

namespace {

BurnsideParams desk_params(std::int32_t n = 5, std::int64_t xi_num = 1, std::int64_t xi_den = 1) {
  BurnsideParams p;
  p.rank = 2;
  p.exponent = n;
  p.xi = Rational::of(xi_num, xi_den);
  return p;
}

PowerFactorization factorization_at(const FreeWord& w, std::int64_t prefix_len,
                                    const std::string& base, std::int64_t exponent) {
  return PowerFactorization{prefix_len, parse_word(base, w.rank()), exponent, w};
}

// (u^l v)^q (u^(l-n) v)^(n-q) with u = a, v = b.
FreeWord messed_up_power(std::int32_t l, std::int32_t q, std::int32_t n) {
  const FreeWord a = parse_word("a", 2);
  const FreeWord b = parse_word("b", 2);
  const FreeWord high = multiply(power(a, l), b);
  const FreeWord low = multiply(power(a, l - n), b);
  return multiply(power(high, q), power(low, n - q));
}

}  // namespace

TEST_CASE("threshold arithmetic is exact") {
  const BurnsideParams p = desk_params();  // n=5, xi=1 -> threshold 1.5
  CHECK(p.min_move_exponent() == 2);
  CHECK_FALSE(p.exceeds_threshold(1));
  CHECK(p.exceeds_threshold(2));
  CHECK(p.meets_threshold(2));
  CHECK_FALSE(p.meets_threshold(1));

  const BurnsideParams p0 = desk_params(5, 0, 1);  // threshold 2.5
  CHECK(p0.min_move_exponent() == 3);
  CHECK_FALSE(p0.exceeds_threshold(2));
  CHECK(p0.exceeds_threshold(3));

  const BurnsideParams phuge = desk_params(5, 7, 1);  // threshold -4.5
  CHECK(phuge.min_move_exponent() == 1);
  CHECK(phuge.exceeds_threshold(1));

  CHECK(Rational::parse_decimal("1.5") == Rational::of(3, 2));
  CHECK(Rational::parse_decimal("0.25") == Rational::of(1, 4));
  CHECK(Rational::parse_decimal("2") == Rational::of(2, 1));
  CHECK_THROWS(Rational::parse_decimal("1.2.3"));
  CHECK_THROWS(Rational::parse_decimal("x"));

  BurnsideParams bad = desk_params(4);
  CHECK_THROWS(bad.validate());
}

TEST_CASE("apply_move fixtures") {
  const BurnsideParams p = desk_params();

  const FreeWord a5 = parse_word("aaaaa", 2);
  auto [out1, w1] = apply_move(a5, factorization_at(a5, 0, "a", 5), p);
  CHECK(out1.empty());
  CHECK(w1.conjugator.empty());
  CHECK(w1.base.str() == "a");
  CHECK(w1.power == -5);

  const FreeWord a7b = parse_word("aaaaaaab", 2);
  auto [out2, w2] = apply_move(a7b, factorization_at(a7b, 0, "a", 7), p);
  CHECK(out2.str() == "aab");

  const FreeWord baaaB = parse_word("baaaB", 2);
  auto [out3, w3] = apply_move(baaaB, factorization_at(baaaB, 1, "a", 3), p);
  CHECK(out3.str() == "bAAB");
  // witness identity with v = bab^-1
  const FreeWord v = parse_word("baB", 2);
  CHECK(multiply(power(v, -5), baaaB) == out3);
  CHECK(multiply(multiply(w3.conjugator, w3.base), invert(w3.conjugator)) == v);
}

TEST_CASE("apply_move rejects bad inputs") {
  const BurnsideParams p = desk_params();
  const FreeWord a5 = parse_word("aaaaa", 2);
  // threshold violated (m = 1 <= 1.5)
  CHECK_THROWS_AS(apply_move(a5, factorization_at(a5, 4, "a", 1), p), std::invalid_argument);
  // stale: factorization built against a different word
  const FreeWord other = parse_word("aaaab", 2);
  CHECK_THROWS_AS(apply_move(a5, factorization_at(other, 0, "a", 4), p), std::invalid_argument);
  // letters do not match
  CHECK_THROWS_AS(apply_move(a5, factorization_at(a5, 0, "b", 2), p), std::invalid_argument);
  // non-primitive base
  const FreeWord a4 = parse_word("aaaa", 2);
  CHECK_THROWS_AS(apply_move(a4, factorization_at(a4, 0, "aa", 2), p), std::invalid_argument);
}

TEST_CASE("a move may lengthen the word") {
  const BurnsideParams p = desk_params();
  const FreeWord w = parse_word("aab", 2);
  auto [out, witness] = apply_move(w, factorization_at(w, 0, "a", 2), p);
  CHECK(out.str() == "AAAb");
  CHECK(out.size() > w.size());
}

TEST_CASE("enumerate_moves ordering and contents") {
  CHECK(enumerate_moves(parse_word("ab", 2), desk_params()).empty());

  // threshold 2.5: only m >= 3 placements of the a-run qualify
  const auto moves = enumerate_moves(parse_word("aaaaa", 2), desk_params(5, 0, 1));
  REQUIRE(moves.size() == 3);
  CHECK(moves[0].factorization.prefix_len == 0);
  CHECK(moves[0].factorization.exponent == 5);
  CHECK(moves[1].factorization.prefix_len == 1);
  CHECK(moves[1].factorization.exponent == 4);
  CHECK(moves[2].factorization.prefix_len == 2);
  CHECK(moves[2].factorization.exponent == 3);

  // matches the scan filtered by the exact threshold
  const BurnsideParams p = desk_params();
  std::mt19937 rng(43);
  for (int i = 0; i < 300; ++i) {
    const FreeWord w = testutil::random_reduced_word_up_to(rng, 2, 14);
    const auto got = enumerate_moves(w, p);
    std::size_t expected = 0;
    for (const PowerFactorization& f : find_power_factorizations(w, 1)) {
      if (p.exceeds_threshold(f.exponent)) ++expected;
    }
    CHECK(got.size() == expected);
    for (std::size_t k = 0; k + 1 < got.size(); ++k) {
      const auto len = [&](const ElementaryMove& m) {
        return apply_move(w, m.factorization, p).first.size();
      };
      CHECK(len(got[k]) <= len(got[k + 1]));
    }
  }
}

TEST_CASE("enumerate_moves on the messed-up power") {
  const FreeWord w = messed_up_power(7, 2, 5);
  CHECK(w.str() == "aaaaaaabaaaaaaabaabaabaab");
  const auto moves = enumerate_moves(w, desk_params());
  // moves exist on both a^7 blocks and every a^2 block
  auto has = [&](std::int64_t prefix_len, const std::string& base, std::int64_t m) {
    return std::any_of(moves.begin(), moves.end(), [&](const ElementaryMove& mv) {
      return mv.factorization.prefix_len == prefix_len && mv.factorization.base.str() == base &&
             mv.factorization.exponent == m;
    });
  };
  CHECK(has(0, "a", 7));
  CHECK(has(8, "a", 7));
  CHECK(has(16, "a", 2));
  CHECK(has(19, "a", 2));
  CHECK(has(22, "a", 2));
  CHECK(has(0, "aaaaaaab", 2));  // the (a^7 b)^2 run
  CHECK(has(13, "aab", 4));      // the period-3 run across the tail
}

TEST_CASE("trivialization of simple powers") {
  const BurnsideParams p = desk_params();
  const SearchBudget budget;

  const auto empty_seq = search_trivialization(FreeWord(2), p, budget);
  REQUIRE(empty_seq.has_value());
  CHECK(empty_seq->steps.empty());
  CHECK(empty_seq->end.empty());

  const auto one = search_trivialization(parse_word("aaaaa", 2), p, budget);
  REQUIRE(one.has_value());
  CHECK(one->steps.size() == 1);
  CHECK(one->end.empty());
  CHECK(one->verified);
  CHECK(verify_sequence(*one, p).ok);
}

TEST_CASE("trivialization reports unknown when no moves exist") {
  const auto result = search_trivialization(parse_word("ab", 2), desk_params(), SearchBudget());
  CHECK_FALSE(result.has_value());
}

// The q = 2 instance of (u^l v)^q (u^(l-n) v)^(n-q): two moves lower the
// a^7 blocks to a^(7-5), after which the whole word is the visible 5-th
// power (a^2 b)^5 and one further move removes it. The minimal certificate
// has 3 steps.
TEST_CASE("trivialization of the messed-up power") {
  const BurnsideParams p = desk_params();
  const FreeWord w = messed_up_power(7, 2, 5);
  const auto seq = search_trivialization(w, p, SearchBudget());
  REQUIRE(seq.has_value());
  CHECK(seq->end.empty());
  CHECK(seq->verified);
  CHECK(seq->steps.size() == 3);
  CHECK(verify_sequence(*seq, p).ok);

  // deterministic canonical sequence
  CHECK(seq->steps[0].move.factorization.base.str() == "aab");
  CHECK(seq->steps[0].move.factorization.prefix_len == 13);
  CHECK(seq->steps[0].move.factorization.exponent == 4);
  CHECK(seq->steps[1].move.factorization.base.str() == "a");
  CHECK(seq->steps[2].move.factorization.base.str() == "a");
}

TEST_CASE("trivialization is deterministic across runs") {
  const BurnsideParams p = desk_params();
  const FreeWord w = messed_up_power(7, 2, 5);
  const auto first = search_trivialization(w, p, SearchBudget());
  const auto second = search_trivialization(w, p, SearchBudget());
  REQUIRE(first.has_value());
  REQUIRE(second.has_value());
  CHECK(to_json(*first) == to_json(*second));
}

TEST_CASE("identification meets in the middle") {
  const BurnsideParams p = desk_params();
  const SearchBudget budget;

  const FreeWord w = parse_word("abab", 2);
  const auto same = search_identification(w, w, p, budget);
  REQUIRE(same.has_value());
  CHECK(same->first.steps.empty());
  CHECK(same->second.steps.empty());

  // h = v^-n g admits the move back onto g
  const FreeWord g = parse_word("ba", 2);
  const FreeWord v = parse_word("a", 2);
  const FreeWord h = multiply(power(v, -5), g);
  const auto pair = search_identification(g, h, p, budget);
  REQUIRE(pair.has_value());
  CHECK(pair->first.steps.size() + pair->second.steps.size() == 1);
  CHECK(pair->first.end == pair->second.end);
  CHECK(verify_sequence(pair->first, p).ok);
  CHECK(verify_sequence(pair->second, p).ok);

  // the messed-up power against its repaired form; both trivialize, so the
  // searches meet (at the empty word: 3 moves on the left, 1 on the right)
  const FreeWord left = messed_up_power(7, 2, 5);
  const FreeWord right = power(parse_word("aaaaaaab", 2), 5);
  const auto meet = search_identification(left, right, p, budget);
  REQUIRE(meet.has_value());
  CHECK(meet->first.end == meet->second.end);
  CHECK(meet->first.steps.size() == 3);
  CHECK(meet->second.steps.size() == 1);
  CHECK(meet->first.end.empty());
}

TEST_CASE("verify_sequence catches tampering") {
  const BurnsideParams p = desk_params();
  const FreeWord w = parse_word("aaaaa", 2);
  auto seq = search_trivialization(w, p, SearchBudget());
  REQUIRE(seq.has_value());
  REQUIRE(verify_sequence(*seq, p).ok);

  // exponent below threshold but still letter-valid
  MoveSequence tampered = *seq;
  tampered.steps[0].move.factorization.exponent = 1;
  tampered.steps[0].witness =
      Witness{FreeWord(2), tampered.steps[0].move.factorization.base, -5};
  const VerificationReport report = verify_sequence(tampered, p);
  CHECK_FALSE(report.ok);
  CHECK(report.failed_step == 0);

  // empty sequence: witness product is the identity and end == start
  MoveSequence empty_seq(2, 5, w);
  const VerificationReport empty_report = verify_sequence(empty_seq, p);
  CHECK(empty_report.ok);
  CHECK(empty_report.witness_product_ok);
  MoveSequence broken(2, 5, w);
  broken.end = parse_word("a", 2);
  CHECK_FALSE(verify_sequence(broken, p).ok);
}

TEST_CASE("moves reverse via the inverse base") {
  const BurnsideParams p = desk_params();
  std::mt19937 rng(47);
  int tested = 0;
  for (int trial = 0; trial < 4000 && tested < 200; ++trial) {
    const FreeWord w = testutil::random_reduced_word_up_to(rng, 2, 14);
    for (const ElementaryMove& mv : enumerate_moves(w, p)) {
      const PowerFactorization& f = mv.factorization;
      if (f.exponent >= p.exponent) continue;  // want m - n < 0
      const std::int64_t back_exp = p.exponent - f.exponent;
      if (!p.exceeds_threshold(back_exp)) continue;
      auto [out, witness] = apply_move(w, f, p);
      // the inverse placement survives only if nothing cancelled at the seams
      const std::int64_t expected_len = f.prefix_len + back_exp * f.base.size() +
                                        (w.size() - f.prefix_len - f.exponent * f.base.size());
      if (static_cast<std::int64_t>(out.size()) != expected_len) continue;
      PowerFactorization back{f.prefix_len, invert(f.base), back_exp, out};
      REQUIRE(factorization_matches(back, out));
      auto [restored, back_witness] = apply_move(out, back, p);
      CHECK(restored == w);
      ++tested;
      break;
    }
  }
  CHECK(tested > 50);
}

TEST_CASE("witness soundness on random trivializable words") {
  const BurnsideParams p = desk_params();
  SearchBudget budget;
  budget.max_moves = 6;
  budget.max_states = 20000;
  std::mt19937 rng(53);
  int found = 0;
  for (int trial = 0; trial < 50; ++trial) {
    // product of random conjugated n-th powers, hence trivial mod them
    FreeWord w(2);
    std::uniform_int_distribution<int> pieces(1, 2);
    const int count = pieces(rng);
    for (int i = 0; i < count; ++i) {
      const FreeWord v = testutil::random_reduced_word(rng, 2, 1 + (rng() % 2));
      const FreeWord c = testutil::random_reduced_word_up_to(rng, 2, 2);
      std::uniform_int_distribution<int> sign(0, 1);
      w = multiply(w, multiply(multiply(c, power(v, sign(rng) ? 5 : -5)), invert(c)));
    }
    const auto seq = search_trivialization(w, p, budget);
    if (!seq.has_value()) continue;  // unknown is legal under budget
    ++found;
    const VerificationReport report = verify_sequence(*seq, p);
    CHECK(report.ok);
    CHECK(report.witness_product_ok);
    CHECK(seq->end.empty());
  }
  CHECK(found > 25);
}

TEST_CASE("move sequence JSON round-trips") {
  const BurnsideParams p = desk_params();
  const FreeWord w = messed_up_power(7, 2, 5);
  const auto seq = search_trivialization(w, p, SearchBudget());
  REQUIRE(seq.has_value());
  const std::string rendered = to_json(*seq);
  const MoveSequence parsed = move_sequence_from_json(rendered);
  CHECK(parsed == *seq);
  CHECK(to_json(parsed) == rendered);
  CHECK(verify_sequence(parsed, p).ok);

  CHECK_THROWS_AS(move_sequence_from_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(move_sequence_from_json("{\"rank\":2}"), std::invalid_argument);
}
