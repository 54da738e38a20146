#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "burnside/params.hpp"
#include "burnside/repetition.hpp"
#include "burnside/word.hpp"

namespace burnside {

/// An admissible elementary move: replace the factor u^m of w = p.u^m.s by
/// u^(m-n), i.e. multiply w on the left by (p u p^-1)^-n. The exponent shift
/// is always -n; admissibility requires m > n/2 - xi.
struct ElementaryMove {
  PowerFactorization factorization;

  friend bool operator==(const ElementaryMove&, const ElementaryMove&) = default;
};

/// The algebraic certificate of one move: with v = reduce(conjugator . base
/// . conjugator^-1), the move's output equals reduce(v^power . input).
struct Witness {
  FreeWord conjugator;
  FreeWord base;
  std::int64_t power;  // always -n

  FreeWord conjugated_power() const;  // reduce((p u p^-1)^power)

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct MoveStep {
  ElementaryMove move;
  Witness witness;

  friend bool operator==(const MoveStep&, const MoveStep&) = default;
};

/// A replayable sequence of moves from `start` to `end`, each step carrying
/// its witness. The product of all witness powers, applied to start, equals
/// end; this certifies start and end agree modulo n-th powers.
struct MoveSequence {
  std::int32_t rank = 2;
  std::int32_t exponent = 5;  // the n the sequence was built with
  FreeWord start;
  FreeWord end;
  std::vector<MoveStep> steps;
  bool verified = false;

  MoveSequence() : start(FreeWord(2)), end(FreeWord(2)) {}
  MoveSequence(std::int32_t rank, std::int32_t exponent, FreeWord start_word)
      : rank(rank), exponent(exponent), start(start_word), end(std::move(start_word)) {}

  friend bool operator==(const MoveSequence&, const MoveSequence&) = default;
};

struct VerificationReport {
  bool ok = false;
  std::int64_t failed_step = -1;  // -1 when ok or when the failure is global
  std::string reason;
  bool witness_product_ok = false;

  std::string str() const;
};

/// Applies one move. Throws std::invalid_argument if the factorization does
/// not match w (stale or forged) or the exponent fails the threshold. The
/// witness identity output == reduce(v^-n . w) is recomputed and enforced.
std::pair<FreeWord, Witness> apply_move(const FreeWord& w, const PowerFactorization& f,
                                        const BurnsideParams& params);

/// All admissible moves on w, ordered by (length after application,
/// prefix_len, base lexicographically). The order is total, so enumeration
/// is deterministic.
std::vector<ElementaryMove> enumerate_moves(const FreeWord& w, const BurnsideParams& params);

/// Iterative deepening over the number of moves, expanding states in the
/// total order (|word|, moves used, word letters). Returns a minimal-length
/// sequence to the empty word if one exists within budget; std::nullopt
/// means Unknown (budget exhausted or component closed), never "nontrivial".
std::optional<MoveSequence> search_trivialization(const FreeWord& w, const BurnsideParams& params,
                                                  const SearchBudget& budget);

/// Meet-in-the-middle over the move graph from both start points. On
/// success the two sequences end at the same word. Deterministic for fixed
/// inputs; std::nullopt means Unknown.
std::optional<std::pair<MoveSequence, MoveSequence>> search_identification(
    const FreeWord& g, const FreeWord& h, const BurnsideParams& params,
    const SearchBudget& budget);

/// Replays a sequence, checking per step: factorization validity, the
/// threshold, and the witness identity; then checks the global product
/// reduce(W . start) == end where W multiplies the witness powers in
/// application order.
VerificationReport verify_sequence(const MoveSequence& seq, const BurnsideParams& params);

/// JSON serialization: one record per step {prefix_len, base, exponent, n};
/// top-level rank, n, start, end, verified. parse(render(s)) == s.
std::string to_json(const MoveSequence& seq);
MoveSequence move_sequence_from_json(std::string_view text);

}  // namespace burnside
