#include "burnside/moves.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

namespace burnside {

namespace {

// Builds p . u^(m-n) . s from a validated factorization and reduces.
FreeWord shifted_word(const FreeWord& w, const PowerFactorization& f, std::int32_t n) {
  const std::int64_t blen = static_cast<std::int64_t>(f.base.size());
  const FreeWord prefix = w.subword(0, f.prefix_len);
  const FreeWord suffix = w.subword(f.prefix_len + f.exponent * blen, w.size());
  const FreeWord mid = power(f.base, f.exponent - n);
  return multiply(multiply(prefix, mid), suffix);
}

struct SearchState {
  FreeWord word;
  std::string key;               // word text, used for memoization and ordering
  std::int64_t moves;            // path length from the start word
  std::int64_t parent;           // index into the state arena, -1 for the root
  std::optional<MoveStep> step;  // the move that produced this state
};

// Total order on frontier entries: fewer letters first, then fewer moves,
// then word text. Deterministic regardless of insertion order.
struct FrontierEntry {
  std::size_t word_len;
  std::int64_t moves;
  std::string key;
  std::int64_t state_index;

  bool operator>(const FrontierEntry& o) const {
    if (word_len != o.word_len) return word_len > o.word_len;
    if (moves != o.moves) return moves > o.moves;
    if (key != o.key) return key > o.key;
    return state_index > o.state_index;
  }
};

using Frontier =
    std::priority_queue<FrontierEntry, std::vector<FrontierEntry>, std::greater<FrontierEntry>>;

MoveSequence assemble_sequence(const std::vector<SearchState>& arena, std::int64_t goal,
                               const FreeWord& start, const BurnsideParams& params) {
  MoveSequence seq(params.rank, params.exponent, start);
  std::vector<std::int64_t> chain;
  for (std::int64_t i = goal; i >= 0; i = arena[i].parent) chain.push_back(i);
  std::reverse(chain.begin(), chain.end());
  for (std::size_t i = 1; i < chain.size(); ++i) seq.steps.push_back(*arena[chain[i]].step);
  seq.end = arena[goal].word;
  return seq;
}

}  // namespace

FreeWord Witness::conjugated_power() const {
  const FreeWord v = multiply(multiply(conjugator, base), invert(conjugator));
  return burnside::power(v, power);
}

std::pair<FreeWord, Witness> apply_move(const FreeWord& w, const PowerFactorization& f,
                                        const BurnsideParams& params) {
  params.validate();
  if (w.rank() != params.rank) throw std::invalid_argument("apply_move: rank mismatch");
  if (!factorization_matches(f, w)) {
    throw std::invalid_argument("apply_move: factorization does not match the word (stale?)");
  }
  if (!is_cyclically_reduced(f.base) || primitive_root(f.base).exponent != 1) {
    throw std::invalid_argument("apply_move: base must be primitive and cyclically reduced");
  }
  if (!params.exceeds_threshold(f.exponent)) {
    throw std::invalid_argument("apply_move: exponent " + std::to_string(f.exponent) +
                                " does not exceed n/2 - xi");
  }
  FreeWord out = shifted_word(w, f, params.exponent);
  Witness witness{w.subword(0, f.prefix_len), f.base, -static_cast<std::int64_t>(params.exponent)};
  // The witness identity is a consequence of the factorization, but it is
  // the soundness contract, so it is enforced rather than assumed.
  const FreeWord check = multiply(witness.conjugated_power(), w);
  if (check != out) throw std::logic_error("apply_move: witness identity violated");
  return {std::move(out), std::move(witness)};
}

std::vector<ElementaryMove> enumerate_moves(const FreeWord& w, const BurnsideParams& params) {
  params.validate();
  if (w.rank() != params.rank) throw std::invalid_argument("enumerate_moves: rank mismatch");
  std::vector<PowerFactorization> candidates =
      find_power_factorizations(w, params.min_move_exponent());
  struct Keyed {
    std::size_t result_len;
    ElementaryMove move;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(candidates.size());
  for (PowerFactorization& f : candidates) {
    if (!params.exceeds_threshold(f.exponent)) continue;
    const std::size_t len = shifted_word(w, f, params.exponent).size();
    keyed.push_back(Keyed{len, ElementaryMove{std::move(f)}});
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.result_len != b.result_len) return a.result_len < b.result_len;
    const PowerFactorization& fa = a.move.factorization;
    const PowerFactorization& fb = b.move.factorization;
    if (fa.prefix_len != fb.prefix_len) return fa.prefix_len < fb.prefix_len;
    if (fa.base != fb.base) return lex_less(fa.base, fb.base);
    return fa.exponent < fb.exponent;
  });
  std::vector<ElementaryMove> out;
  out.reserve(keyed.size());
  for (Keyed& k : keyed) out.push_back(std::move(k.move));
  return out;
}

std::optional<MoveSequence> search_trivialization(const FreeWord& w, const BurnsideParams& params,
                                                  const SearchBudget& budget) {
  params.validate();
  budget.validate();
  if (w.rank() != params.rank) throw std::invalid_argument("search: rank mismatch");
  if (static_cast<std::int64_t>(w.size()) > budget.max_word_length) return std::nullopt;

  std::int64_t states_used = 0;
  for (std::int64_t depth_limit = 0; depth_limit <= budget.max_moves; ++depth_limit) {
    std::vector<SearchState> arena;
    arena.push_back(SearchState{w, w.str(), 0, -1, std::nullopt});
    Frontier frontier;
    frontier.push(FrontierEntry{w.size(), 0, arena[0].key, 0});
    // Best known move count per word within this deepening round.
    std::unordered_map<std::string, std::int64_t> best;
    best.emplace(arena[0].key, 0);
    bool pruned_by_depth = false;

    while (!frontier.empty()) {
      const FrontierEntry top = frontier.top();
      frontier.pop();
      const SearchState& state = arena[top.state_index];
      if (best.at(state.key) < state.moves) continue;  // superseded by a shorter path
      if (state.word.empty()) {
        MoveSequence seq = assemble_sequence(arena, top.state_index, w, params);
        seq.verified = verify_sequence(seq, params).ok;
        assert(seq.verified);
        return seq;
      }
      if (state.moves == depth_limit) {
        pruned_by_depth = true;
        continue;
      }
      if (++states_used > budget.max_states) return std::nullopt;
      const FreeWord word = state.word;  // arena may reallocate below
      const std::int64_t next_moves = state.moves + 1;
      const std::int64_t parent_index = top.state_index;
      for (const ElementaryMove& move : enumerate_moves(word, params)) {
        auto [result, witness] = apply_move(word, move.factorization, params);
        if (static_cast<std::int64_t>(result.size()) > budget.max_word_length) continue;
        std::string key = result.str();
        auto it = best.find(key);
        if (it != best.end() && it->second <= next_moves) continue;
        if (it == best.end()) {
          best.emplace(key, next_moves);
        } else {
          it->second = next_moves;
        }
        arena.push_back(SearchState{std::move(result), key, next_moves, parent_index,
                                    MoveStep{move, std::move(witness)}});
        frontier.push(FrontierEntry{arena.back().word.size(), next_moves, std::move(key),
                                    static_cast<std::int64_t>(arena.size()) - 1});
      }
    }
    // Nothing was cut off by the depth limit: the reachable component is
    // exhausted and deeper rounds cannot differ.
    if (!pruned_by_depth) return std::nullopt;
  }
  return std::nullopt;
}

std::optional<std::pair<MoveSequence, MoveSequence>> search_identification(
    const FreeWord& g, const FreeWord& h, const BurnsideParams& params,
    const SearchBudget& budget) {
  params.validate();
  budget.validate();
  if (g.rank() != params.rank || h.rank() != params.rank) {
    throw std::invalid_argument("search: rank mismatch");
  }
  if (static_cast<std::int64_t>(g.size()) > budget.max_word_length ||
      static_cast<std::int64_t>(h.size()) > budget.max_word_length) {
    return std::nullopt;
  }

  struct Side {
    std::vector<SearchState> arena;
    Frontier frontier;
    std::unordered_map<std::string, std::int64_t> seen;  // word -> arena index
    FreeWord origin;
  };
  Side sides[2] = {Side{{}, {}, {}, g}, Side{{}, {}, {}, h}};
  for (Side& s : sides) {
    s.arena.push_back(SearchState{s.origin, s.origin.str(), 0, -1, std::nullopt});
    s.frontier.push(FrontierEntry{s.origin.size(), 0, s.arena[0].key, 0});
    s.seen.emplace(s.arena[0].key, 0);
  }

  auto finish = [&](std::int64_t left_index,
                    std::int64_t right_index) -> std::pair<MoveSequence, MoveSequence> {
    MoveSequence a = assemble_sequence(sides[0].arena, left_index, g, params);
    MoveSequence b = assemble_sequence(sides[1].arena, right_index, h, params);
    a.verified = verify_sequence(a, params).ok;
    b.verified = verify_sequence(b, params).ok;
    assert(a.verified && b.verified);
    return {std::move(a), std::move(b)};
  };

  // The two start points may already coincide.
  if (auto it = sides[1].seen.find(sides[0].arena[0].key); it != sides[1].seen.end()) {
    return finish(0, it->second);
  }

  std::int64_t states_used = 0;
  int side_index = 0;
  while (true) {
    if (sides[0].frontier.empty() && sides[1].frontier.empty()) return std::nullopt;
    Side& side = sides[side_index].frontier.empty() ? sides[1 - side_index] : sides[side_index];
    Side& other = (&side == &sides[0]) ? sides[1] : sides[0];
    const int current = (&side == &sides[0]) ? 0 : 1;
    side_index = 1 - side_index;

    const FrontierEntry top = side.frontier.top();
    side.frontier.pop();
    if (side.arena[top.state_index].moves >= budget.max_moves) continue;
    if (++states_used > budget.max_states) return std::nullopt;

    const FreeWord word = side.arena[top.state_index].word;
    const std::int64_t next_moves = top.moves + 1;
    for (const ElementaryMove& move : enumerate_moves(word, params)) {
      auto [result, witness] = apply_move(word, move.factorization, params);
      if (static_cast<std::int64_t>(result.size()) > budget.max_word_length) continue;
      std::string key = result.str();
      if (side.seen.contains(key)) continue;  // first reach wins, deterministic
      side.arena.push_back(SearchState{std::move(result), key, next_moves, top.state_index,
                                       MoveStep{move, std::move(witness)}});
      const std::int64_t index = static_cast<std::int64_t>(side.arena.size()) - 1;
      side.seen.emplace(key, index);
      if (auto hit = other.seen.find(key); hit != other.seen.end()) {
        return current == 0 ? finish(index, hit->second) : finish(hit->second, index);
      }
      side.frontier.push(
          FrontierEntry{side.arena[index].word.size(), next_moves, std::move(key), index});
    }
  }
}

VerificationReport verify_sequence(const MoveSequence& seq, const BurnsideParams& params) {
  VerificationReport report;
  try {
    params.validate();
  } catch (const std::invalid_argument& e) {
    report.reason = e.what();
    return report;
  }
  if (seq.exponent != params.exponent || seq.rank != params.rank) {
    report.reason = "sequence was built with different parameters";
    return report;
  }
  FreeWord current = seq.start;
  FreeWord witness_product(params.rank);
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    const MoveStep& step = seq.steps[i];
    const PowerFactorization& f = step.move.factorization;
    if (!factorization_matches(f, current)) {
      report.failed_step = static_cast<std::int64_t>(i);
      report.reason = "factorization does not match the word at this step";
      return report;
    }
    if (!is_cyclically_reduced(f.base) || primitive_root(f.base).exponent != 1) {
      report.failed_step = static_cast<std::int64_t>(i);
      report.reason = "base is not primitive and cyclically reduced";
      return report;
    }
    if (!params.exceeds_threshold(f.exponent)) {
      report.failed_step = static_cast<std::int64_t>(i);
      report.reason = "exponent does not exceed n/2 - xi";
      return report;
    }
    if (step.witness.conjugator != current.subword(0, f.prefix_len) ||
        step.witness.base != f.base ||
        step.witness.power != -static_cast<std::int64_t>(params.exponent)) {
      report.failed_step = static_cast<std::int64_t>(i);
      report.reason = "witness does not describe this step";
      return report;
    }
    const FreeWord vpow = step.witness.conjugated_power();
    const FreeWord output = multiply(vpow, current);
    const FreeWord direct = shifted_word(current, f, params.exponent);
    if (output != direct) {
      report.failed_step = static_cast<std::int64_t>(i);
      report.reason = "witness identity failed: output != reduce(v^-n . input)";
      return report;
    }
    witness_product = multiply(vpow, witness_product);
    current = output;
  }
  if (current != seq.end) {
    report.reason = "replay does not reach the recorded end word";
    return report;
  }
  if (multiply(witness_product, seq.start) != seq.end) {
    report.reason = "global witness product does not carry start to end";
    return report;
  }
  report.witness_product_ok = true;
  report.ok = true;
  return report;
}

std::string VerificationReport::str() const {
  if (ok) return "ok: all steps verified; witness product carries start to end";
  std::string s = "FAILED";
  if (failed_step >= 0) s += " at step " + std::to_string(failed_step);
  s += ": " + reason;
  return s;
}

std::string to_json(const MoveSequence& seq) {
  nlohmann::ordered_json j;
  j["rank"] = seq.rank;
  j["n"] = seq.exponent;
  j["start"] = seq.start.str();
  j["end"] = seq.end.str();
  j["verified"] = seq.verified;
  j["steps"] = nlohmann::ordered_json::array();
  for (const MoveStep& step : seq.steps) {
    nlohmann::ordered_json s;
    s["prefix_len"] = step.move.factorization.prefix_len;
    s["base"] = step.move.factorization.base.str();
    s["exponent"] = step.move.factorization.exponent;
    s["n"] = seq.exponent;
    j["steps"].push_back(std::move(s));
  }
  return j.dump(2);
}

MoveSequence move_sequence_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad move sequence JSON: ") + e.what());
  }
  try {
    const std::int32_t rank = j.at("rank").get<std::int32_t>();
    const std::int32_t n = j.at("n").get<std::int32_t>();
    MoveSequence seq(rank, n, FreeWord::parse(j.at("start").get<std::string>(), rank));
    FreeWord current = seq.start;
    for (const auto& s : j.at("steps")) {
      PowerFactorization f{s.at("prefix_len").get<std::int64_t>(),
                           FreeWord::parse(s.at("base").get<std::string>(), rank),
                           s.at("exponent").get<std::int64_t>(), current};
      if (s.at("n").get<std::int32_t>() != n) {
        throw std::invalid_argument("step n differs from sequence n");
      }
      if (!factorization_matches(f, current)) {
        throw std::invalid_argument("step does not match the replayed word");
      }
      Witness witness{current.subword(0, f.prefix_len), f.base, -static_cast<std::int64_t>(n)};
      FreeWord next = multiply(witness.conjugated_power(), current);
      seq.steps.push_back(MoveStep{ElementaryMove{std::move(f)}, std::move(witness)});
      current = std::move(next);
    }
    seq.end = current;
    if (seq.end.str() != j.at("end").get<std::string>()) {
      throw std::invalid_argument("recorded end word does not match the replay");
    }
    seq.verified = j.at("verified").get<bool>();
    return seq;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad move sequence JSON: ") + e.what());
  }
}

}  // namespace burnside
