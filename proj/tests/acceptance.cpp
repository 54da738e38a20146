// Acceptance suite: ten end-to-end criteria over the full engine, each
// printed as a single pass/fail line with its runtime. Exits nonzero if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "burnside/cone_metric.hpp"
#include "burnside/endomorphism.hpp"
#include "burnside/moves.hpp"
#include "burnside/repetition.hpp"
#include "burnside/tree_geometry.hpp"
#include "burnside/word.hpp"
#include "test_util.hpp"

using namespace burnside;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

int g_failures = 0;

struct Criterion {
  std::string name;
  double limit_seconds;
  std::function<bool(std::string&)> run;
};

void run_criterion(int index, const Criterion& c) {
  std::string detail;
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = c.run(detail);
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (c.limit_seconds > 0 && seconds > c.limit_seconds) {
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += "runtime " + std::to_string(seconds) + "s exceeds " +
              std::to_string(c.limit_seconds) + "s";
  }
  if (!ok) ++g_failures;
  std::printf("[%s] criterion %2d: %-38s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", index,
              c.name.c_str(), seconds, detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
}

BurnsideParams desk_params() {
  BurnsideParams p;
  p.rank = 2;
  p.exponent = 5;
  p.xi = Rational::of(1, 1);
  return p;
}

Endomorphism phi() { return Endomorphism::parse("a=ab; b=a", 2); }
Endomorphism psi() { return Endomorphism::parse("a=a; b=ba; c=Cbcd; d=c", 4); }

FreeWord messed_up_power() {
  // (a^7 b)^2 (a^2 b)^3
  const FreeWord high = parse_word("aaaaaaab", 2);
  const FreeWord low = parse_word("aab", 2);
  return multiply(power(high, 2), power(low, 3));
}

std::int64_t max_b_a_power(const FreeWord& w) {
  std::int64_t best = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w.at(i) != Letter{2, +1}) continue;
    std::int64_t m = 0;
    for (std::size_t j = i + 1; j < w.size() && w.at(j) == Letter{1, +1}; ++j) ++m;
    best = std::max(best, m);
  }
  return best;
}

// --- criterion 1 -----------------------------------------------------------

bool orbit_fixtures(std::string& detail) {
  const std::vector<FreeWord> table = orbit(phi(), parse_word("b", 2), 7);
  const char* expected[] = {"b",        "a",        "ab",
                            "aba",      "abaab",    "abaababa",
                            "abaababaabaab", "abaababaabaababaababa"};
  for (int i = 0; i < 8; ++i) {
    if (table[i].str() != expected[i]) {
      detail = "phi table differs at k=" + std::to_string(i);
      return false;
    }
  }
  const std::vector<FreeWord> psi_table = orbit(psi(), parse_word("d", 4), 2);
  if (psi_table[1].str() != "c" || psi_table[2].str() != "Cbcd") {
    detail = "psi table differs";
    return false;
  }
  return true;
}

// --- criterion 2 -----------------------------------------------------------

bool power_freeness(std::string& detail) {
  const FreeWord phi_prefix = limit_prefix(phi(), Letter{2, +1}, 2000);
  if (phi_prefix.size() != 2000 || !is_power_free(phi_prefix, 4)) {
    detail = "phi limit prefix is not fourth-power-free";
    return false;
  }
  const FreeWord tm = thue_morse(4096);
  if (!is_power_free(tm, 3)) {
    detail = "Thue-Morse prefix is not cube-free";
    return false;
  }
  return true;
}

// --- criterion 3 -----------------------------------------------------------

bool psi_growth(std::string& detail) {
  const std::vector<FreeWord> table = orbit(psi(), parse_word("d", 4), 9);
  for (int k = 2; k <= 8; ++k) {
    const std::int64_t m = max_b_a_power(table[k]);
    if (m == 0) continue;  // no b a^m factor, nothing to grow
    // every factor b a^j with j <= m must reappear grown by one
    if (max_b_a_power(table[k + 1]) < m + 1) {
      detail = "growth fails at k=" + std::to_string(k);
      return false;
    }
  }
  if (max_b_a_power(table[8]) < 5) {
    detail = "expected large a-powers by k=8";
    return false;
  }
  return true;
}

// --- criterion 4 -----------------------------------------------------------

// Demands a verified 4-move sequence, the first three moves on base "a" and
// the last on base a^7 b. The iterative-deepening search provably returns
// the minimal certificate, which for this word has three moves (two
// lowering the a^7 blocks, one removing the resulting (a^2 b)^5); moreover
// no base-"a" move can raise a^2 to a^7, so the demanded 4-move shape does
// not exist in the move graph at all. The criterion is kept as stated and
// reports the discrepancy.
bool messed_up_replay(std::string& detail) {
  const BurnsideParams p = desk_params();
  const FreeWord w = messed_up_power();
  const auto seq = search_trivialization(w, p, SearchBudget());
  if (!seq.has_value()) {
    detail = "search returned unknown";
    return false;
  }
  if (!seq->end.empty() || !verify_sequence(*seq, p).ok) {
    detail = "sequence is not a verified trivialization";
    return false;
  }
  bool ok = true;
  if (seq->steps.size() != 4) {
    detail = "expected 4 moves, engine returns the minimal certificate with " +
             std::to_string(seq->steps.size()) + " (bases:";
    for (const MoveStep& s : seq->steps) detail += " " + s.move.factorization.base.str();
    detail += ")";
    ok = false;
  } else {
    for (int i = 0; i < 3; ++i) {
      if (seq->steps[i].move.factorization.base.str() != "a") ok = false;
    }
    if (seq->steps[3].move.factorization.base.str() != "aaaaaaab") ok = false;
    if (!ok) detail = "move bases differ from the stated shape";
  }
  return ok;
}

// --- criterion 5 -----------------------------------------------------------

bool soundness_audit(std::string& detail) {
  const BurnsideParams p = desk_params();
  SearchBudget budget;
  budget.max_moves = 6;
  budget.max_word_length = 200;
  budget.max_states = 30000;
  std::mt19937 rng(20240501);
  int found = 0;
  int unknown = 0;
  for (int trial = 0; trial < 500; ++trial) {
    FreeWord w(2);
    std::uniform_int_distribution<int> pieces(1, 2);
    std::uniform_int_distribution<int> vlen(1, 2);
    std::uniform_int_distribution<int> sign(0, 1);
    const int count = pieces(rng);
    for (int i = 0; i < count; ++i) {
      const FreeWord v = testutil::random_reduced_word(rng, 2, vlen(rng));
      const FreeWord c = testutil::random_reduced_word_up_to(rng, 2, 2);
      w = multiply(w, multiply(multiply(c, power(v, sign(rng) ? 5 : -5)), invert(c)));
    }
    const auto seq = search_trivialization(w, p, budget);
    if (!seq.has_value()) {
      ++unknown;
      continue;
    }
    ++found;
    const VerificationReport report = verify_sequence(*seq, p);
    if (!report.ok || !report.witness_product_ok || !seq->end.empty()) {
      detail = "audit failed on seed " + w.str();
      return false;
    }
  }
  detail = std::to_string(found) + " found, " + std::to_string(unknown) +
           " unknown, all found sequences verified";
  if (found < 400) {
    detail += "; too few resolved for a meaningful audit";
    return false;
  }
  return true;
}

// --- criterion 6 -----------------------------------------------------------

bool repetition_oracles(std::string& detail) {
  std::mt19937 rng(20240502);
  for (int i = 0; i < 10000; ++i) {
    const FreeWord w = testutil::random_reduced_word_up_to(rng, 2, 12);
    if (find_runs(w) != testutil::brute_force_runs(w)) {
      detail = "runs differ on " + w.str();
      return false;
    }
    if (find_power_factorizations(w, 2) != testutil::brute_force_power_factorizations(w, 2)) {
      detail = "factorizations differ on " + w.str();
      return false;
    }
  }
  return true;
}

// --- criterion 7 -----------------------------------------------------------

bool geometric_bridge(std::string& detail) {
  const BurnsideParams p = desk_params();
  const FreeWord one(2);
  std::mt19937 rng(20240503);
  for (int i = 0; i < 1000; ++i) {
    const FreeWord w = testutil::random_reduced_word_up_to(rng, 2, 14);

    std::vector<PowerFactorization> combinatorial;
    for (const ElementaryMove& m : enumerate_moves(w, p)) {
      combinatorial.push_back(m.factorization);
    }
    auto order = [](const PowerFactorization& a, const PowerFactorization& b) {
      if (a.prefix_len != b.prefix_len) return a.prefix_len < b.prefix_len;
      if (a.base != b.base) return shortlex_less(a.base, b.base);
      return a.exponent < b.exponent;
    };
    std::sort(combinatorial.begin(), combinatorial.end(), order);

    std::vector<PowerFactorization> geometric;
    for (const PowerFactorization& f : find_power_factorizations(w, 1)) {
      const FreeWord prefix = w.subword(0, f.prefix_len);
      const FreeWord v = multiply(multiply(prefix, f.base), invert(prefix));
      const Axis ax = axis(v);

      const std::int64_t overlap = geodesic_axis_overlap(one, w, ax);
      if (overlap < f.exponent * static_cast<std::int64_t>(f.base.size())) {
        detail = "overlap below the power length on " + w.str();
        return false;
      }
      // membership oracle along the prefix chain of w
      std::int64_t on_axis = 0;
      for (std::size_t j = 0; j <= w.size(); ++j) {
        if (axis_contains(ax, w.subword(0, j))) ++on_axis;
      }
      if (overlap != (on_axis > 0 ? on_axis - 1 : 0)) {
        detail = "overlap disagrees with the vertex oracle on " + w.str();
        return false;
      }
      if (geometric_move_condition(w, v, f.exponent, p)) geometric.push_back(f);
    }
    std::sort(geometric.begin(), geometric.end(), order);
    if (combinatorial != geometric) {
      detail = "move sets differ on " + w.str();
      return false;
    }
  }
  return true;
}

// --- criterion 8 -----------------------------------------------------------

bool tree_hyperbolicity(std::string& detail) {
  std::mt19937 rng(20240504);
  for (int i = 0; i < 10000; ++i) {
    const FreeWord x = testutil::random_reduced_word_up_to(rng, 2, 16);
    const FreeWord y = testutil::random_reduced_word_up_to(rng, 2, 16);
    const FreeWord z = testutil::random_reduced_word_up_to(rng, 2, 16);
    const FreeWord t = testutil::random_reduced_word_up_to(rng, 2, 16);
    if (four_point_defect(x, y, z, t) != 0) {
      detail = "four-point defect nonzero";
      return false;
    }
  }
  const FreeWord one(2);
  for (int i = 0; i < 10000; ++i) {
    const FreeWord x = testutil::random_reduced_word_up_to(rng, 2, 16);
    const FreeWord y = testutil::random_reduced_word_up_to(rng, 2, 16);
    if (gromov_product_twice(x, y, one) !=
        2 * static_cast<std::int64_t>(common_prefix_length(x, y))) {
      detail = "gromov product differs from common prefix";
      return false;
    }
  }
  return true;
}

// --- criterion 9 -----------------------------------------------------------

bool mu_properties(std::string& detail) {
  for (double r0 : {0.1, 1.0, 10.0}) {
    const ConeParams p{r0};
    const PropertyReport report = check_mu_properties(p, 200);
    for (const auto& entry : report.entries) {
      if (!entry.pass) {
        detail = "r0=" + std::to_string(r0) + ": " + entry.name + " violated by " +
                 std::to_string(entry.max_violation);
        return false;
      }
    }
    if (std::abs(mu(kPi * std::sinh(r0), p) - 2.0 * r0) > 1e-9) {
      detail = "mu(pi sinh r0) != 2 r0 at r0=" + std::to_string(r0);
      return false;
    }
  }
  return true;
}

// --- criterion 10 ----------------------------------------------------------

std::string bridge_transcript() {
  // deterministic record of the criterion-7 computation
  const BurnsideParams p = desk_params();
  std::mt19937 rng(20240505);
  std::string out;
  for (int i = 0; i < 200; ++i) {
    const FreeWord w = testutil::random_reduced_word_up_to(rng, 2, 14);
    out += w.str();
    out += ':';
    for (const ElementaryMove& m : enumerate_moves(w, p)) {
      out += ' ' + std::to_string(m.factorization.prefix_len) + '/' +
             m.factorization.base.str() + '/' + std::to_string(m.factorization.exponent);
    }
    out += '\n';
  }
  return out;
}

bool determinism(std::string& detail) {
  const BurnsideParams p = desk_params();
  const FreeWord w = messed_up_power();
  const auto first = search_trivialization(w, p, SearchBudget());
  const auto second = search_trivialization(w, p, SearchBudget());
  if (!first.has_value() || !second.has_value() || to_json(*first) != to_json(*second)) {
    detail = "trivialization outputs differ between runs";
    return false;
  }
  if (bridge_transcript() != bridge_transcript()) {
    detail = "bridge transcripts differ between runs";
    return false;
  }
  detail = "engine is single-threaded; repeated runs byte-identical";
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"orbit fixtures (phi, psi)", 1.0, orbit_fixtures},
      {"power-freeness of limit words", 10.0, power_freeness},
      {"psi growth law", 0.0, psi_growth},
      {"messed-up-power replay", 5.0, messed_up_replay},
      {"soundness audit on 500 seeds", 0.0, soundness_audit},
      {"repetition oracle equivalence", 0.0, repetition_oracles},
      {"combinatorial-geometric bridge", 0.0, geometric_bridge},
      {"tree hyperbolicity", 0.0, tree_hyperbolicity},
      {"mu property grid", 5.0, mu_properties},
      {"determinism", 0.0, determinism},
  };
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    run_criterion(static_cast<int>(i) + 1, criteria[i]);
  }
  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
