#include "burnside/repetition.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace burnside {

namespace {

// Smallest period of the factor w[start, end) (KMP failure function).
std::int64_t smallest_period(const FreeWord& w, std::int64_t start, std::int64_t end) {
  const std::int64_t n = end - start;
  std::vector<std::int64_t> fail(static_cast<std::size_t>(n) + 1, 0);
  for (std::int64_t i = 1; i < n; ++i) {
    std::int64_t k = fail[i];
    while (k > 0 && w.at(start + i) != w.at(start + k)) k = fail[k];
    if (w.at(start + i) == w.at(start + k)) ++k;
    fail[i + 1] = k;
  }
  return n - fail[n];
}

}  // namespace

std::vector<Run> find_runs(const FreeWord& w) {
  const std::int64_t n = static_cast<std::int64_t>(w.size());
  std::vector<Run> runs;
  // For each candidate period p, maximal intervals of i with w[i] == w[i+p]
  // give the factors of period p; keep those repeating at least twice whose
  // smallest period is exactly p. Quadratic in |w|.
  // TODO: swap in a linear-time runs algorithm if inputs outgrow a few
  // thousand letters.
  for (std::int64_t p = 1; 2 * p <= n; ++p) {
    std::int64_t i = 0;
    while (i + p < n) {
      if (w.at(i) != w.at(i + p)) {
        ++i;
        continue;
      }
      std::int64_t j = i;
      while (j + p < n && w.at(j) == w.at(j + p)) ++j;
      // Matches hold on [i, j); the periodic factor is w[i, j + p).
      const std::int64_t start = i;
      const std::int64_t end = j + p;
      if (end - start >= 2 * p && smallest_period(w, start, end) == p) {
        runs.push_back(Run{start, end, p});
      }
      i = j + 1;
    }
  }
  std::sort(runs.begin(), runs.end(), [](const Run& a, const Run& b) {
    if (a.start != b.start) return a.start < b.start;
    return a.period < b.period;
  });
  return runs;
}

std::vector<PowerFactorization> find_power_factorizations(const FreeWord& w,
                                                          std::int64_t min_exponent) {
  if (min_exponent < 1) throw std::invalid_argument("min_exponent must be at least 1");
  std::vector<PowerFactorization> out;
  for (const Run& r : find_runs(w)) {
    for (std::int64_t o = r.start; o + r.period <= r.end; ++o) {
      const std::int64_t m = (r.end - o) / r.period;
      if (m < min_exponent) break;  // m only shrinks as o grows
      FreeWord base = w.subword(o, o + r.period);
      assert(is_cyclically_reduced(base));
      assert(primitive_root(base).exponent == 1);
      out.push_back(PowerFactorization{o, std::move(base), m, w});
    }
  }
  std::sort(out.begin(), out.end(), [](const PowerFactorization& a, const PowerFactorization& b) {
    if (a.prefix_len != b.prefix_len) return a.prefix_len < b.prefix_len;
    if (a.base != b.base) return shortlex_less(a.base, b.base);
    return a.exponent < b.exponent;
  });
  // Distinct runs cannot produce the same (prefix_len, base, exponent), but
  // the dedup contract is cheap to enforce.
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_power_free(const FreeWord& w, std::int64_t p) {
  if (p < 2) throw std::invalid_argument("power-freeness needs p >= 2");
  for (const Run& r : find_runs(w)) {
    if ((r.end - r.start) / r.period >= p) return false;
  }
  return true;
}

bool factorization_matches(const PowerFactorization& f, const FreeWord& w) {
  if (f.word != w) return false;
  if (f.prefix_len < 0 || f.exponent < 1 || f.base.empty()) return false;
  const std::int64_t blen = static_cast<std::int64_t>(f.base.size());
  const std::int64_t span = f.exponent * blen;
  if (f.prefix_len + span > static_cast<std::int64_t>(w.size())) return false;
  for (std::int64_t i = 0; i < span; ++i) {
    if (w.at(f.prefix_len + i) != f.base.at(i % blen)) return false;
  }
  return true;
}

}  // namespace burnside
