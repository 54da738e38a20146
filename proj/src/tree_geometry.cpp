#include "burnside/tree_geometry.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <vector>

namespace burnside {

namespace {

// Longest prefix of y that follows the infinite periodic word u^inf.
std::int64_t match_against_power(const FreeWord& y, const FreeWord& u) {
  const std::int64_t n = static_cast<std::int64_t>(y.size());
  const std::int64_t p = static_cast<std::int64_t>(u.size());
  std::int64_t i = 0;
  while (i < n && y.at(i) == u.at(i % p)) ++i;
  return i;
}

// Prefix of length len of the infinite word u^inf, as raw letters appended
// to out.
void append_power_prefix(std::vector<Letter>& out, const FreeWord& u, std::int64_t len) {
  const std::int64_t p = static_cast<std::int64_t>(u.size());
  for (std::int64_t i = 0; i < len; ++i) out.push_back(u.at(i % p));
}

}  // namespace

std::int64_t distance(const TreePoint& g, const TreePoint& h) {
  return static_cast<std::int64_t>(multiply(invert(g), h).size());
}

std::int64_t gromov_product_twice(const TreePoint& x, const TreePoint& y, const TreePoint& z) {
  const std::int64_t twice = distance(x, z) + distance(y, z) - distance(x, y);
  assert(twice >= 0);
  return twice;
}

std::int64_t translation_length(const FreeWord& g) {
  return static_cast<std::int64_t>(cyclic_reduce(g).core.size());
}

std::int64_t stable_translation_length(const FreeWord& g) {
  // inf and limit coincide on a tree
  return translation_length(g);
}

Axis axis(const FreeWord& g) {
  if (g.empty()) throw std::invalid_argument("axis: the identity has no axis");
  CyclicDecomposition d = cyclic_reduce(g);
  return Axis{std::move(d.conjugator), std::move(d.core), g};
}

std::int64_t axis_coordinate(const Axis& a, const TreePoint& x) {
  // Translate so the line passes through the base vertex; the projection of
  // a vertex onto the line is its longest prefix lying on the line.
  const FreeWord y = multiply(invert(a.conjugator), x);
  const std::int64_t forward = match_against_power(y, a.core);
  if (forward > 0) return forward;
  return -match_against_power(y, invert(a.core));
}

bool axis_contains(const Axis& a, const TreePoint& x) {
  const FreeWord y = multiply(invert(a.conjugator), x);
  const std::int64_t len = static_cast<std::int64_t>(y.size());
  return match_against_power(y, a.core) == len ||
         match_against_power(y, invert(a.core)) == len;
}

std::int64_t geodesic_axis_overlap(const TreePoint& x, const TreePoint& y, const Axis& a) {
  if (x.rank() != y.rank() || x.rank() != a.core.rank()) {
    throw std::invalid_argument("geodesic_axis_overlap: rank mismatch");
  }
  const std::int64_t sx = axis_coordinate(a, x);
  const std::int64_t sy = axis_coordinate(a, y);
  return sx >= sy ? sx - sy : sy - sx;
}

std::optional<std::int64_t> axis_axis_overlap(const Axis& a1, const Axis& a2) {
  // Two elements of a free group share an axis exactly when they commute.
  if (multiply(a1.owner, a2.owner) == multiply(a2.owner, a1.owner)) return std::nullopt;
  // Otherwise the common segment is finite and shorter than |u1| + |u2|
  // (a longer common segment would force a common period and hence a common
  // axis). Project two points of the second line lying beyond the overlap.
  const std::int64_t reach = distance(a1.conjugator, a2.conjugator) +
                             2 * static_cast<std::int64_t>(a1.core.size() + a2.core.size()) + 8;
  std::vector<Letter> letters;
  letters.reserve(a2.conjugator.size() + reach);
  letters.insert(letters.end(), a2.conjugator.letters().begin(), a2.conjugator.letters().end());
  append_power_prefix(letters, a2.core, reach);
  const FreeWord plus = FreeWord::reduce(letters, a2.core.rank());
  letters.resize(a2.conjugator.size());
  append_power_prefix(letters, invert(a2.core), reach);
  const FreeWord minus = FreeWord::reduce(letters, a2.core.rank());
  return geodesic_axis_overlap(minus, plus, a1);
}

bool geometric_move_condition(const TreePoint& y, const FreeWord& v, std::int64_t m,
                              const BurnsideParams& params) {
  params.validate();
  if (v.empty()) throw std::invalid_argument("geometric_move_condition: trivial element");
  if (!params.meets_threshold(m)) return false;
  const Axis a = axis(v);
  const TreePoint base(v.rank());
  return geodesic_axis_overlap(base, y, a) >=
         m * static_cast<std::int64_t>(a.core.size());
}

std::int64_t four_point_defect(const TreePoint& x, const TreePoint& y, const TreePoint& z,
                               const TreePoint& t) {
  std::int64_t sums[3] = {distance(x, y) + distance(z, t), distance(x, z) + distance(y, t),
                          distance(x, t) + distance(y, z)};
  std::sort(sums, sums + 3);
  return sums[2] - sums[1];
}

}  // namespace burnside
