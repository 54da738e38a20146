#pragma once

#include <cstdint>
#include <optional>

#include "burnside/params.hpp"
#include "burnside/word.hpp"

namespace burnside {

/// A vertex of the Cayley tree of F_r, identified with the group element
/// whose reduced word labels the geodesic from the base vertex.
using TreePoint = FreeWord;

/// The invariant line of a hyperbolic element v = conjugator . core .
/// conjugator^-1 (core cyclically reduced, non-empty). Its vertex set is
/// { conjugator . t : t a prefix of core^inf or core^-inf }. On a tree the
/// cylinder of v is exactly this line.
struct Axis {
  FreeWord conjugator;
  FreeWord core;
  FreeWord owner;
};

std::int64_t distance(const TreePoint& g, const TreePoint& h);

/// Twice the Gromov product (x.y)_z = (d(x,z) + d(y,z) - d(x,y)) / 2,
/// returned doubled so the half-integer is exact.
std::int64_t gromov_product_twice(const TreePoint& x, const TreePoint& y, const TreePoint& z);

/// On a tree both translation lengths equal the cyclic core length, and
/// vanish exactly on the identity.
std::int64_t translation_length(const FreeWord& g);
std::int64_t stable_translation_length(const FreeWord& g);

/// Pre: g != 1; throws on the identity.
Axis axis(const FreeWord& g);

bool axis_contains(const Axis& a, const TreePoint& x);

/// Signed position along the axis line of the projection of x: vertex
/// conjugator sits at 0, positive direction follows core^inf.
std::int64_t axis_coordinate(const Axis& a, const TreePoint& x);

/// Exact length of the intersection of the tree geodesic [x, y] with the
/// axis line (a path, a point, or empty; points and empty both give 0).
std::int64_t geodesic_axis_overlap(const TreePoint& x, const TreePoint& y, const Axis& a);

/// Length of the common segment of two axis lines; std::nullopt means the
/// lines coincide (the owners have commuting powers).
std::optional<std::int64_t> axis_axis_overlap(const Axis& a1, const Axis& a2);

/// The geometric admissibility condition for replacing y by v^-n y:
/// the geodesic from the base vertex to y overlaps the axis of v along at
/// least m * translation_length(v), with m >= n/2 - xi.
bool geometric_move_condition(const TreePoint& y, const FreeWord& v, std::int64_t m,
                              const BurnsideParams& params);

/// Four-point condition defect: largest minus second largest of the three
/// pair sums d(x,y)+d(z,t), d(x,z)+d(y,t), d(x,t)+d(y,z). Zero on a tree.
std::int64_t four_point_defect(const TreePoint& x, const TreePoint& y, const TreePoint& z,
                               const TreePoint& t);

}  // namespace burnside
