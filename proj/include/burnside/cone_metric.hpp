#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace burnside {

/// Radius of the hyperbolic cone over a metric space.
struct ConeParams {
  double r0 = 1.0;

  void validate() const;
};

/// Distance between two points of the base sphere of the cone:
/// cosh(mu(t)) = cosh^2(r0) - sinh^2(r0) * cos(min(pi, t / sinh r0)).
/// mu(0) = 0 and mu is constant 2*r0 for t >= pi * sinh(r0).
double mu(double t, const ConeParams& p);

/// Cone metric between (y, r) and (y', r') with base distance dy:
/// cosh d = cosh r cosh r' - sinh r sinh r' cos(min(pi, dy / sinh r0)).
/// Pre: 0 <= r, r' <= r0 and dy >= 0.
double cone_distance(double r, double rp, double dy, const ConeParams& p);

struct PropertyReport {
  struct Entry {
    std::string name;
    double max_violation;
    bool pass;
  };
  std::vector<Entry> entries;

  bool all_pass() const;
  std::string table() const;
};

/// Grid evaluation of the analytic properties of mu: monotone, midpoint
/// concavity, subadditivity, mu(t) <= t, t <= pi*sinh(mu(t)/2) on
/// [0, pi*sinh r0], and mu(r+s) <= mu(r+t) + mu(t+s) - mu(t). A property
/// passes when its largest violation is at most 1e-9.
PropertyReport check_mu_properties(const ConeParams& p, std::int64_t grid);

}  // namespace burnside
