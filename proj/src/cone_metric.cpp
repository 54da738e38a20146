#include "burnside/cone_metric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace burnside {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTolerance = 1e-9;

// acosh(1 + y) in the cancellation-free log form; exact at y = 0.
double acosh1p(double y) { return std::log1p(y + std::sqrt(y * (y + 2.0))); }

}  // namespace

void ConeParams::validate() const {
  if (!(r0 > 0.0) || !std::isfinite(r0)) {
    throw std::invalid_argument("cone radius r0 must be positive and finite");
  }
}

double mu(double t, const ConeParams& p) {
  p.validate();
  if (!(t >= 0.0)) throw std::invalid_argument("mu: negative argument");
  const double sh = std::sinh(p.r0);
  const double theta = std::min(kPi, t / sh);
  // cosh(mu) - 1 = sinh^2(r0) * (1 - cos theta) = 2 sinh^2(r0) sin^2(theta/2)
  const double half_sin = std::sin(0.5 * theta);
  return acosh1p(2.0 * sh * sh * half_sin * half_sin);
}

double cone_distance(double r, double rp, double dy, const ConeParams& p) {
  p.validate();
  if (!(r >= 0.0) || !(rp >= 0.0) || r > p.r0 || rp > p.r0) {
    throw std::invalid_argument("cone_distance: radii must lie in [0, r0]");
  }
  if (!(dy >= 0.0)) throw std::invalid_argument("cone_distance: negative base distance");
  const double sh = std::sinh(p.r0);
  const double theta = std::min(kPi, dy / sh);
  const double half_diff = std::sinh(0.5 * (r - rp));
  const double half_sin = std::sin(0.5 * theta);
  // cosh d - 1 = (cosh(r - r') - 1) + sinh r sinh r' (1 - cos theta)
  const double y =
      2.0 * half_diff * half_diff + 2.0 * std::sinh(r) * std::sinh(rp) * half_sin * half_sin;
  return acosh1p(y);
}

bool PropertyReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const Entry& e) { return e.pass; });
}

std::string PropertyReport::table() const {
  std::string out = "property                     max violation   result\n";
  char line[96];
  for (const Entry& e : entries) {
    std::snprintf(line, sizeof line, "%-28s %13.3e   %s\n", e.name.c_str(), e.max_violation,
                  e.pass ? "pass" : "FAIL");
    out += line;
  }
  return out;
}

PropertyReport check_mu_properties(const ConeParams& p, std::int64_t grid) {
  p.validate();
  if (grid < 2) throw std::invalid_argument("check_mu_properties: grid must be at least 2");
  const std::int64_t n = grid;
  const double sh = std::sinh(p.r0);
  const double span = 2.0 * kPi * sh;  // covers the plateau beyond pi*sinh(r0)
  const double h = span / static_cast<double>(n - 1);

  // mu sampled at k*h for k in [0, 2n-2] so sums of two grid points are
  // themselves grid points.
  std::vector<double> m(2 * n - 1);
  for (std::int64_t k = 0; k < 2 * n - 1; ++k) m[k] = mu(static_cast<double>(k) * h, p);

  double viol_monotone = 0.0;
  for (std::int64_t k = 0; k + 1 < n; ++k) viol_monotone = std::max(viol_monotone, m[k] - m[k + 1]);

  double viol_concave = 0.0;
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = i; j < n; j += 2) {
      viol_concave = std::max(viol_concave, 0.5 * (m[i] + m[j]) - m[(i + j) / 2]);
    }
  }

  double viol_subadd = 0.0;
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = i; j < n; ++j) {
      viol_subadd = std::max(viol_subadd, m[i + j] - m[i] - m[j]);
    }
  }

  double viol_below_t = 0.0;
  for (std::int64_t k = 0; k < n; ++k) {
    viol_below_t = std::max(viol_below_t, m[k] - static_cast<double>(k) * h);
  }

  double viol_arcsinh = 0.0;
  for (std::int64_t k = 0; k < n; ++k) {
    const double t = static_cast<double>(k) * h;
    if (t > kPi * sh) break;
    viol_arcsinh = std::max(viol_arcsinh, t - kPi * std::sinh(0.5 * m[k]));
  }

  double viol_shorten = 0.0;
  for (std::int64_t a = 0; a < n; ++a) {
    for (std::int64_t b = a; b < n; ++b) {
      const double lhs = m[a + b];
      for (std::int64_t c = 0; c < n; ++c) {
        viol_shorten = std::max(viol_shorten, lhs - (m[a + c] + m[c + b] - m[c]));
      }
    }
  }

  PropertyReport report;
  auto add = [&report](const char* name, double v) {
    report.entries.push_back(PropertyReport::Entry{name, v, v <= kTolerance});
  };
  add("non-decreasing", viol_monotone);
  add("concave (midpoint)", viol_concave);
  add("subadditive", viol_subadd);
  add("mu(t) <= t", viol_below_t);
  add("t <= pi*sinh(mu(t)/2)", viol_arcsinh);
  add("mu(r+s) <= mu(r+t)+mu(t+s)-mu(t)", viol_shorten);
  return report;
}

}  // namespace burnside
