#include <algorithm>
#include <cmath>
#include <numbers>

#include "chomp/analysis.hpp"

namespace chomp::analysis {

namespace {

double cubic(double x, double p, double q, double r) { return ((x + p) * x + q) * x + r; }

// Root of the cubic in [lo, hi] given a sign change (f(lo) <= 0 <= f(hi) or the reverse).
double bisect(double lo, double hi, double p, double q, double r) {
  double flo = cubic(lo, p, q, r);
  for (int i = 0; i < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = cubic(mid, p, q, r);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::vector<double> real_cubic_roots(double p, double q, double r) {
  const double bound = 1.0 + std::max({std::abs(p), std::abs(q), std::abs(r)});
  const double disc = p * p - 3.0 * q;
  const double eps = 1e-9 * bound * bound * bound;
  if (disc < 0.0) return {};
  if (disc == 0.0) {
    const double x0 = -p / 3.0;
    if (std::abs(cubic(x0, p, q, r)) <= eps) return {x0, x0, x0};
    return {};
  }
  const double s = std::sqrt(disc);
  const double x_max = (-p - s) / 3.0;  // local maximum
  const double x_min = (-p + s) / 3.0;  // local minimum
  const double f_max = cubic(x_max, p, q, r);
  const double f_min = cubic(x_min, p, q, r);
  if (f_max < -eps || f_min > eps) return {};
  if (std::abs(f_max) <= eps && std::abs(f_min) <= eps) return {x_max, x_max, x_min};
  if (std::abs(f_max) <= eps) return {x_max, x_max, bisect(x_min, bound, p, q, r)};
  if (std::abs(f_min) <= eps) return {bisect(-bound, x_max, p, q, r), x_min, x_min};
  return {bisect(-bound, x_max, p, q, r), bisect(x_max, x_min, p, q, r), bisect(x_min, bound, p, q, r)};
}

std::vector<Cubic> cubic_search(std::array<double, 3> limits, int coeff_bound, double tol) {
  std::sort(limits.begin(), limits.end());
  std::vector<Cubic> out;
  for (int p = -coeff_bound; p <= coeff_bound; ++p) {
    for (int q = -coeff_bound; q <= coeff_bound; ++q) {
      for (int r = -coeff_bound; r <= coeff_bound; ++r) {
        const std::vector<double> roots = real_cubic_roots(p, q, r);
        if (roots.size() != 3) continue;
        double err = 0.0;
        for (std::size_t i = 0; i < 3; ++i) err = std::max(err, std::abs(roots[i] - limits[i]));
        if (err <= tol) out.push_back(Cubic{p, q, r, {roots[0], roots[1], roots[2]}, err});
      }
    }
  }
  return out;
}

TrigProximity trig_proximity_report(double L3) {
  const double target = std::cos(3.0 * std::numbers::pi / 7.0);
  return TrigProximity{L3, target, std::abs(L3 - target)};
}

}  // namespace chomp::analysis
