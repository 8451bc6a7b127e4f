#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "circlecs/angle.hpp"
#include "circlecs/quadrature.hpp"

namespace circlecs {

/// Complex-valued function on [-pi, pi). `seam_points` lists the interior
/// discontinuity/kink locations that quadrature must split panels at.
struct CircleWavefunction {
  std::function<Complex(double)> eval;
  std::vector<double> seam_points;

  Complex operator()(double phi) const { return eval(phi); }
};

/// Sorted union of both functions' seam points.
inline std::vector<double> merged_seams(const CircleWavefunction& a,
                                        const CircleWavefunction& b) {
  std::vector<double> s = a.seam_points;
  s.insert(s.end(), b.seam_points.begin(), b.seam_points.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

/// <a|b> = integral of conj(a) b over the circle, panel-split at every seam
/// of either state.
inline Complex l2_inner(const CircleWavefunction& a, const CircleWavefunction& b,
                        int order = 512) {
  return integrate_circle(
      [&](double phi) { return std::conj(a.eval(phi)) * b.eval(phi); }, order,
      merged_seams(a, b));
}

inline double l2_norm(const CircleWavefunction& psi, int order = 512) {
  const Complex n2 = integrate_circle(
      [&](double phi) { return std::norm(psi.eval(phi)); }, order,
      psi.seam_points);
  return std::sqrt(std::max(0.0, n2.real()));
}

}  // namespace circlecs
