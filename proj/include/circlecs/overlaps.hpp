#pragma once

#include <cassert>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "circlecs/angle.hpp"
#include "circlecs/complex_error.hpp"
#include "circlecs/kinematics.hpp"
#include "circlecs/quadrature.hpp"
#include "circlecs/wavefunction.hpp"

namespace circlecs {

struct invalid_pair_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Raised when a label pair cannot be reduced to the closed-form range;
/// callers fall back to overlap_quadrature.
struct unsupported_range_error : std::domain_error {
  using std::domain_error::domain_error;
};

enum class OverlapMethod { analytic, quadrature };

/// Inner product of two coherent states. For the analytic method the two
/// stored contributions satisfy value = A_theta^2 * (i1 + i2) exactly; i1
/// collects the wrap-around segment, i2 the principal one, label phases
/// folded in. The quadrature method leaves i1 = i2 = 0.
struct OverlapResult {
  Complex value{0.0, 0.0};
  Complex i1{0.0, 0.0};
  Complex i2{0.0, 0.0};
  OverlapMethod method = OverlapMethod::analytic;
};

namespace detail {

/// erf(x + ik/2) + erf(x - ik/2), both terms evaluated independently.
inline Complex erf_bracket(double x, int k) {
  const Complex t1 = erf_complex(Complex{x, 0.5 * k});
  const Complex t2 = erf_complex(Complex{x, -0.5 * k});
  const Complex sum = t1 + t2;
  // for k = 0 the bracket is 2 erf(x); a complex leak means a broken erf
  assert(k != 0 || std::abs(sum.imag()) <= 1e-13 * (1.0 + std::abs(sum.real())));
  return sum;
}

/// e^{-k^2/4} [erf(x + ik/2) + erf(x - ik/2)] for x >= 0, the combination
/// both overlap segments need. The plain product holds to |k| = 20; past
/// that the error functions grow like e^{k^2/4} and the product is formed
/// through the Faddeeva function instead,
///   e^{-y^2} erf(x+iy) = e^{-y^2} - e^{-x^2} e^{-2ixy} w(-y+ix),  y = k/2,
/// whose factors stay bounded for every k.
inline Complex gaussian_erf_bracket(double x, int k) {
  if (std::abs(k) <= 20)
    return std::exp(-0.25 * k * k) * erf_bracket(x, k);
  const double y = 0.5 * std::abs(k);
  const Complex w = faddeeva_w(Complex{-y, x});
  const Complex rotated = cis(-2.0 * x * y) * w;
  return {2.0 * (std::exp(-y * y) - std::exp(-x * x) * rotated.real()), 0.0};
}

/// Wrap-around segment integral for 0 <= alpha <= beta < pi, k = n - m:
///   I1 = exp(-(pi-d)^2) e^{ik(S-pi)} e^{-k^2/4} (sqrt(pi)/2) *
///        [erf(d - ik/2) + erf(d + ik/2)],   d = (beta-alpha)/2, S = (alpha+beta)/2.
/// Empty (zero) when alpha == beta.
inline Complex overlap_segment_wrap(double alpha, double beta, int k) {
  if (alpha == beta) return {0.0, 0.0};
  const double d = 0.5 * (beta - alpha);
  const double s = 0.5 * (alpha + beta);
  const double pd = kPi - d;
  const Complex amp = std::exp(-pd * pd) * (0.5 * std::sqrt(kPi)) *
                      gaussian_erf_bracket(d, k);
  return amp * cis(k * (s - kPi));
}

/// Principal segment integral for 0 <= alpha <= beta < pi, k = n - m:
///   I2 = exp(-d^2) e^{ikS} e^{-k^2/4} (sqrt(pi)/2) *
///        [erf(pi - d - ik/2) + erf(pi - d + ik/2)].
inline Complex overlap_segment_main(double alpha, double beta, int k) {
  const double d = 0.5 * (beta - alpha);
  const double s = 0.5 * (alpha + beta);
  const Complex amp = std::exp(-d * d) * (0.5 * std::sqrt(kPi)) *
                      gaussian_erf_bracket(kPi - d, k);
  return amp * cis(k * s);
}

struct ReducedPair {
  double alpha;  // 0 <= alpha <= beta < pi
  double beta;
  int k;  // n - m of the reduced pair
  bool conjugate;
};

/// Maps a general label pair onto the closed-form range using Hermitian
/// symmetry (swap + conjugate) and the reflection phi -> -phi combined with
/// complex conjugation, which sends (m, alpha) to (m, -alpha) for every
/// flux. Pairs of mixed sign have no such reduction.
inline ReducedPair reduce_labels(const CoherentLabel& a, const CoherentLabel& b) {
  const double aa = a.alpha.radians();
  const double ab = b.alpha.radians();
  if (aa >= 0.0 && ab >= 0.0) {
    if (aa <= ab) return {aa, ab, b.m - a.m, false};
    return {ab, aa, a.m - b.m, true};
  }
  if (aa <= 0.0 && ab <= 0.0 && aa > -kPi && ab > -kPi) {
    if (-aa <= -ab) return {-aa, -ab, b.m - a.m, true};
    return {-ab, -aa, a.m - b.m, false};
  }
  throw unsupported_range_error(
      "overlap_analytic: label pair has mixed-sign displacements; use "
      "overlap_quadrature");
}

}  // namespace detail

/// Closed-form inner product <a|b> via the complex error function.
/// Requires matching flux parameters and a pair reducible to
/// 0 <= alpha <= beta < pi.
inline OverlapResult overlap_analytic(const CoherentLabel& a,
                                      const CoherentLabel& b) {
  if (!(a.theta == b.theta))
    throw invalid_pair_error("overlap_analytic: flux parameters differ");
  const detail::ReducedPair r = detail::reduce_labels(a, b);

  Complex i1 = detail::overlap_segment_wrap(r.alpha, r.beta, r.k);
  Complex i2 = detail::overlap_segment_main(r.alpha, r.beta, r.k);
  const double theta = a.theta.value();
  if (!a.theta.is_zero()) {
    // the wrapped segment carries the flux holonomy e^{2 pi i theta}
    const double e2 = std::exp(theta * theta);
    i1 *= e2 * detail::cis(kTwoPi * theta);
    i2 *= e2;
  }
  if (r.conjugate) {
    i1 = std::conj(i1);
    i2 = std::conj(i2);
  }
  const double ath = normalization_constant(a.theta);
  OverlapResult out;
  out.i1 = i1;
  out.i2 = i2;
  out.value = (ath * ath) * (i1 + i2);
  out.method = OverlapMethod::analytic;
  return out;
}

/// Inner product by quadrature of the wrapped wavefunctions; valid for every
/// label pair with matching flux.
inline OverlapResult overlap_quadrature(const CoherentLabel& a,
                                        const CoherentLabel& b,
                                        const QuadratureRule& rule) {
  if (!(a.theta == b.theta))
    throw invalid_pair_error("overlap_quadrature: flux parameters differ");
  const CircleWavefunction fa = coherent_state(a);
  const CircleWavefunction fb = coherent_state(b);
  OverlapResult out;
  out.value = integrate_circle(
      [&](double phi) { return std::conj(fa.eval(phi)) * fb.eval(phi); },
      rule.order, merged_seams(fa, fb));
  out.method = OverlapMethod::quadrature;
  return out;
}

struct OverlapGridCell {
  double alpha = 0.0;
  double beta = 0.0;
  Complex value{0.0, 0.0};
  double abs = 0.0;
};

/// Dense overlap table over the given displacement lists at fixed m - n,
/// analytic path with quadrature fallback. Row order: alpha-major ascending.
inline std::vector<OverlapGridCell> overlap_grid(
    int m_minus_n, const std::vector<Angle>& alphas,
    const std::vector<Angle>& betas, FluxParameter theta) {
  std::vector<OverlapGridCell> cells;
  cells.reserve(alphas.size() * betas.size());
  const QuadratureRule fallback = QuadratureRule::gauss_legendre(512);
  for (Angle alpha : alphas) {
    for (Angle beta : betas) {
      CoherentLabel a{0, alpha, theta};
      CoherentLabel b{-m_minus_n, beta, theta};
      OverlapGridCell cell;
      cell.alpha = alpha.radians();
      cell.beta = beta.radians();
      try {
        cell.value = overlap_analytic(a, b).value;
      } catch (const unsupported_range_error&) {
        cell.value = overlap_quadrature(a, b, fallback).value;
      }
      cell.abs = std::abs(cell.value);
      cells.push_back(cell);
    }
  }
  return cells;
}

}  // namespace circlecs
