#pragma once

#include <cmath>
#include <complex>
#include <memory>
#include <utility>
#include <vector>

#include "circlecs/angle.hpp"
#include "circlecs/complex_error.hpp"
#include "circlecs/wavefunction.hpp"

namespace circlecs {

/// Normalization constant A_theta = A e^{-theta^2/2} with
/// A = [integral of exp(-phi^2) over the circle]^{-1/2} = 1/sqrt(sqrt(pi) erf(pi)).
inline double normalization_constant(FluxParameter theta) {
  static const double a0 =
      1.0 / std::sqrt(std::sqrt(kPi) * std::erf(kPi));
  if (theta.is_zero()) return a0;
  return a0 * std::exp(-0.5 * theta.value() * theta.value());
}

namespace detail {

inline Complex cis(double x) { return {std::cos(x), std::sin(x)}; }

inline void push_seam(std::vector<double>& seams, double s) {
  if (s > -kPi && s < kPi) seams.push_back(s);
}

}  // namespace detail

/// Vacuum state: the truncated Gaussian A e^{-phi^2/2} carrying the gauge
/// phase e^{i theta phi} for nonzero flux. Unit norm for every theta.
inline CircleWavefunction vacuum(FluxParameter theta) {
  const double a = normalization_constant(FluxParameter{});
  CircleWavefunction psi;
  if (theta.is_zero()) {
    psi.eval = [a](double phi) -> Complex {
      return {a * std::exp(-0.5 * phi * phi), 0.0};
    };
  } else {
    const double th = theta.value();
    psi.eval = [a, th](double phi) -> Complex {
      return a * std::exp(-0.5 * phi * phi) * detail::cis(th * phi);
    };
  }
  return psi;
}

/// Rotation by alpha: phi -> psi(wrap(phi - alpha)). The image of the
/// interval boundary becomes an interior seam of the output.
inline CircleWavefunction apply_rotation(const CircleWavefunction& psi,
                                         Angle alpha) {
  const double al = alpha.radians();
  CircleWavefunction out;
  auto inner = std::make_shared<std::function<Complex(double)>>(psi.eval);
  out.eval = [inner, al](double phi) -> Complex {
    return (*inner)(wrap_angle(phi - al));
  };
  if (al != 0.0) detail::push_seam(out.seam_points, wrap_angle(al + kPi));
  for (double s : psi.seam_points)
    detail::push_seam(out.seam_points, wrap_angle(s + al));
  std::sort(out.seam_points.begin(), out.seam_points.end());
  return out;
}

/// Momentum kick: multiplication by e^{im phi}.
inline CircleWavefunction apply_phase(const CircleWavefunction& psi, int m) {
  CircleWavefunction out;
  auto inner = std::make_shared<std::function<Complex(double)>>(psi.eval);
  if (m == 0) {
    out.eval = *inner;
  } else {
    out.eval = [inner, m](double phi) -> Complex {
      return detail::cis(m * phi) * (*inner)(phi);
    };
  }
  out.seam_points = psi.seam_points;
  return out;
}

/// Weyl operator W(m, alpha) = e^{im Q} e^{-i alpha P_theta} acting on psi.
///
/// The covariant shift in the periodic gauge is
/// e^{-i alpha P_theta} psi = e^{i alpha theta} psi(wrap(phi - alpha)),
/// the unique action consistent with the gauge map from the quasi-periodic
/// representation. At theta = 0 the extra phase is skipped entirely, so the
/// flux-free path computes the plain shift-and-phase formulas verbatim.
inline CircleWavefunction weyl(const CoherentLabel& label,
                               const CircleWavefunction& psi) {
  CircleWavefunction rotated = apply_rotation(psi, label.alpha);
  if (!label.theta.is_zero()) {
    const Complex gauge =
        detail::cis(label.alpha.radians() * label.theta.value());
    auto inner = std::make_shared<std::function<Complex(double)>>(rotated.eval);
    rotated.eval = [inner, gauge](double phi) -> Complex {
      return gauge * (*inner)(phi);
    };
  }
  return apply_phase(rotated, label.m);
}

/// Coherent state |m, alpha, theta> in closed form:
///   A e^{-u^2/2} exp(i [m phi + theta (alpha + u)]),  u = wrap(phi - alpha).
/// Pointwise equal to weyl(label, vacuum(theta)); alpha + u differs from phi
/// by the 2 pi wrap, which is where the flux phase of the wrapped branch
/// comes from.
inline CircleWavefunction coherent_state(const CoherentLabel& label) {
  const double a = normalization_constant(FluxParameter{});
  const double al = label.alpha.radians();
  const int m = label.m;
  CircleWavefunction psi;
  if (label.theta.is_zero()) {
    psi.eval = [a, al, m](double phi) -> Complex {
      const double u = wrap_angle(phi - al);
      return a * std::exp(-0.5 * u * u) * detail::cis(m * phi);
    };
  } else {
    const double th = label.theta.value();
    psi.eval = [a, al, m, th](double phi) -> Complex {
      const double u = wrap_angle(phi - al);
      return a * std::exp(-0.5 * u * u) * detail::cis(m * phi + th * (al + u));
    };
  }
  if (al != 0.0) detail::push_seam(psi.seam_points, wrap_angle(al + kPi));
  return psi;
}

}  // namespace circlecs
