#pragma once

#include <cmath>
#include <complex>

#include "circlecs/angle.hpp"
#include "circlecs/kinematics.hpp"
#include "circlecs/quadrature.hpp"

namespace circlecs {

/// Diagonal expectation values and dispersions of one coherent state.
/// mean_q = alpha + q1, mean_q2 = alpha^2 + 1/2 + q2, mean_p = m,
/// mean_p2 = m^2 + 1/2 + p2.
struct ExpectationReport {
  double q1 = 0.0;
  double q2 = 0.0;
  double p2 = 0.0;
  double mean_q = 0.0;
  double mean_q2 = 0.0;
  double mean_p = 0.0;
  double mean_p2 = 0.0;
  double disp_q = 0.0;
  double disp_p = 0.0;
  double uncertainty_product = 0.0;
};

// The flux parameter is accepted by the correction functions for interface
// symmetry only: a flux-twisted state has the same position density as the
// untwisted one (the gauge phase is unimodular), so all three corrections
// are flux-independent. The quadrature suite pins this down.

/// First position correction: <Q> = alpha + q1(alpha).
/// The wrapped Gaussian tail relocates by a full turn against the
/// displacement, so q1 is an odd function pulling the mean back toward zero:
/// q1 = -sign(alpha) A^2 sqrt(pi^3) (erf(pi) - erf(pi - |alpha|)).
inline double correction_q1(Angle alpha, FluxParameter /*theta*/ = FluxParameter{}) {
  static const double a2 = [] {
    const double a = normalization_constant(FluxParameter{});
    return a * a;
  }();
  const double al = std::abs(alpha.radians());
  const double diff = std::erf(kPi) - std::erf(kPi - al);
  const double q = -a2 * std::sqrt(kPi * kPi * kPi) * diff;
  return alpha.radians() < 0.0 ? -q : q;
}

/// Second position correction: <Q^2> = alpha^2 + 1/2 + q2(alpha). Even in
/// alpha; the negative branch mirrors through pi + alpha.
inline double correction_q2(Angle alpha, FluxParameter /*theta*/ = FluxParameter{}) {
  static const double a2 = [] {
    const double a = normalization_constant(FluxParameter{});
    return a * a;
  }();
  const double al = std::abs(alpha.radians());
  const double pa = kPi - al;
  const double diff = std::erf(kPi) - std::erf(pa);
  return a2 * (kPi * (std::exp(-kPi * kPi) - 2.0 * std::exp(-pa * pa)) +
               2.0 * std::sqrt(kPi * kPi * kPi) * pa * diff);
}

/// Momentum correction: <P^2> = m^2 + 1/2 + p2; independent of alpha and m.
inline double correction_p2(FluxParameter /*theta*/ = FluxParameter{}) {
  static const double value = [] {
    const double a = normalization_constant(FluxParameter{});
    return a * a * kPi * std::exp(-kPi * kPi);
  }();
  return value;
}

/// Assembles the full expectation report for one label.
inline ExpectationReport expectations(const CoherentLabel& label) {
  ExpectationReport r;
  const double al = label.alpha.radians();
  r.q1 = correction_q1(label.alpha, label.theta);
  r.q2 = correction_q2(label.alpha, label.theta);
  r.p2 = correction_p2(label.theta);
  r.mean_q = al + r.q1;
  r.mean_q2 = al * al + 0.5 + r.q2;
  r.mean_p = static_cast<double>(label.m);
  r.mean_p2 = static_cast<double>(label.m) * label.m + 0.5 + r.p2;
  r.disp_q = std::sqrt(0.5 + r.q2 - 2.0 * al * r.q1 - r.q1 * r.q1);
  r.disp_p = std::sqrt(0.5 + r.p2);
  r.uncertainty_product = r.disp_q * r.disp_p;
  return r;
}

/// <label| e^{iQ} |label> by quadrature. The relative expectation against
/// the vacuum value equals e^{i alpha} exactly.
inline Complex unitary_position_expectation(const CoherentLabel& label,
                                            int order = 512) {
  const CircleWavefunction psi = coherent_state(label);
  return integrate_circle(
      [&](double phi) {
        return detail::cis(phi) * std::norm(psi.eval(phi));
      },
      order, psi.seam_points);
}

}  // namespace circlecs
