#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace circlecs {

using Complex = std::complex<double>;

namespace detail {

inline constexpr double kInvSqrtPi = 0.56418958354775628695;  // 1/sqrt(pi)
inline constexpr double kTwoOverSqrtPi = 1.1283791670955125739;

/// Maclaurin series for erf, reliable for |z| <= ~2 (cancellation stays
/// below ~e^{|z|^2} ulps).
inline Complex erf_taylor(const Complex& z) {
  const Complex z2 = z * z;
  Complex u = z;       // z^{2k+1}/k!
  Complex sum = z;     // term k=0: z/1
  for (int k = 1; k < 64; ++k) {
    u *= -z2 / static_cast<double>(k);
    const Complex term = u / static_cast<double>(2 * k + 1);
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return kTwoOverSqrtPi * sum;
}

/// erf(i*y)/i = erfi(y) for y >= 0 via its all-positive Maclaurin series
/// (no cancellation at any y).
inline double erfi_series(double y) {
  const double y2 = y * y;
  double u = y;
  double sum = y;
  for (int k = 1; k < 1200; ++k) {
    u *= y2 / static_cast<double>(k);
    const double term = u / static_cast<double>(2 * k + 1);
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return kTwoOverSqrtPi * sum;
}

/// Faddeeva w(z) for Im z >= 0, |z| < 12: midpoint-rule sum over a Gaussian
/// comb plus the pole-crossing correction,
///   w(z) = (i h/pi) sum_k e^{-t_k^2}/(z-t_k) + 2 e^{-z^2} q/(1+q),
/// t_k = (k+1/2) h, q = exp(2 pi i z/h). Quadrature error ~ e^{-pi^2/h^2}.
inline Complex faddeeva_midpoint(const Complex& z) {
  constexpr double h = 0.5;
  constexpr int terms = 13;  // exp(-(12.5*h)^2) ~ 1e-17
  const Complex z2 = z * z;
  Complex sum{0.0, 0.0};
  for (int k = 0; k < terms; ++k) {
    const double t = (k + 0.5) * h;
    sum += std::exp(-t * t) * (2.0 * z) / (z2 - t * t);
  }
  const Complex ih_over_pi{0.0, h / std::numbers::pi};
  Complex w = ih_over_pi * sum;
  // The correction collects the comb poles actually crossed, which happens
  // only below Im z = pi/h; above that height the crossed-pole sum starts at
  // m = 2 and is < 1e-150 here. q/(1+q) is written through
  // exp(-z^2 + 2 pi i z/h), whose real exponent y^2 - x^2 - 2 pi y/h stays
  // nonpositive on this branch.
  if (z.imag() < std::numbers::pi / h) {
    const Complex two_pi_iz_over_h =
        Complex{0.0, 2.0 * std::numbers::pi / h} * z;
    const Complex q = std::exp(two_pi_iz_over_h);
    w += 2.0 * std::exp(-z2 + two_pi_iz_over_h) / (1.0 + q);
  }
  return w;
}

/// Laplace continued fraction for w(z), Im z >= 0, |z| >= 12.
inline Complex faddeeva_cf(const Complex& z) {
  Complex r{0.0, 0.0};
  for (int n = 24; n >= 1; --n) r = (0.5 * n) / (z - r);
  return Complex{0.0, kInvSqrtPi} / (z - r);
}

}  // namespace detail

/// Faddeeva function w(z) = exp(-z^2) erfc(-iz).
///
/// Intended for Im z >= 0; the lower half-plane is reached through
/// w(z) = 2 exp(-z^2) - w(-z) and raises std::range_error when that
/// exponential exceeds double range. On the real axis accuracy degrades
/// only within ~1e-10 of the comb points (k+1/2)/2.
inline Complex faddeeva_w(Complex z) {
  if (z.imag() >= 0.0) {
    return std::abs(z) < 12.0 ? detail::faddeeva_midpoint(z)
                              : detail::faddeeva_cf(z);
  }
  const double overflow_exponent =
      z.imag() * z.imag() - z.real() * z.real();
  if (overflow_exponent > 700.0)
    throw std::range_error("faddeeva_w: result exceeds double range");
  return 2.0 * std::exp(-z * z) - faddeeva_w(-z);
}

/// Error function of a complex variable.
///
/// Domain: |Re z| <= 50 and |Im z| <= 50 (std::domain_error otherwise).
/// Within that box arguments with Im^2 - Re^2 > ~700 have |erf| beyond
/// double range and raise std::range_error. Relative accuracy is ~1e-14
/// except within ~1e-3 of the function's complex zeros, where the error
/// stays ~1e-16 in absolute terms.
inline Complex erf_complex(Complex z) {
  if (!(std::abs(z.real()) <= 50.0) || !(std::abs(z.imag()) <= 50.0))
    throw std::domain_error("erf_complex: argument outside |Re|,|Im| <= 50");

  if (z.imag() == 0.0) return {std::erf(z.real()), z.imag()};
  if (z.real() == 0.0) {
    const double y = z.imag();
    if (y * y > 700.0)
      throw std::range_error("erf_complex: result exceeds double range");
    const double v = y > 0.0 ? detail::erfi_series(y) : -detail::erfi_series(-y);
    return {z.real(), v};
  }

  bool negate = false;
  if (z.real() < 0.0) {  // oddness
    z = -z;
    negate = true;
  }
  bool conjugate = false;
  if (z.imag() < 0.0) {  // erf(conj z) = conj erf(z)
    z = std::conj(z);
    conjugate = true;
  }

  Complex r;
  if (std::abs(z) <= 1.8) {
    r = detail::erf_taylor(z);
  } else {
    const double overflow_exponent =
        z.imag() * z.imag() - z.real() * z.real();
    if (overflow_exponent > 700.0)
      throw std::range_error("erf_complex: result exceeds double range");
    // erf(z) = 1 - exp(-z^2) w(iz); iz lies in the upper half-plane here.
    const Complex iz{-z.imag(), z.real()};
    const Complex w = std::abs(iz) < 12.0 ? detail::faddeeva_midpoint(iz)
                                          : detail::faddeeva_cf(iz);
    r = 1.0 - std::exp(-z * z) * w;
  }

  if (conjugate) r = std::conj(r);
  if (negate) r = -r;
  return r;
}

}  // namespace circlecs
