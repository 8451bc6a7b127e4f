#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "circlecs/angle.hpp"
#include "circlecs/quadrature.hpp"
#include "circlecs/wavefunction.hpp"

namespace circlecs {

/// Truncated Fourier series: coefficients a_n for |n| <= max_index.
struct FourierSeries {
  int max_index = 0;
  std::vector<Complex> coeffs;  // index n + max_index

  const Complex& coeff(int n) const { return coeffs[n + max_index]; }
  Complex& coeff(int n) { return coeffs[n + max_index]; }
};

namespace detail {

template <class F>
FourierSeries fourier_analyze_impl(F&& f, int max_index,
                                   const QuadratureRule& rule,
                                   const std::vector<double>& seams) {
  if (max_index < 0) throw std::invalid_argument("fourier_analyze: N must be >= 0");
  if (rule.order < 4 * max_index)
    throw std::invalid_argument(
        "fourier_analyze: rule.order must be at least 4*N for anti-aliasing");
  FourierSeries s;
  s.max_index = max_index;
  s.coeffs.assign(2 * max_index + 1, Complex{0.0, 0.0});
  for (int n = -max_index; n <= max_index; ++n) {
    const Complex integral = integrate_circle(
        [&](double phi) {
          return std::exp(Complex{0.0, -n * phi}) * Complex(f(phi));
        },
        rule.order, seams);
    s.coeff(n) = integral / kTwoPi;
  }
  return s;
}

}  // namespace detail

/// a_n = (1/2pi) integral of e^{-in phi} psi(phi); panels split at the
/// state's seams.
inline FourierSeries fourier_analyze(const CircleWavefunction& psi,
                                     int max_index, const QuadratureRule& rule) {
  return detail::fourier_analyze_impl(psi.eval, max_index, rule,
                                      psi.seam_points);
}

template <class F>
FourierSeries fourier_analyze(F&& f, int max_index, const QuadratureRule& rule) {
  return detail::fourier_analyze_impl(std::forward<F>(f), max_index, rule, {});
}

/// Direct synthesis sum over |n| <= max_index at one angle.
inline Complex fourier_synthesize(const FourierSeries& s, double phi) {
  // e^{in phi} built by a phase ladder from n = -N upward
  const Complex step = std::exp(Complex{0.0, phi});
  Complex phase = std::exp(Complex{0.0, -s.max_index * phi});
  Complex acc{0.0, 0.0};
  for (int n = -s.max_index; n <= s.max_index; ++n) {
    acc += s.coeff(n) * phase;
    phase *= step;
  }
  return acc;
}

}  // namespace circlecs
