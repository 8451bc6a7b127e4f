#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "circlecs/angle.hpp"

namespace circlecs {

using Complex = std::complex<double>;

namespace detail {

struct GaussBase {
  std::vector<double> x;  // nodes on (-1, 1)
  std::vector<double> w;
};

/// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration on P_n.
inline GaussBase make_gauss_base(int n) {
  if (n < 1) throw std::invalid_argument("quadrature order must be positive");
  GaussBase g;
  g.x.resize(n);
  g.w.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) {
        // one polishing pass after convergence
        double q0 = 1.0, q1 = x;
        for (int k = 2; k <= n; ++k) {
          const double q2 = ((2.0 * k - 1.0) * x * q1 - (k - 1.0) * q0) / k;
          q0 = q1;
          q1 = q2;
        }
        dp = n * (x * q1 - q0) / (x * x - 1.0);
        x -= q1 / dp;
        break;
      }
    }
    g.x[i] = -x;
    g.x[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    g.w[i] = w;
    g.w[n - 1 - i] = w;
  }
  return g;
}

inline const GaussBase& gauss_base(int n) {
  static std::map<int, GaussBase> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_gauss_base(n)).first;
  return it->second;
}

}  // namespace detail

/// Node/weight table for integration over [-pi, pi).
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  int order = 0;

  static QuadratureRule gauss_legendre(int order) {
    const auto& base = detail::gauss_base(order);
    QuadratureRule r;
    r.order = order;
    r.nodes.resize(order);
    r.weights.resize(order);
    for (int i = 0; i < order; ++i) {
      r.nodes[i] = kPi * base.x[i];
      r.weights[i] = kPi * base.w[i];
    }
    return r;
  }
};

/// Sum of w_i f(x_i) over the rule's table.
template <class F>
Complex integrate(F&& f, const QuadratureRule& rule) {
  Complex acc{0.0, 0.0};
  for (int i = 0; i < rule.order; ++i)
    acc += rule.weights[i] * Complex(f(rule.nodes[i]));
  return acc;
}

/// Gauss-Legendre integral of f over [a, b] at the given order.
template <class F>
Complex integrate_interval(F&& f, double a, double b, int order) {
  const auto& base = detail::gauss_base(order);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  Complex acc{0.0, 0.0};
  for (int i = 0; i < order; ++i)
    acc += base.w[i] * Complex(f(mid + half * base.x[i]));
  return half * acc;
}

/// Integral over [-pi, pi) split into panels at the given interior seam
/// points (each in (-pi, pi), unsorted/duplicated input tolerated).
template <class F>
Complex integrate_circle(F&& f, int order, const std::vector<double>& seams) {
  std::vector<double> cuts;
  cuts.reserve(seams.size() + 2);
  cuts.push_back(-kPi);
  for (double s : seams)
    if (s > -kPi && s < kPi) cuts.push_back(s);
  cuts.push_back(kPi);
  std::sort(cuts.begin(), cuts.end());
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] - cuts[i] < 1e-14) continue;
    acc += integrate_interval(f, cuts[i], cuts[i + 1], order);
  }
  return acc;
}

}  // namespace circlecs
