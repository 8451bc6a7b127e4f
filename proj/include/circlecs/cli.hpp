#pragma once

#include <charconv>
#include <cmath>
#include <complex>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "circlecs/angle.hpp"
#include "circlecs/kinematics.hpp"
#include "circlecs/observables.hpp"
#include "circlecs/overlaps.hpp"
#include "circlecs/resolution.hpp"

namespace circlecs {

/// Configuration of one CLI invocation.
struct RunConfig {
  enum class Command {
    constants,
    overlap_grid,
    uncertainty_curve,
    expectations,
    verify_rou,
    verify_all,
  };
  Command command = Command::constants;
  FluxParameter theta{};
  int grid_steps = 61;
  int k_cutoff = 50;
  int quad_order = 512;
  int m_minus_n = 0;
  std::string output_path = "-";
};

inline void validate(const RunConfig& cfg) {
  if (cfg.grid_steps < 2)
    throw std::invalid_argument("grid_steps must be >= 2");
  if (cfg.quad_order < 64)
    throw std::invalid_argument("quad_order must be >= 64");
  if (cfg.k_cutoff < 0) throw std::invalid_argument("k_cutoff must be >= 0");
}

namespace detail {

/// Locale-independent shortest-17-significant-digit rendering, so CSV output
/// is byte-identical across runs and platforms.
inline std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v,
                                 std::chars_format::general, 17);
  (void)ec;
  return std::string(buf, ptr);
}

inline std::string format_double(Complex) = delete;

// quadrature oracles for the verify-all expectation check

inline double moment_q(const CoherentLabel& l, int power, int order) {
  const CircleWavefunction psi = coherent_state(l);
  const Complex v = integrate_circle(
      [&](double phi) {
        const double w = power == 1 ? phi : phi * phi;
        return Complex{w * std::norm(psi.eval(phi)), 0.0};
      },
      order, psi.seam_points);
  return v.real();
}

/// <P> and <P^2> with the momentum acting as the formal derivative of the
/// closed-form branch expressions: P psi = (m + i u) psi, u = wrap(phi-alpha).
inline Complex moment_p(const CoherentLabel& l, int power, int order) {
  const CircleWavefunction psi = coherent_state(l);
  const double al = l.alpha.radians();
  const double m = l.m;
  return integrate_circle(
      [&](double phi) {
        const double u = wrap_angle(phi - al);
        const Complex mu{m, u};
        const Complex factor = power == 1 ? mu : 1.0 + mu * mu;
        return factor * std::norm(psi.eval(phi));
      },
      order, psi.seam_points);
}

}  // namespace detail

/// `constants`: golden values with their quoted references and deviations.
inline void cmd_constants(const RunConfig& cfg, std::ostream& out) {
  using detail::format_double;
  const double a = normalization_constant(FluxParameter{});
  const double a_theta = normalization_constant(cfg.theta);
  const Complex up = unitary_position_expectation(
      CoherentLabel{0, Angle{0.0}, FluxParameter{}}, cfg.quad_order);
  const ExpectationReport rep =
      expectations(CoherentLabel{0, Angle{0.0}, FluxParameter{}});
  const double heis_formula =
      std::sqrt(0.25 - a * a * kPi * kPi * std::exp(-2.0 * kPi * kPi));
  const double p2 = correction_p2(cfg.theta);

  out << "A = " << format_double(a) << " (reference 0.751128, deviation "
      << format_double(std::abs(a - 0.751128)) << ")\n";
  out << "A_theta(" << format_double(cfg.theta.value())
      << ") = " << format_double(a_theta)
      << " (= A*exp(-theta^2/2); equals A at theta = 0)\n";
  out << "vacuum_unitary_position = " << format_double(up.real())
      << " (reference 0.778816, deviation "
      << format_double(std::abs(up.real() - 0.778816)) << ")\n";
  out << "vacuum_unitary_position_vs_exp(-1/4): deviation "
      << format_double(std::abs(up.real() - std::exp(-0.25)))
      << " (reference 0.778816 = exp(-1/4) to 5 digits)\n";
  out << "uncertainty_product(0) = " << format_double(rep.uncertainty_product)
      << " (reference 0.4999999973, deviation "
      << format_double(std::abs(rep.uncertainty_product - 0.4999999973))
      << ")\n";
  out << "uncertainty_product_simplified_form = " << format_double(heis_formula)
      << " (sqrt(1/4 - A^2 pi^2 exp(-2 pi^2)); deviation from the assembled "
         "product "
      << format_double(std::abs(rep.uncertainty_product - heis_formula))
      << ", reported, not suppressed)\n";
  out << "p2 = " << format_double(p2) << " (reference 9.17e-05, deviation "
      << format_double(std::abs(p2 - 9.17e-05)) << ")\n";
}

/// `overlap-grid`: CSV alpha,beta,re,im,abs over [0,pi)^2, alpha-major.
inline void cmd_overlap_grid(const RunConfig& cfg, std::ostream& out) {
  using detail::format_double;
  std::vector<Angle> axis;
  axis.reserve(cfg.grid_steps);
  for (int i = 0; i < cfg.grid_steps; ++i)
    axis.push_back(Angle{i * kPi / cfg.grid_steps});
  const auto cells = overlap_grid(cfg.m_minus_n, axis, axis, cfg.theta);
  out << "alpha,beta,re,im,abs\n";
  for (const auto& c : cells) {
    out << format_double(c.alpha) << ',' << format_double(c.beta) << ','
        << format_double(c.value.real()) << ',' << format_double(c.value.imag())
        << ',' << format_double(c.abs) << '\n';
  }
}

/// `uncertainty-curve`: CSV alpha,disp_q,disp_p,product over [0,pi).
inline void cmd_uncertainty_curve(const RunConfig& cfg, std::ostream& out) {
  using detail::format_double;
  out << "alpha,disp_q,disp_p,product\n";
  for (int i = 0; i < cfg.grid_steps; ++i) {
    const double alpha = i * kPi / cfg.grid_steps;
    const ExpectationReport r =
        expectations(CoherentLabel{0, Angle{alpha}, cfg.theta});
    out << format_double(alpha) << ',' << format_double(r.disp_q) << ','
        << format_double(r.disp_p) << ',' << format_double(r.uncertainty_product)
        << '\n';
  }
}

/// `expectations`: CSV sweep of the full report over alpha in [0,pi) at m=0.
inline void cmd_expectations(const RunConfig& cfg, std::ostream& out) {
  using detail::format_double;
  out << "alpha,q1,q2,p2,mean_q,mean_q2,mean_p,mean_p2,disp_q,disp_p,product\n";
  for (int i = 0; i < cfg.grid_steps; ++i) {
    const double alpha = i * kPi / cfg.grid_steps;
    const ExpectationReport r =
        expectations(CoherentLabel{0, Angle{alpha}, cfg.theta});
    out << format_double(alpha) << ',' << format_double(r.q1) << ','
        << format_double(r.q2) << ',' << format_double(r.p2) << ','
        << format_double(r.mean_q) << ',' << format_double(r.mean_q2) << ','
        << format_double(r.mean_p) << ',' << format_double(r.mean_p2) << ','
        << format_double(r.disp_q) << ',' << format_double(r.disp_p) << ','
        << format_double(r.uncertainty_product) << '\n';
  }
}

inline constexpr double kRoUTolerance = 1e-8;
inline constexpr double kOracleTolerance = 1e-9;

/// `verify-rou`: residual report for one flux value; nonzero iff over
/// tolerance.
inline int cmd_verify_rou(const RunConfig& cfg, std::ostream& out) {
  using detail::format_double;
  const QuadratureRule rule = QuadratureRule::gauss_legendre(cfg.quad_order);
  const RoUReport rep = verify_rou(cfg.theta, cfg.k_cutoff, rule);
  for (std::size_t i = 0; i < rep.residuals.size(); ++i)
    out << "residual(" << rep.test_functions[i]
        << ") = " << format_double(rep.residuals[i]) << "\n";
  out << "max_residual = " << format_double(rep.max_residual)
      << " (tolerance " << format_double(kRoUTolerance) << ")\n";
  const bool ok = rep.max_residual <= kRoUTolerance;
  out << (ok ? "verify-rou: ok\n" : "verify-rou: FAIL\n");
  return ok ? 0 : 1;
}

/// `verify-all`: completeness at theta in {0, cfg.theta}, the overlap
/// analytic-vs-quadrature grid, and the expectation closed-form-vs-quadrature
/// grid. Exit status 0 iff every tolerance is met.
inline int cmd_verify_all(const RunConfig& cfg, std::ostream& out) {
  using detail::format_double;
  int failures = 0;
  const QuadratureRule rule = QuadratureRule::gauss_legendre(cfg.quad_order);

  for (const double th : {0.0, cfg.theta.value()}) {
    const RoUReport rep =
        verify_rou(FluxParameter{th}, cfg.k_cutoff, rule);
    const bool ok = rep.max_residual <= kRoUTolerance;
    if (!ok) ++failures;
    out << "check resolution-of-unity theta=" << format_double(th)
        << ": max_residual = " << format_double(rep.max_residual) << " "
        << (ok ? "ok" : "FAIL") << "\n";
  }

  {
    double worst = 0.0;
    const std::vector<double> angles{0.0, 0.3, 0.9, 1.7, 2.8};
    for (const double th : {0.0, 0.25, 0.7}) {
      for (std::size_t i = 0; i < angles.size(); ++i)
        for (std::size_t j = i; j < angles.size(); ++j)
          for (int k = 0; k <= 5; ++k) {
            const CoherentLabel a{0, Angle{angles[i]}, FluxParameter{th}};
            const CoherentLabel b{-k, Angle{angles[j]}, FluxParameter{th}};
            const Complex diff = overlap_analytic(a, b).value -
                                 overlap_quadrature(a, b, rule).value;
            worst = std::max(worst, std::abs(diff));
          }
    }
    const bool ok = worst <= kOracleTolerance;
    if (!ok) ++failures;
    out << "check overlap-oracle-grid: max |analytic - quadrature| = "
        << format_double(worst) << " " << (ok ? "ok" : "FAIL") << "\n";
  }

  {
    double worst = 0.0;
    for (const int m : {0, 3})
      for (const double al : {0.0, 1.0, -1.0, 2.5})
        for (const double th : {0.0, 0.4}) {
          const CoherentLabel l{m, Angle{al}, FluxParameter{th}};
          const ExpectationReport r = expectations(l);
          worst = std::max(
              worst, std::abs(r.mean_q -
                              detail::moment_q(l, 1, cfg.quad_order)));
          worst = std::max(
              worst, std::abs(r.mean_q2 -
                              detail::moment_q(l, 2, cfg.quad_order)));
          const Complex p1 = detail::moment_p(l, 1, cfg.quad_order);
          const Complex p2 = detail::moment_p(l, 2, cfg.quad_order);
          worst = std::max(worst, std::abs(r.mean_p - p1.real()));
          worst = std::max(worst, std::abs(p1.imag()));
          worst = std::max(worst, std::abs(r.mean_p2 - p2.real()));
          worst = std::max(worst, std::abs(p2.imag()));
        }
    const bool ok = worst <= kOracleTolerance;
    if (!ok) ++failures;
    out << "check expectation-oracle-grid: max |closed form - quadrature| = "
        << format_double(worst) << " " << (ok ? "ok" : "FAIL") << "\n";
  }

  out << (failures == 0 ? "verify-all: ok\n" : "verify-all: FAIL\n");
  return failures == 0 ? 0 : 1;
}

/// Dispatches one configuration; returns the process exit status.
inline int run_command(const RunConfig& cfg, std::ostream& out) {
  validate(cfg);
  switch (cfg.command) {
    case RunConfig::Command::constants:
      cmd_constants(cfg, out);
      return 0;
    case RunConfig::Command::overlap_grid:
      cmd_overlap_grid(cfg, out);
      return 0;
    case RunConfig::Command::uncertainty_curve:
      cmd_uncertainty_curve(cfg, out);
      return 0;
    case RunConfig::Command::expectations:
      cmd_expectations(cfg, out);
      return 0;
    case RunConfig::Command::verify_rou:
      return cmd_verify_rou(cfg, out);
    case RunConfig::Command::verify_all:
      return cmd_verify_all(cfg, out);
  }
  return 2;
}

}  // namespace circlecs
