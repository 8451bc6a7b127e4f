#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <vector>

#include "circlecs/overlaps.hpp"
#include "support/oracles.hpp"

using namespace circlecs;

namespace {

const QuadratureRule& rule512() {
  static const auto r = QuadratureRule::gauss_legendre(512);
  return r;
}

Complex cis(double x) { return {std::cos(x), std::sin(x)}; }

}  // namespace

TEST_CASE("diagonal overlaps are one") {
  for (double th : {0.0, 0.4}) {
    for (double al : {0.0, 0.9, 2.7}) {
      const CoherentLabel l{2, Angle{al}, FluxParameter{th}};
      CHECK(std::abs(overlap_analytic(l, l).value - 1.0) < 1e-13);
      CHECK(std::abs(overlap_quadrature(l, l, rule512()).value - 1.0) < 1e-10);
    }
  }
}

TEST_CASE("equal displacements kill the wrap segment") {
  // erf(ix) + erf(-ix) = 0, so i1 vanishes whenever alpha == beta
  const CoherentLabel a{0, Angle{1.1}, FluxParameter{}};
  const CoherentLabel b{3, Angle{1.1}, FluxParameter{}};
  const OverlapResult r = overlap_analytic(a, b);
  CHECK(r.i1 == Complex{0.0, 0.0});
  CHECK(std::abs(r.value - overlap_quadrature(a, b, rule512()).value) < 1e-10);
}

TEST_CASE("wrap segment closed form against direct integration") {
  // the integral over [alpha-pi, beta-pi] of
  // e^{ik phi} e^{-(phi-alpha)^2/2} e^{-(phi-beta+2pi)^2/2}
  for (const auto& [al, be, k] : std::vector<std::tuple<double, double, int>>{
           {0.0, 0.8, 0}, {0.3, 0.9, 1}, {0.2, 2.4, 4}, {1.0, 2.9, -3}}) {
    const double a = al, b = be;
    const int kk = k;
    const Complex direct = oracle::adaptive_simpson(
        [a, b, kk](double phi) {
          return std::exp(Complex{0.0, kk * phi}) *
                 std::exp(-0.5 * (phi - a) * (phi - a)) *
                 std::exp(-0.5 * (phi - b + kTwoPi) * (phi - b + kTwoPi));
        },
        a - kPi, b - kPi, 1e-14);
    const Complex closed = detail::overlap_segment_wrap(a, b, kk);
    CHECK(std::abs(direct - closed) < 1e-13);
  }
}

TEST_CASE("principal segment closed form against direct integration") {
  for (const auto& [al, be, k] : std::vector<std::tuple<double, double, int>>{
           {0.0, 0.8, 0}, {0.3, 0.9, 2}, {0.6, 2.8, 5}}) {
    const double a = al, b = be;
    const int kk = k;
    const Complex direct = oracle::adaptive_simpson(
        [a, b, kk](double phi) {
          return std::exp(Complex{0.0, kk * phi}) *
                 std::exp(-0.5 * (phi - a) * (phi - a)) *
                 std::exp(-0.5 * (phi - b) * (phi - b));
        },
        b - kPi, kPi + a, 1e-14);
    const Complex closed = detail::overlap_segment_main(a, b, kk);
    CHECK(std::abs(direct - closed) < 1e-13);
  }
}

TEST_CASE("analytic path equals the quadrature oracle on the cross grid") {
  const std::vector<double> angles{0.0, 0.3, 0.9, 1.7, 2.8};
  double worst = 0.0;
  for (double th : {0.0, 0.25, 0.7}) {
    for (std::size_t i = 0; i < angles.size(); ++i) {
      for (std::size_t j = i; j < angles.size(); ++j) {
        for (int k = 0; k <= 5; ++k) {
          const CoherentLabel a{0, Angle{angles[i]}, FluxParameter{th}};
          const CoherentLabel b{-k, Angle{angles[j]}, FluxParameter{th}};
          const Complex va = overlap_analytic(a, b).value;
          const Complex vq = overlap_quadrature(a, b, rule512()).value;
          worst = std::max(worst, std::abs(va - vq));
        }
      }
    }
  }
  INFO("max |analytic - quadrature| = " << worst);
  CHECK(worst <= 1e-9);
}

TEST_CASE("hermitian symmetry") {
  const std::vector<CoherentLabel> labels{
      {0, Angle{0.4}, FluxParameter{0.3}},  {2, Angle{-1.9}, FluxParameter{0.3}},
      {-3, Angle{2.8}, FluxParameter{0.3}}, {5, Angle{-0.2}, FluxParameter{0.3}},
  };
  for (const auto& a : labels) {
    for (const auto& b : labels) {
      const Complex ab = overlap_quadrature(a, b, rule512()).value;
      const Complex ba = overlap_quadrature(b, a, rule512()).value;
      CHECK(std::abs(ab - std::conj(ba)) <= 1e-12);
    }
  }
}

TEST_CASE("swap and reflection reductions match quadrature") {
  // beta < alpha exercises the Hermitian swap inside the analytic path
  {
    const CoherentLabel a{1, Angle{2.0}, FluxParameter{0.25}};
    const CoherentLabel b{4, Angle{0.3}, FluxParameter{0.25}};
    CHECK(std::abs(overlap_analytic(a, b).value -
                   overlap_quadrature(a, b, rule512()).value) < 1e-10);
  }
  // both negative exercises the reflection reduction
  {
    const CoherentLabel a{2, Angle{-0.7}, FluxParameter{0.6}};
    const CoherentLabel b{-1, Angle{-2.2}, FluxParameter{0.6}};
    CHECK(std::abs(overlap_analytic(a, b).value -
                   overlap_quadrature(a, b, rule512()).value) < 1e-10);
  }
  // zero pairs fine with either sign
  {
    const CoherentLabel a{0, Angle{0.0}, FluxParameter{}};
    const CoherentLabel b{0, Angle{-1.3}, FluxParameter{}};
    CHECK(std::abs(overlap_analytic(a, b).value -
                   overlap_quadrature(a, b, rule512()).value) < 1e-10);
  }
}

TEST_CASE("error paths") {
  const CoherentLabel a{0, Angle{0.5}, FluxParameter{0.2}};
  const CoherentLabel b{1, Angle{1.0}, FluxParameter{0.3}};
  CHECK_THROWS_AS(overlap_analytic(a, b), invalid_pair_error);
  CHECK_THROWS_AS(overlap_quadrature(a, b, rule512()), invalid_pair_error);

  // mixed signs are irreducible
  const CoherentLabel c{0, Angle{-0.5}, FluxParameter{0.2}};
  CHECK_THROWS_AS(overlap_analytic(c, a), unsupported_range_error);
  // alpha = -pi cannot be reflected into [0, pi)
  const CoherentLabel d{0, Angle{-kPi}, FluxParameter{0.2}};
  const CoherentLabel e{0, Angle{-0.4}, FluxParameter{0.2}};
  CHECK_THROWS_AS(overlap_analytic(d, e), unsupported_range_error);
  // ... and the quadrature fallback covers those pairs
  CHECK(std::abs(overlap_quadrature(d, d, rule512()).value - 1.0) < 1e-10);
}

TEST_CASE("translation covariance of the magnitude") {
  // within 0 <= alpha <= beta < pi the magnitude depends only on
  // (beta - alpha, n - m)
  for (int k : {0, 2, 5}) {
    for (double th : {0.0, 0.45}) {
      const FluxParameter theta{th};
      const double base =
          std::abs(overlap_analytic(CoherentLabel{0, Angle{0.2}, theta},
                                    CoherentLabel{-k, Angle{1.1}, theta})
                       .value);
      for (double shift : {0.3, 0.9, 1.7}) {
        const double moved =
            std::abs(overlap_analytic(
                         CoherentLabel{0, Angle{0.2 + shift}, theta},
                         CoherentLabel{-k, Angle{1.1 + shift}, theta})
                         .value);
        CHECK(std::abs(moved - base) <= 1e-10);
      }
    }
  }
}

TEST_CASE("flux dependence of the magnitude") {
  // on the diagonal the wrap segment vanishes and |overlap| is flux-free
  for (double th : {0.25, 0.5, 0.8}) {
    const double v0 =
        std::abs(overlap_analytic(CoherentLabel{0, Angle{0.9}, FluxParameter{}},
                                  CoherentLabel{-3, Angle{0.9}, FluxParameter{}})
                     .value);
    const double vt = std::abs(
        overlap_analytic(CoherentLabel{0, Angle{0.9}, FluxParameter{th}},
                         CoherentLabel{-3, Angle{0.9}, FluxParameter{th}})
            .value);
    CHECK(std::abs(v0 - vt) <= 1e-10);
  }
  // off the diagonal the wrap segment interferes with the principal one
  // through the holonomy e^{2 pi i theta}, so the magnitude genuinely moves;
  // the quadrature oracle fixes the exact amount.
  const CoherentLabel a0{0, Angle{0.0}, FluxParameter{}};
  const CoherentLabel b0{0, Angle{0.8}, FluxParameter{}};
  const CoherentLabel a5{0, Angle{0.0}, FluxParameter{0.5}};
  const CoherentLabel b5{0, Angle{0.8}, FluxParameter{0.5}};
  const double m0 = std::abs(overlap_quadrature(a0, b0, rule512()).value);
  const double m5 = std::abs(overlap_quadrature(a5, b5, rule512()).value);
  CHECK(std::abs(m0 - std::abs(overlap_analytic(a0, b0).value)) < 1e-10);
  CHECK(std::abs(m5 - std::abs(overlap_analytic(a5, b5).value)) < 1e-10);
  // at theta = 1/2 the holonomy flips the wrap segment's sign: the two
  // magnitudes differ by an amount set by that segment, far above noise
  const double predicted_gap =
      std::abs(std::abs(overlap_analytic(a0, b0).value) -
               std::abs((normalization_constant(FluxParameter{}) *
                         normalization_constant(FluxParameter{})) *
                        (-detail::overlap_segment_wrap(0.0, 0.8, 0) +
                         detail::overlap_segment_main(0.0, 0.8, 0))));
  CHECK(std::abs((m0 - m5) - predicted_gap) < 1e-10);
  CHECK(m0 - m5 > 1e-4);
}

TEST_CASE("cauchy-schwarz bound") {
  for (double th : {0.0, 0.3}) {
    for (double al : {0.0, 0.6, 2.1}) {
      for (double be : {0.0, 1.4, 3.0}) {
        for (int k : {0, 1, 4}) {
          const CoherentLabel a{0, Angle{al}, FluxParameter{th}};
          const CoherentLabel b{-k, Angle{be}, FluxParameter{th}};
          CHECK(std::abs(overlap_analytic(a, b).value) <= 1.0 + 1e-10);
        }
      }
    }
  }
}

TEST_CASE("stored segments satisfy the assembly invariant") {
  const CoherentLabel a{1, Angle{0.4}, FluxParameter{0.35}};
  const CoherentLabel b{-2, Angle{2.1}, FluxParameter{0.35}};
  const OverlapResult r = overlap_analytic(a, b);
  const double ath = normalization_constant(a.theta);
  CHECK(r.value == (ath * ath) * (r.i1 + r.i2));
  CHECK(r.method == OverlapMethod::analytic);
  const OverlapResult q = overlap_quadrature(a, b, rule512());
  CHECK(q.method == OverlapMethod::quadrature);
  CHECK(q.i1 == Complex{0.0, 0.0});
  CHECK(q.i2 == Complex{0.0, 0.0});
}

TEST_CASE("grid reproduction of the figure data") {
  std::vector<Angle> alphas, betas;
  for (int i = 0; i < 13; ++i) alphas.push_back(Angle{i * kPi / 13.0});
  betas = alphas;
  for (int mn : {0, 1, 4}) {
    const auto cells = overlap_grid(mn, alphas, betas, FluxParameter{});
    REQUIRE(cells.size() == 169);
    double min_abs = 1.0;
    for (const auto& c : cells) {
      CHECK(c.abs > 0.0);  // the overlap never vanishes
      min_abs = std::min(min_abs, c.abs);
      if (mn == 0 && c.alpha == c.beta) CHECK(std::abs(c.abs - 1.0) < 1e-10);
    }
    INFO("m-n = " << mn << ": min |overlap| = " << min_abs);
    CHECK(min_abs > 0.0);
  }
  // spot cell against the oracle
  const auto cells = overlap_grid(1, {Angle{0.5}}, {Angle{1.5}}, FluxParameter{});
  const Complex oracle_val =
      overlap_quadrature(CoherentLabel{0, Angle{0.5}, FluxParameter{}},
                         CoherentLabel{-1, Angle{1.5}, FluxParameter{}},
                         rule512())
          .value;
  CHECK(std::abs(cells[0].value - oracle_val) <= 1e-9);
}

TEST_CASE("large momentum differences stay representable") {
  // the two bracket routes agree around the switchover
  for (int k : {16, 18, 20, 22, 26}) {
    for (double x : {0.0, 0.4, 1.3, kPi - 0.2}) {
      const Complex direct =
          std::exp(-0.25 * k * k) * detail::erf_bracket(x, k);
      const double y = 0.5 * k;
      const Complex w = circlecs::faddeeva_w(Complex{-y, x});
      const Complex scaled{
          2.0 * (std::exp(-y * y) -
                 std::exp(-x * x) *
                     (Complex{std::cos(-2.0 * x * y), std::sin(-2.0 * x * y)} * w)
                         .real()),
          0.0};
      CHECK(std::abs(direct - scaled) <=
            1e-13 * std::max(1e-30, std::abs(scaled)) + 1e-300);
    }
  }

  // far past the Gaussian bulk the overlap decays only algebraically in
  // n - m (the seam again); the closed form must track quadrature there
  for (int k : {20, 40, 60}) {
    const CoherentLabel a{0, Angle{0.3}, FluxParameter{}};
    const CoherentLabel b{-k, Angle{1.1}, FluxParameter{}};
    const Complex va = overlap_analytic(a, b).value;
    const auto rule = QuadratureRule::gauss_legendre(1024);
    const Complex vq = overlap_quadrature(a, b, rule).value;
    INFO("k = " << k << ": analytic = " << va << ", quadrature = " << vq);
    CHECK(std::abs(va) > 0.0);
    CHECK(std::abs(va - vq) <= 1e-12);
  }
}

TEST_CASE("relative phase of displaced same-center states") {
  // <m,gamma|n,gamma> = e^{i(n-m)gamma} * positive
  const double gamma = 0.8;
  const CoherentLabel a{1, Angle{gamma}, FluxParameter{}};
  const CoherentLabel b{4, Angle{gamma}, FluxParameter{}};
  const Complex v = overlap_analytic(a, b).value;
  const Complex dephased = v * cis(-(4 - 1) * gamma);
  CHECK(std::abs(dephased.imag()) < 1e-13);
  CHECK(dephased.real() > 0.0);
}
