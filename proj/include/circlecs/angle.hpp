#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace circlecs {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Wraps a real angle into the canonical interval [-pi, pi).
/// A tie at +pi maps to -pi.
inline double wrap_angle(double x) {
  double y = std::remainder(x, kTwoPi);  // lands in [-pi, pi]
  if (y == kPi) y = -kPi;
  return y;
}

/// Angle on the circle, always stored canonically in [-pi, pi).
class Angle {
 public:
  Angle() : rad_(0.0) {}
  explicit Angle(double radians) : rad_(wrap_angle(radians)) {}
  double radians() const { return rad_; }

  friend bool operator==(Angle a, Angle b) { return a.rad_ == b.rad_; }

 private:
  double rad_;
};

/// Flux parameter of an inequivalent quantization, theta in [0, 1).
class FluxParameter {
 public:
  FluxParameter() : theta_(0.0) {}
  explicit FluxParameter(double theta) : theta_(theta) {
    if (!(theta >= 0.0 && theta < 1.0))
      throw std::domain_error("FluxParameter: theta must lie in [0, 1)");
  }
  double value() const { return theta_; }
  bool is_zero() const { return theta_ == 0.0; }

  friend bool operator==(FluxParameter a, FluxParameter b) {
    return a.theta_ == b.theta_;
  }

 private:
  double theta_;
};

/// Label (m, alpha, theta) of a coherent state.
struct CoherentLabel {
  int m = 0;
  Angle alpha{};
  FluxParameter theta{};
};

/// Reduces a magnetic flux to the quantization parameter: theta = q*Phi/(2*pi*hbar) mod 1.
inline FluxParameter flux_to_theta(double charge, double flux, double hbar) {
  if (!(hbar > 0.0)) throw std::domain_error("flux_to_theta: hbar must be positive");
  double t = (charge * flux) / (kTwoPi * hbar);
  t -= std::floor(t);
  if (t >= 1.0) t = 0.0;  // guards the floor rounding up at huge magnitudes
  return FluxParameter(t);
}

}  // namespace circlecs
