#pragma once

#include <numbers>

namespace hyperpack {

inline constexpr double kPi = std::numbers::pi;

/// An angle in radians. Construction rejects non-finite values.
class Angle {
 public:
  explicit Angle(double radians);

  double radians() const noexcept { return radians_; }

 private:
  double radians_;
};

/// Milnor's Lobachevsky function  Л(x) = -∫₀ˣ log|2 sin t| dt.
///
/// The argument is reduced to [0, π/2] by π-periodicity and oddness and then
/// evaluated through the Clausen series
///   Л(x) = ½ Cl₂(2x),  Cl₂(θ) = θ - θ log θ + Σ_{k≥1} ζ(2k)/(k(2k+1)) θ (θ/2π)^{2k},
/// whose terms shrink at least by a factor 4 per step for θ ≤ π. The sum stops
/// once the geometric tail bound is below 1e-17, so the absolute error is
/// dominated by rounding (well under 1e-13).
double lobachevsky(Angle x);

/// Independent check of lobachevsky(): adaptive Gauss-Kronrod quadrature of
/// the defining integral with the logarithmic endpoint singularities at 0 and
/// π removed by t = e^s (resp. t = π - e^s). Requires |x| ≤ π.
/// Throws Error(DomainError) outside that range and Error(ToleranceNotMet)
/// when the estimated absolute error exceeds 1e-10.
double lobachevsky_quadrature_oracle(Angle x);

/// Nonnegative t with cosh t = x. Throws Error(DomainError) for x < 1.
double arcosh(double x);

}  // namespace hyperpack
