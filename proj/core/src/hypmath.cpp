#include "hyperpack/hypmath.hpp"

#include <array>
#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "hyperpack/error.hpp"

namespace hyperpack {

namespace {

constexpr int kClausenTerms = 48;

// ζ(2k) / (k (2k+1)) for k = 1..kClausenTerms.
const std::array<double, kClausenTerms>& clausen_coefficients() {
  static const auto table = [] {
    std::array<double, kClausenTerms> c{};
    for (int k = 1; k <= kClausenTerms; ++k) {
      const double zeta = std::riemann_zeta(2.0 * k);
      c[k - 1] = zeta / (k * (2.0 * k + 1.0));
    }
    return c;
  }();
  return table;
}

// Cl₂(θ) for θ in (0, π].
double clausen2_reduced(double theta) {
  const auto& coeff = clausen_coefficients();
  const double r = theta / (2.0 * kPi);
  const double r2 = r * r;
  double sum = theta - theta * std::log(theta);
  double power = theta * r2;
  for (int k = 0; k < kClausenTerms; ++k) {
    const double term = coeff[k] * power;
    sum += term;
    // Later terms shrink by at least r² ≤ 1/4 (ζ is decreasing), so the tail
    // is below term * r² / (1 - r²) ≤ term / 3.
    if (term < 1e-17) break;
    power *= r2;
  }
  return sum;
}

// Integrand log|2 sin t|; the oracle negates the integral.
double log_two_sine(double t) { return std::log(std::abs(2.0 * std::sin(t))); }

constexpr double kSplit = 0.5;          // width of the substituted end pieces
constexpr double kLogLowerLimit = -60;  // e^s |log 2e^s| < 1e-24 below this
constexpr double kOracleTolerance = 1e-10;

struct Piece {
  double value = 0.0;
  double error = 0.0;
};

template <class F>
Piece integrate(F f, double a, double b) {
  Piece p;
  if (b <= a) return p;
  p.value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      f, a, b, 20, 1e-14, &p.error);
  return p;
}

}  // namespace

Angle::Angle(double radians) : radians_(radians) {
  if (!std::isfinite(radians)) {
    throw Error(ErrorKind::DomainError, "angle must be finite");
  }
}

double lobachevsky(Angle angle) {
  double x = std::fmod(angle.radians(), kPi);
  if (x > kPi / 2) x -= kPi;
  if (x < -kPi / 2) x += kPi;
  const bool negative = x < 0;
  if (negative) x = -x;
  if (x == 0.0) return 0.0;
  const double value = 0.5 * clausen2_reduced(2.0 * x);
  return negative ? -value : value;
}

double lobachevsky_quadrature_oracle(Angle angle) {
  const double signed_x = angle.radians();
  const double x = std::abs(signed_x);
  if (x > kPi) {
    throw Error(ErrorKind::DomainError,
                "quadrature oracle requires |x| <= pi, got " + std::to_string(signed_x));
  }
  if (x == 0.0) return 0.0;

  // ∫₀^δ log(2 sin t) dt with t = e^s.
  const double head_end = std::min(x, kSplit);
  const Piece head = integrate(
      [](double s) {
        const double t = std::exp(s);
        return log_two_sine(t) * t;
      },
      kLogLowerLimit, std::log(head_end));

  // Regular middle section.
  const double tail_start = kPi - kSplit;
  const Piece middle = integrate(log_two_sine, head_end, std::min(x, tail_start));

  // ∫_{π-δ}^{x} log(2 sin t) dt with t = π - e^s.
  Piece tail;
  if (x > tail_start) {
    const double lower = x >= kPi ? kLogLowerLimit : std::log(kPi - x);
    tail = integrate(
        [](double s) {
          const double e = std::exp(s);
          return log_two_sine(e) * e;
        },
        lower, std::log(kSplit));
  }

  const double error = head.error + middle.error + tail.error;
  if (!(error <= kOracleTolerance)) {
    throw Error(ErrorKind::ToleranceNotMet,
                "Lobachevsky quadrature error estimate " + std::to_string(error) +
                    " exceeds tolerance");
  }
  const double value = -(head.value + middle.value + tail.value);
  return signed_x < 0 ? -value : value;
}

double arcosh(double x) {
  if (!(x >= 1.0)) {
    throw Error(ErrorKind::DomainError,
                "arcosh argument " + std::to_string(x) + " is below 1");
  }
  return std::acosh(x);
}

}  // namespace hyperpack
