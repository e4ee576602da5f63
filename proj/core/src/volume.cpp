#include "hyperpack/volume.hpp"

#include <cmath>
#include <string>

#include "hyperpack/error.hpp"

namespace hyperpack {

OrthoschemeVolume orthoscheme_volume(const SchlafliParams& params) {
  const double a01 = kPi / params.u;
  const double a12 = kPi / params.v;
  const double a23 = kPi / params.w;

  const double c12 = std::cos(a12);
  const double s01 = std::sin(a01);
  const double s23 = std::sin(a23);
  double radicand = c12 * c12 - s01 * s01 * s23 * s23;
  if (radicand < -1e-12) {
    throw Error(ErrorKind::NotHyperbolic,
                "volume radicand " + std::to_string(radicand) + " is negative");
  }
  if (radicand < 0) radicand = 0;

  const double theta = std::atan(std::sqrt(radicand) / (std::cos(a01) * std::cos(a23)));
  const auto L = [](double x) { return lobachevsky(Angle(x)); };
  const double half_pi = kPi / 2;
  const double sum = L(a01 + theta) - L(a01 - theta) + L(half_pi + a12 - theta) +
                     L(half_pi - a12 - theta) + L(a23 + theta) - L(a23 - theta) +
                     2 * L(half_pi - theta);
  return {sum / 4, Angle(theta)};
}

double hyperball_piece_volume(double area, double h) {
  if (!(area >= 0) || !(h >= 0) || !std::isfinite(area) || !std::isfinite(h)) {
    throw Error(ErrorKind::DomainError, "hyperball piece needs area >= 0 and h >= 0");
  }
  return 0.25 * area * (std::sinh(2 * h) + 2 * h);
}

}  // namespace hyperpack
