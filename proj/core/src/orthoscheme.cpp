#include "hyperpack/orthoscheme.hpp"

#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>

#include "hyperpack/error.hpp"
#include "hyperpack/hypmath.hpp"

namespace hyperpack {

namespace {

constexpr double kGuardBand = 1e-12;
constexpr double kCoshClamp = 1e-9;
constexpr double kCrossCheck = 1e-10;

std::string describe(const SchlafliParams& p) {
  std::ostringstream os;
  os << '{' << p.u << ',' << p.v << ',' << p.w << '}';
  return os.str();
}

struct Trig {
  double cu, cv, cw;  // cos(π/u), ...
  double su, sv, sw;  // sin²(π/u), ...
};

Trig trig(const SchlafliParams& p) {
  const double au = kPi / p.u, av = kPi / p.v, aw = kPi / p.w;
  const double su = std::sin(au), sv = std::sin(av), sw = std::sin(aw);
  return {std::cos(au), std::cos(av), std::cos(aw), su * su, sv * sv, sw * sw};
}

double determinant(const Trig& t) { return t.su * t.sw - t.cv * t.cv; }

// 1/x + 1/y < 1/2 for positive integers, i.e. 2(x + y) < xy.
bool exact_outer(std::int64_t x, std::int64_t y) { return 2 * (x + y) < x * y; }

[[noreturn]] void fail(Validity validity, const SchlafliParams& p) {
  switch (validity) {
    case Validity::NotHyperbolic:
      throw Error(ErrorKind::NotHyperbolic,
                  describe(p) + " is not hyperbolic (det b >= 0)");
    case Validity::NotDoublyTruncatedA0:
      throw Error(ErrorKind::NotDoublyTruncated,
                  describe(p) + ": vertex A0 is not outer (needs 1/v + 1/w < 1/2)");
    case Validity::NotDoublyTruncatedA3:
      throw Error(ErrorKind::NotDoublyTruncated,
                  describe(p) + ": vertex A3 is not outer (needs 1/u + 1/v < 1/2)");
    case Validity::Ambiguous:
      throw Error(ErrorKind::AmbiguousClassification,
                  describe(p) + " lies within 1e-12 of a classification boundary");
    case Validity::DoublyTruncated:
      break;
  }
  throw Error(ErrorKind::InternalInconsistency, "unexpected validity state");
}

}  // namespace

SchlafliParams SchlafliParams::make(double u, double v, double w) {
  for (double x : {u, v, w}) {
    if (!std::isfinite(x) || x < 3.0) {
      throw Error(ErrorKind::DomainError,
                  "Schlafli parameters must be finite and >= 3, got " +
                      describe({u, v, w}));
    }
  }
  return {u, v, w};
}

bool SchlafliParams::integral() const noexcept {
  for (double x : {u, v, w}) {
    if (!(x < 1e9) || std::floor(x) != x) return false;
  }
  return true;
}

Validity classify(const SchlafliParams& p) {
  const Trig t = trig(p);
  const double det = determinant(t);
  if (p.integral()) {
    if (det >= -kGuardBand) return Validity::NotHyperbolic;
    const auto u = static_cast<std::int64_t>(p.u);
    const auto v = static_cast<std::int64_t>(p.v);
    const auto w = static_cast<std::int64_t>(p.w);
    if (!exact_outer(v, w)) return Validity::NotDoublyTruncatedA0;
    if (!exact_outer(u, v)) return Validity::NotDoublyTruncatedA3;
    return Validity::DoublyTruncated;
  }
  if (std::abs(det) <= kGuardBand) return Validity::Ambiguous;
  if (det > 0) return Validity::NotHyperbolic;
  const double a00 = (t.sw - t.cv * t.cv) / det;
  const double a33 = (t.su - t.cv * t.cv) / det;
  if (std::abs(a00) <= kGuardBand || std::abs(a33) <= kGuardBand) {
    return Validity::Ambiguous;
  }
  if (a00 < 0) return Validity::NotDoublyTruncatedA0;
  if (a33 < 0) return Validity::NotDoublyTruncatedA3;
  return Validity::DoublyTruncated;
}

GramData build_gram(const SchlafliParams& params) {
  const Validity validity = classify(params);
  if (validity != Validity::DoublyTruncated) fail(validity, params);

  const Trig t = trig(params);
  const double det = determinant(t);
  const double cv2 = t.cv * t.cv;

  GramData g;
  g.params = params;
  g.det = det;
  g.b = {{{1, -t.cu, 0, 0},
          {-t.cu, 1, -t.cv, 0},
          {0, -t.cv, 1, -t.cw},
          {0, 0, -t.cw, 1}}};

  const double inv = 1.0 / det;
  auto& a = g.a;
  a[0][0] = (t.sw - cv2) * inv;
  a[0][1] = t.cu * t.sw * inv;
  a[0][2] = t.cu * t.cv * inv;
  a[0][3] = (t.cu * t.cw) * t.cv * inv;
  a[1][1] = t.sw * inv;
  a[1][2] = t.cv * inv;
  a[1][3] = t.cw * t.cv * inv;
  a[2][2] = t.su * inv;
  a[2][3] = t.cw * t.su * inv;
  a[3][3] = (t.su - cv2) * inv;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < i; ++j) a[i][j] = a[j][i];
  }
  return g;
}

FormPoint FormPoint::basis(int i) {
  FormPoint p;
  p.coeffs.at(static_cast<std::size_t>(i)) = 1.0;
  return p;
}

FormPoint operator+(const FormPoint& x, const FormPoint& y) {
  FormPoint r;
  for (std::size_t i = 0; i < 4; ++i) r.coeffs[i] = x.coeffs[i] + y.coeffs[i];
  return r;
}

double inner(const FormPoint& x, const FormPoint& y, const GramData& g) {
  double s = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) s += x.coeffs[i] * y.coeffs[j] * g.a[i][j];
  }
  return s;
}

TruncationPoints truncation_points(const GramData& g) {
  const auto& a = g.a;
  if (!(a[0][0] > 0) || !(a[3][3] > 0)) {
    throw Error(ErrorKind::NotDoublyTruncated,
                "truncation points need both principal vertices outer");
  }
  // x = a_i - (a_{ki}/a_{kk}) a_k projects a_i onto the polar plane of A_k.
  auto on_polar = [&](int k, int i) {
    FormPoint p = FormPoint::basis(i);
    p.coeffs[static_cast<std::size_t>(k)] = -a[k][i] / a[k][k];
    return p;
  };
  TruncationPoints pts;
  pts.c = on_polar(0, 1);
  pts.l = on_polar(0, 2);
  pts.h = on_polar(0, 3);
  pts.j = on_polar(3, 0);
  pts.e = on_polar(3, 1);
  pts.q = on_polar(3, 2);
  return pts;
}

double point_distance(const FormPoint& x, const FormPoint& y, const GramData& g) {
  const double xx = inner(x, x, g);
  const double yy = inner(y, y, g);
  if (!(xx < 0) || !(yy < 0)) {
    throw Error(ErrorKind::DomainError, "distance requires proper points (<x,x> < 0)");
  }
  double c = -inner(x, y, g) / std::sqrt(xx * yy);
  if (!(c >= 1.0 - kCoshClamp)) {
    throw Error(ErrorKind::DomainError,
                "cosh of the distance is " + std::to_string(c) + ", below 1");
  }
  if (c < 1.0) c = 1.0;
  return std::acosh(c);
}

KeyDistances key_distances(const GramData& g) {
  const auto& a = g.a;
  if (!(a[0][0] > 0) || !(a[3][3] > 0)) {
    throw Error(ErrorKind::NotDoublyTruncated,
                "key distances need both principal vertices outer");
  }
  KeyDistances d;
  d.dA1C = arcosh(1.0 / std::sqrt(a[0][0]));
  d.dA2Q = arcosh(1.0 / std::sqrt(a[3][3]));
  d.dJH = arcosh(-a[0][3] / std::sqrt(a[0][0] * a[3][3]));
  d.half_dJH = d.dJH / 2;

  const TruncationPoints pts = truncation_points(g);
  const double via_points[3] = {
      point_distance(FormPoint::basis(1), pts.c, g),
      point_distance(FormPoint::basis(2), pts.q, g),
      point_distance(pts.j, pts.h, g),
  };
  const double closed[3] = {d.dA1C, d.dA2Q, d.dJH};
  for (int i = 0; i < 3; ++i) {
    if (!(std::abs(via_points[i] - closed[i]) <= kCrossCheck)) {
      throw Error(ErrorKind::InternalInconsistency,
                  "key distance cross-check failed for " + describe(g.params));
    }
  }
  return d;
}

TruncationAreas truncation_areas(const SchlafliParams& p) {
  TruncationAreas areas{kPi / 2 - kPi / p.v - kPi / p.w,
                        kPi / 2 - kPi / p.v - kPi / p.u};
  if (!(areas.area0 > 0)) fail(Validity::NotDoublyTruncatedA0, p);
  if (!(areas.area3 > 0)) fail(Validity::NotDoublyTruncatedA3, p);
  return areas;
}

SymmetryWitness symmetry_witness(const GramData& g) {
  if (!(std::abs(g.params.u - g.params.w) <= kGuardBand)) {
    throw Error(ErrorKind::SymmetryUnavailable,
                describe(g.params) + " has no half-turn symmetry (u != w)");
  }
  return {FormPoint::basis(0) + FormPoint::basis(3),
          FormPoint::basis(1) + FormPoint::basis(2)};
}

}  // namespace hyperpack
