#pragma once

#include <array>

namespace hyperpack {

using Mat4 = std::array<std::array<double, 4>, 4>;
using Vec4 = std::array<double, 4>;

/// Dihedral-angle denominators of the orthoscheme: α₀₁ = π/u, α₁₂ = π/v,
/// α₂₃ = π/w. Values are real and at least 3; integer triples describe
/// Coxeter tilings.
struct SchlafliParams {
  double u = 0;
  double v = 0;
  double w = 0;

  /// Throws Error(DomainError) unless all three are finite and >= 3.
  static SchlafliParams make(double u, double v, double w);

  bool integral() const noexcept;
  /// (w, v, u): the same orthoscheme with the roles of A₀ and A₃ exchanged.
  SchlafliParams swapped() const noexcept { return {w, v, u}; }

  friend bool operator==(const SchlafliParams&, const SchlafliParams&) = default;
};

enum class Validity {
  DoublyTruncated,
  NotHyperbolic,
  NotDoublyTruncatedA0,
  NotDoublyTruncatedA3,
  Ambiguous,
};

/// Classifies the parameters without throwing. Integer triples use exact
/// rational tests for the truncation conditions; real triples within 1e-12
/// of a boundary come back Ambiguous.
Validity classify(const SchlafliParams& params);

/// Coxeter-Schläfli matrix b, its inverse a and det b. Only constructed for
/// doubly truncated hyperbolic parameters.
struct GramData {
  SchlafliParams params;
  Mat4 b{};
  Mat4 a{};
  double det = 0;  // B = sin²(π/u) sin²(π/w) - cos²(π/v) < 0
};

/// Builds b from the cosines of the dihedral angles and a from its closed
/// form inverse. Throws NotHyperbolic, NotDoublyTruncated (naming the outer
/// vertex that fails) or AmbiguousClassification.
GramData build_gram(const SchlafliParams& params);

/// A point of the projective model given by its coefficients over the dual
/// basis a₀..a₃, where ⟨aᵢ, aⱼ⟩ = a_{ij}.
struct FormPoint {
  Vec4 coeffs{};

  static FormPoint basis(int i);
  friend FormPoint operator+(const FormPoint& x, const FormPoint& y);
};

double inner(const FormPoint& x, const FormPoint& y, const GramData& g);

/// Intersections of the two truncating polar planes with the orthoscheme
/// edges. c, l, h lie on the polar plane of A₀ (edges A₀A₁, A₀A₂, A₀A₃);
/// j, e, q on the polar plane of A₃ (edges A₃A₀, A₃A₁, A₃A₂).
struct TruncationPoints {
  FormPoint c, l, h;
  FormPoint j, e, q;
};

TruncationPoints truncation_points(const GramData& g);

/// Hyperbolic distance of two proper points: cosh s = -⟨x,y⟩/√(⟨x,x⟩⟨y,y⟩).
/// Arguments of the cosh within 1e-9 below 1 are clamped to 1.
double point_distance(const FormPoint& x, const FormPoint& y, const GramData& g);

/// Edge pieces that bound the hyperball heights (curvature unit k = 1).
struct KeyDistances {
  double dA1C = 0;  // d(A₁, C) = arcosh(1/√a₀₀)
  double dA2Q = 0;  // d(A₂, Q) = arcosh(1/√a₃₃)
  double dJH = 0;   // d(J, H) = arcosh(-a₀₃/√(a₀₀a₃₃)), distance of the base planes
  double half_dJH = 0;
};

/// Closed-form distances, cross-checked against point_distance() on the
/// truncation points; a disagreement above 1e-10 throws InternalInconsistency.
KeyDistances key_distances(const GramData& g);

/// Areas of the truncation triangles CLH (area0) and JEQ (area3).
struct TruncationAreas {
  double area0 = 0;  // π/2 - π/v - π/w
  double area3 = 0;  // π/2 - π/v - π/u
};

TruncationAreas truncation_areas(const SchlafliParams& params);

/// Points on the half-turn axis F₀₃F₁₂ of a symmetric (u = w) orthoscheme.
struct SymmetryWitness {
  FormPoint f03;  // a₀ + a₃, midpoint of JH
  FormPoint f12;  // a₁ + a₂, midpoint of A₁A₂
};

/// Throws SymmetryUnavailable unless |u - w| <= 1e-12.
SymmetryWitness symmetry_witness(const GramData& g);

}  // namespace hyperpack
