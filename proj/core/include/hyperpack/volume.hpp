#pragma once

#include "hyperpack/hypmath.hpp"
#include "hyperpack/orthoscheme.hpp"

namespace hyperpack {

struct OrthoschemeVolume {
  double value = 0;
  Angle theta{0.0};  // auxiliary angle in [0, π/2)
};

/// Kellerhals' closed form for the volume of the complete orthoscheme with
/// essential angles π/u, π/v, π/w:
///
///   4 Vol = Л(α₀₁+θ) - Л(α₀₁-θ) + Л(π/2+α₁₂-θ) + Л(π/2-α₁₂-θ)
///         + Л(α₂₃+θ) - Л(α₂₃-θ) + 2Л(π/2-θ),
///
///   tan θ = √(cos²α₁₂ - sin²α₀₁ sin²α₂₃) / (cos α₀₁ cos α₂₃).
///
/// The radicand equals -det b; values down to -1e-12 are clamped to zero,
/// anything below throws NotHyperbolic.
OrthoschemeVolume orthoscheme_volume(const SchlafliParams& params);

/// Bolyai: volume of the half hyperball of height h over a base polygon of
/// the given area, ¼·area·(sinh 2h + 2h). Throws DomainError for negative
/// or non-finite input.
double hyperball_piece_volume(double area, double h);

}  // namespace hyperpack
