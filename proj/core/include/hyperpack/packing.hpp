#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperpack/orthoscheme.hpp"
#include "hyperpack/volume.hpp"

namespace hyperpack {

/// Everything about one doubly truncated orthoscheme that the density
/// functionals need, computed once.
struct OrthoschemeData {
  SchlafliParams params;
  GramData gram;
  KeyDistances distances;
  TruncationAreas areas;
  OrthoschemeVolume volume;
};

/// Throws the classification errors of build_gram() for invalid params.
OrthoschemeData analyze(const SchlafliParams& params);

/// Maximal congruent heights: h = min(d(J,H)/2, d(Q,A₂), d(C,A₁)) for two
/// balls, h0 = min(d(J,H), d(C,A₁)) and h3 = min(d(J,H), d(Q,A₂)) for a
/// single ball on the respective base plane.
struct HeightProfile {
  double h = 0;
  double h0 = 0;
  double h3 = 0;
  double dA1C = 0;
  double dA2Q = 0;
  double dJH = 0;
};

HeightProfile height_profile(const OrthoschemeData& od);
HeightProfile height_profile(const SchlafliParams& params);

enum class DensityMode { TwoCongruent, OneHyperball, NonCongruent };

/// Blow-up families starting from the congruent configuration. In the
/// canonical frame (u <= w, so d(C,A₁) <= d(Q,A₂)):
///   1a/1b  h = d(J,H)/2 <= d(C,A₁); grow base 0 (1a) or base 3 (1b) by x
///          while the other ball shrinks by x and stays tangent.
///   2a     h = d(C,A₁); base 3 grows by x, base 0 fixed.
///   2b     continues 2a after the balls touch: h3 = d(J,H) - h + x, h0 = h - x.
/// Corner labels the optimum (d(C,A₁), d(Q,A₂)) of the boundary route.
enum class CaseLabel { Case1a, Case1b, Case2a, Case2b, Corner };

std::string_view to_string(DensityMode mode) noexcept;
std::string_view to_string(CaseLabel label) noexcept;

/// Two hyperball heights over the truncation triangles CLH (h0) and JEQ (h3).
struct NonCongruentConfig {
  double h0 = 0;
  double h3 = 0;
  double x = 0;
  CaseLabel case_label = CaseLabel::Case1a;
};

/// Returns a description of the violated constraint, or nullopt when
/// 0 <= h0 <= d(C,A₁), 0 <= h3 <= d(Q,A₂) and h0 + h3 <= d(J,H) hold
/// (each bound relaxed by slack).
std::optional<std::string> infeasibility(double h0, double h3, const KeyDistances& d,
                                         double slack = 0.0);

/// One blow-up family: heights are affine in x on [x_lo, x_hi].
struct CaseFamily {
  CaseLabel label = CaseLabel::Case1a;
  double x_lo = 0;
  double x_hi = 0;
  double h0_at_zero = 0, h0_slope = 0;
  double h3_at_zero = 0, h3_slope = 0;
  KeyDistances limits;

  bool contains(double x) const noexcept { return x >= x_lo && x <= x_hi; }
  /// Heights at x, rounded inward so the result is exactly feasible.
  NonCongruentConfig at(double x) const;
};

/// Applicable blow-up families, in the order 1a, 1b or 2a, 2b. For u > w the
/// families of (w,v,u) are returned with the roles of the two bases swapped.
std::vector<CaseFamily> noncongruent_cases(const SchlafliParams& params);
std::vector<CaseFamily> noncongruent_cases(const OrthoschemeData& od);

enum class Boundary { Corner, Segment };

struct DensityResult {
  DensityMode mode = DensityMode::TwoCongruent;
  SchlafliParams params;
  HeightProfile heights;
  std::optional<NonCongruentConfig> config;  // set for NonCongruent
  std::array<double, 2> piece_volumes{};     // over CLH (base 0) and JEQ (base 3)
  double orthoscheme_volume = 0;
  double density = 0;
  int base = -1;                      // OneHyperball: winning base, 0 or 3
  std::optional<Boundary> boundary;   // optimize_noncongruent only
  bool roles_swapped = false;         // computed in the (w,v,u) frame

  double piece_volume_sum() const noexcept { return piece_volumes[0] + piece_volumes[1]; }
};

/// δ¹: two congruent hyperballs of height h.
DensityResult density_two_congruent(const OrthoschemeData& od);
DensityResult density_two_congruent(const SchlafliParams& params);

/// δ²: the better single hyperball, base 0 at height h0 or base 3 at h3.
DensityResult density_one_hyperball(const OrthoschemeData& od);
DensityResult density_one_hyperball(const SchlafliParams& params);

/// δʲₓ for explicit heights. Throws FeasibilityError naming the violated
/// constraint; slack relaxes the feasibility bounds for rounded input.
DensityResult density_noncongruent(const OrthoschemeData& od, const NonCongruentConfig& cfg,
                                   double slack = 0.0);
DensityResult density_noncongruent(const SchlafliParams& params,
                                   const NonCongruentConfig& cfg, double slack = 0.0);

inline constexpr double kDefaultTolerance = 1e-10;

/// Maximum of the non-congruent density over the feasible height region,
/// computed twice: by 1-D maximization along each blow-up family, and
/// directly on the Pareto boundary of {h0 <= d(C,A₁), h3 <= d(Q,A₂),
/// h0 + h3 <= d(J,H)}. The routes must agree to 1e-9 in density, otherwise
/// InternalInconsistency is thrown. The reported configuration comes from the
/// case walk; the boundary field tells which part of the boundary won.
DensityResult optimize_noncongruent(const OrthoschemeData& od, double tol = kDefaultTolerance);
DensityResult optimize_noncongruent(const SchlafliParams& params,
                                    double tol = kDefaultTolerance);

/// Density along one blow-up family on a uniform grid (samples >= 2).
std::vector<std::pair<double, double>> density_along_case(const OrthoschemeData& od,
                                                          const CaseFamily& family,
                                                          int samples);

// ---------------------------------------------------------------------------
// Scans

struct IntRange {
  int lo = 3;
  int hi = 50;
};

struct ScanOptions {
  DensityMode mode = DensityMode::TwoCongruent;
  IntRange u, v, w;
  unsigned threads = 0;  // 0: hardware concurrency
  double tol = kDefaultTolerance;
};

/// Evaluates the chosen density for every valid triple with u <= w in the
/// ranges (invalid triples are skipped) and returns all results sorted by
/// density, descending, ties by (u,v,w). The order does not depend on the
/// thread count. NonCongruent mode uses optimize_noncongruent(). Throws
/// EmptyScan when no triple is valid.
std::vector<DensityResult> scan_integer(const ScanOptions& options);

struct RealScanResult {
  double p_opt = 0;
  double density = 0;
};

/// δ¹ of the {p,3,p} orthoscheme.
double two_congruent_density_p3p(double p);

/// Maximizes δ¹(O(p,3,p)) over [p_lo, p_hi] with 6 < p_lo < p_hi <= 7.
/// A 200-point pre-grid must show a single local maximum (NotUnimodal
/// otherwise); golden-section then refines the bracket to |Δp| <= tol.
RealScanResult scan_real_p(double p_lo, double p_hi, double tol = 1e-8);

/// δ¹(O(p,3,p)) on a uniform grid of [p_lo, p_hi] (samples >= 2).
std::vector<std::pair<double, double>> density_profile_p(double p_lo, double p_hi,
                                                         int samples);

}  // namespace hyperpack
