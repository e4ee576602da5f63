#include "hyperpack/packing.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hyperpack/error.hpp"
#include "hyperpack/optimize.hpp"

namespace hyperpack {

namespace {

constexpr double kRouteAgreement = 1e-9;

double bolyai(double area, double h) { return hyperball_piece_volume(area, h); }

DensityResult base_result(const OrthoschemeData& od, DensityMode mode) {
  DensityResult r;
  r.mode = mode;
  r.params = od.params;
  r.heights = height_profile(od);
  r.orthoscheme_volume = od.volume.value;
  return r;
}

void finish(DensityResult& r) { r.density = r.piece_volume_sum() / r.orthoscheme_volume; }

// Moves a height one ulp at a time toward zero until the configuration is
// feasible; only rounding residue is ever removed here.
NonCongruentConfig make_feasible(NonCongruentConfig cfg, const KeyDistances& d,
                                 bool shrink_h0_first) {
  cfg.h0 = std::clamp(cfg.h0, 0.0, d.dA1C);
  cfg.h3 = std::clamp(cfg.h3, 0.0, d.dA2Q);
  if (cfg.h0 + cfg.h3 <= d.dJH) return cfg;
  double& target = shrink_h0_first ? cfg.h0 : cfg.h3;
  double& other = shrink_h0_first ? cfg.h3 : cfg.h0;
  other = std::min(other, d.dJH);
  target = std::max(0.0, d.dJH - other);
  while (cfg.h0 + cfg.h3 > d.dJH) {
    if (target > 0) {
      target = std::max(0.0, std::nextafter(target, 0.0));
    } else {
      other = std::nextafter(other, 0.0);
    }
  }
  return cfg;
}

NonCongruentConfig mirror(NonCongruentConfig cfg) {
  std::swap(cfg.h0, cfg.h3);
  return cfg;
}

KeyDistances mirror(KeyDistances d) {
  std::swap(d.dA1C, d.dA2Q);
  return d;
}

CaseFamily mirror(CaseFamily f) {
  std::swap(f.h0_at_zero, f.h3_at_zero);
  std::swap(f.h0_slope, f.h3_slope);
  f.limits = mirror(f.limits);
  return f;
}

// Families in the canonical frame, d(C,A₁) <= d(Q,A₂).
std::vector<CaseFamily> canonical_cases(const KeyDistances& d) {
  std::vector<CaseFamily> out;
  auto add = [&](CaseLabel label, double x_hi, double h0, double s0, double h3, double s3) {
    CaseFamily f;
    f.label = label;
    f.x_lo = 0;
    f.x_hi = std::max(0.0, x_hi);
    f.h0_at_zero = h0;
    f.h0_slope = s0;
    f.h3_at_zero = h3;
    f.h3_slope = s3;
    f.limits = d;
    out.push_back(f);
  };
  if (d.half_dJH <= d.dA1C) {
    const double h = d.half_dJH;
    add(CaseLabel::Case1a, std::min(d.dA1C - h, h), h, +1, h, -1);
    add(CaseLabel::Case1b, std::min(d.dA2Q - h, h), h, -1, h, +1);
  } else {
    const double h = d.dA1C;
    add(CaseLabel::Case2a, std::min(d.dA2Q - d.dA1C, d.dJH - 2 * h), h, 0, h, +1);
    if (d.dJH - h <= d.dA2Q) {
      add(CaseLabel::Case2b, std::min(d.dA2Q - d.dJH + h, h), h, -1, d.dJH - h, +1);
    }
  }
  return out;
}

double pieces_sum(const OrthoschemeData& od, double h0, double h3) {
  return bolyai(od.areas.area0, h0) + bolyai(od.areas.area3, h3);
}

DensityResult optimize_canonical(const OrthoschemeData& od, double tol) {
  const KeyDistances& d = od.distances;
  const double vol = od.volume.value;

  // Route (i): walk the blow-up families.
  NonCongruentConfig walk_best;
  double walk_density = -1;
  for (const CaseFamily& family : canonical_cases(d)) {
    auto along = [&](double x) {
      const NonCongruentConfig c = family.at(x);
      return pieces_sum(od, c.h0, c.h3) / vol;
    };
    const ScalarMaximum m = bracketed_maximize(along, family.x_lo, family.x_hi, tol);
    if (m.value > walk_density) {
      walk_density = m.value;
      walk_best = family.at(m.x);
    }
  }

  // Route (ii): the density increases in both heights, so the optimum sits
  // on the Pareto boundary of the feasible region.
  double boundary_density = 0;
  Boundary boundary = Boundary::Segment;
  if (d.dA1C + d.dA2Q <= d.dJH) {
    boundary = Boundary::Corner;
    boundary_density = pieces_sum(od, d.dA1C, d.dA2Q) / vol;
  } else {
    const double lo = std::max(0.0, d.dJH - d.dA2Q);
    const double hi = std::min(d.dA1C, d.dJH);
    auto on_segment = [&](double h0) {
      NonCongruentConfig c{h0, d.dJH - h0, 0, CaseLabel::Corner};
      c = make_feasible(c, d, false);
      return pieces_sum(od, c.h0, c.h3) / vol;
    };
    boundary_density = bracketed_maximize(on_segment, lo, hi, tol).value;
  }

  if (!(std::abs(walk_density - boundary_density) <= kRouteAgreement)) {
    std::ostringstream os;
    os << "non-congruent optimum disagrees between case walk (" << walk_density
       << ") and boundary search (" << boundary_density << ") for {" << od.params.u
       << ',' << od.params.v << ',' << od.params.w << '}';
    throw Error(ErrorKind::InternalInconsistency, os.str());
  }

  DensityResult r = base_result(od, DensityMode::NonCongruent);
  r.config = walk_best;
  r.boundary = boundary;
  r.piece_volumes = {bolyai(od.areas.area0, walk_best.h0), bolyai(od.areas.area3, walk_best.h3)};
  finish(r);
  return r;
}

}  // namespace

OrthoschemeData analyze(const SchlafliParams& params) {
  OrthoschemeData od;
  od.params = params;
  od.gram = build_gram(params);
  od.distances = key_distances(od.gram);
  od.areas = truncation_areas(params);
  od.volume = orthoscheme_volume(params);
  return od;
}

HeightProfile height_profile(const OrthoschemeData& od) {
  const KeyDistances& d = od.distances;
  HeightProfile p;
  p.dA1C = d.dA1C;
  p.dA2Q = d.dA2Q;
  p.dJH = d.dJH;
  p.h = std::min({d.half_dJH, d.dA2Q, d.dA1C});
  p.h0 = std::min(d.dJH, d.dA1C);
  p.h3 = std::min(d.dJH, d.dA2Q);
  return p;
}

HeightProfile height_profile(const SchlafliParams& params) { return height_profile(analyze(params)); }

std::string_view to_string(DensityMode mode) noexcept {
  switch (mode) {
    case DensityMode::TwoCongruent: return "two-congruent";
    case DensityMode::OneHyperball: return "one-hyperball";
    case DensityMode::NonCongruent: return "noncongruent";
  }
  return "?";
}

std::string_view to_string(CaseLabel label) noexcept {
  switch (label) {
    case CaseLabel::Case1a: return "1a";
    case CaseLabel::Case1b: return "1b";
    case CaseLabel::Case2a: return "2a";
    case CaseLabel::Case2b: return "2b";
    case CaseLabel::Corner: return "corner";
  }
  return "?";
}

std::optional<std::string> infeasibility(double h0, double h3, const KeyDistances& d,
                                         double slack) {
  if (!std::isfinite(h0) || !std::isfinite(h3)) return "heights must be finite";
  if (h0 < -slack) return "h0 >= 0";
  if (h3 < -slack) return "h3 >= 0";
  if (h0 > d.dA1C + slack) return "h0 <= d(A1,C)";
  if (h3 > d.dA2Q + slack) return "h3 <= d(A2,Q)";
  if (h0 + h3 > d.dJH + slack) return "h0 + h3 <= d(J,H)";
  return std::nullopt;
}

NonCongruentConfig CaseFamily::at(double x) const {
  NonCongruentConfig c;
  c.x = x;
  c.case_label = label;
  c.h0 = h0_at_zero + h0_slope * x;
  c.h3 = h3_at_zero + h3_slope * x;
  // Rounding residue is taken from the ball that is not being blown up
  // (from h3 when h0 stays fixed).
  return make_feasible(c, limits, h0_slope < 0);
}

std::vector<CaseFamily> noncongruent_cases(const OrthoschemeData& od) {
  if (od.params.u > od.params.w) {
    const OrthoschemeData swapped = analyze(od.params.swapped());
    std::vector<CaseFamily> out = canonical_cases(swapped.distances);
    for (CaseFamily& f : out) f = mirror(f);
    return out;
  }
  return canonical_cases(od.distances);
}

std::vector<CaseFamily> noncongruent_cases(const SchlafliParams& params) {
  return noncongruent_cases(analyze(params));
}

DensityResult density_two_congruent(const OrthoschemeData& od) {
  DensityResult r = base_result(od, DensityMode::TwoCongruent);
  const double h = r.heights.h;
  r.piece_volumes = {bolyai(od.areas.area0, h), bolyai(od.areas.area3, h)};
  finish(r);
  return r;
}

DensityResult density_two_congruent(const SchlafliParams& params) {
  return density_two_congruent(analyze(params));
}

DensityResult density_one_hyperball(const OrthoschemeData& od) {
  DensityResult r = base_result(od, DensityMode::OneHyperball);
  const double p0 = bolyai(od.areas.area0, r.heights.h0);
  const double p3 = bolyai(od.areas.area3, r.heights.h3);
  if (p0 >= p3) {
    r.base = 0;
    r.piece_volumes = {p0, 0.0};
  } else {
    r.base = 3;
    r.piece_volumes = {0.0, p3};
  }
  finish(r);
  return r;
}

DensityResult density_one_hyperball(const SchlafliParams& params) {
  return density_one_hyperball(analyze(params));
}

DensityResult density_noncongruent(const OrthoschemeData& od, const NonCongruentConfig& cfg,
                                   double slack) {
  if (auto violated = infeasibility(cfg.h0, cfg.h3, od.distances, slack)) {
    std::ostringstream os;
    os << "infeasible heights (h0=" << cfg.h0 << ", h3=" << cfg.h3 << "): violates "
       << *violated;
    throw Error(ErrorKind::FeasibilityError, os.str());
  }
  DensityResult r = base_result(od, DensityMode::NonCongruent);
  r.config = cfg;
  r.piece_volumes = {bolyai(od.areas.area0, std::max(0.0, cfg.h0)),
                     bolyai(od.areas.area3, std::max(0.0, cfg.h3))};
  finish(r);
  return r;
}

DensityResult density_noncongruent(const SchlafliParams& params, const NonCongruentConfig& cfg,
                                   double slack) {
  return density_noncongruent(analyze(params), cfg, slack);
}

DensityResult optimize_noncongruent(const OrthoschemeData& od, double tol) {
  if (od.params.u > od.params.w) {
    const OrthoschemeData swapped = analyze(od.params.swapped());
    DensityResult r = optimize_canonical(swapped, tol);
    r.params = od.params;
    r.heights = height_profile(od);
    r.config = mirror(*r.config);
    std::swap(r.piece_volumes[0], r.piece_volumes[1]);
    r.orthoscheme_volume = od.volume.value;
    r.roles_swapped = true;
    return r;
  }
  return optimize_canonical(od, tol);
}

DensityResult optimize_noncongruent(const SchlafliParams& params, double tol) {
  return optimize_noncongruent(analyze(params), tol);
}

std::vector<std::pair<double, double>> density_along_case(const OrthoschemeData& od,
                                                          const CaseFamily& family,
                                                          int samples) {
  if (samples < 2) throw Error(ErrorKind::DomainError, "samples must be >= 2");
  std::vector<std::pair<double, double>> out;
  out.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const double x = i == samples - 1
                         ? family.x_hi
                         : family.x_lo + (family.x_hi - family.x_lo) * i / (samples - 1);
    const NonCongruentConfig c = family.at(x);
    out.emplace_back(x, density_noncongruent(od, c).density);
  }
  return out;
}

}  // namespace hyperpack
