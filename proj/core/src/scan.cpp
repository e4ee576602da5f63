#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

#include "hyperpack/error.hpp"
#include "hyperpack/optimize.hpp"
#include "hyperpack/packing.hpp"

namespace hyperpack {

namespace {

struct Triple {
  int u, v, w;
};

DensityResult evaluate(const Triple& t, const ScanOptions& options) {
  const OrthoschemeData od = analyze(SchlafliParams{double(t.u), double(t.v), double(t.w)});
  switch (options.mode) {
    case DensityMode::TwoCongruent: return density_two_congruent(od);
    case DensityMode::OneHyperball: return density_one_hyperball(od);
    case DensityMode::NonCongruent: return optimize_noncongruent(od, options.tol);
  }
  throw Error(ErrorKind::InternalInconsistency, "unknown density mode");
}

void check_range(const IntRange& r, const char* axis) {
  if (r.lo < 3 || r.hi < r.lo) {
    std::ostringstream os;
    os << "invalid " << axis << " range [" << r.lo << ", " << r.hi << "]";
    throw Error(ErrorKind::DomainError, os.str());
  }
}

bool ranks_before(const DensityResult& a, const DensityResult& b) {
  if (a.density != b.density) return a.density > b.density;
  return std::tie(a.params.u, a.params.v, a.params.w) <
         std::tie(b.params.u, b.params.v, b.params.w);
}

}  // namespace

std::vector<DensityResult> scan_integer(const ScanOptions& options) {
  check_range(options.u, "u");
  check_range(options.v, "v");
  check_range(options.w, "w");

  std::vector<Triple> triples;
  for (int u = options.u.lo; u <= options.u.hi; ++u) {
    for (int v = options.v.lo; v <= options.v.hi; ++v) {
      for (int w = std::max(u, options.w.lo); w <= options.w.hi; ++w) {
        triples.push_back({u, v, w});
      }
    }
  }

  std::vector<std::optional<DensityResult>> slots(triples.size());
  std::vector<std::exception_ptr> failures(triples.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < triples.size(); i = next++) {
      try {
        slots[i] = evaluate(triples[i], options);
      } catch (const Error& e) {
        if (!is_classification_error(e.kind())) failures[i] = std::current_exception();
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };

  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(triples.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }

  // Report the failure of the first triple in scan order, independent of
  // which worker saw it.
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  std::vector<DensityResult> results;
  for (auto& s : slots) {
    if (s) results.push_back(std::move(*s));
  }
  if (results.empty()) {
    throw Error(ErrorKind::EmptyScan, "no valid doubly truncated triple in the scan ranges");
  }
  std::sort(results.begin(), results.end(), ranks_before);
  return results;
}

double two_congruent_density_p3p(double p) {
  return density_two_congruent(SchlafliParams::make(p, 3, p)).density;
}

RealScanResult scan_real_p(double p_lo, double p_hi, double tol) {
  if (!(p_lo > 6.0) || !(p_hi > p_lo) || !(p_hi <= 7.0) || !(tol > 0)) {
    std::ostringstream os;
    os << "real p scan needs 6 < p_lo < p_hi <= 7 and tol > 0, got [" << p_lo << ", "
       << p_hi << "], tol " << tol;
    throw Error(ErrorKind::DomainError, os.str());
  }

  constexpr int kGrid = 200;
  std::vector<double> ps(kGrid), vals(kGrid);
  for (int i = 0; i < kGrid; ++i) {
    ps[i] = i == kGrid - 1 ? p_hi : p_lo + (p_hi - p_lo) * i / (kGrid - 1);
    vals[i] = two_congruent_density_p3p(ps[i]);
  }

  int peaks = 0;
  for (int i = 0; i < kGrid; ++i) {
    const bool above_left = i == 0 || vals[i] > vals[i - 1];
    const bool above_right = i == kGrid - 1 || vals[i] >= vals[i + 1];
    if (above_left && above_right) ++peaks;
  }
  if (peaks != 1) {
    std::ostringstream os;
    os << "density over p in [" << p_lo << ", " << p_hi << "] shows " << peaks
       << " local maxima on the pre-grid";
    throw Error(ErrorKind::NotUnimodal, os.str());
  }

  const auto best = std::max_element(vals.begin(), vals.end()) - vals.begin();
  const double a = ps[std::max<std::ptrdiff_t>(0, best - 1)];
  const double b = ps[std::min<std::ptrdiff_t>(kGrid - 1, best + 1)];
  const ScalarMaximum m = golden_section_maximize(two_congruent_density_p3p, a, b, tol);
  if (m.value >= vals[best]) return {m.x, m.value};
  return {ps[best], vals[best]};
}

std::vector<std::pair<double, double>> density_profile_p(double p_lo, double p_hi, int samples) {
  if (samples < 2 || !(p_lo > 6.0) || !(p_hi > p_lo) || !(p_hi <= 7.0)) {
    throw Error(ErrorKind::DomainError, "density profile needs 6 < p_lo < p_hi <= 7, samples >= 2");
  }
  std::vector<std::pair<double, double>> out;
  out.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const double p = i == samples - 1 ? p_hi : p_lo + (p_hi - p_lo) * i / (samples - 1);
    out.emplace_back(p, two_congruent_density_p3p(p));
  }
  return out;
}

}  // namespace hyperpack
