#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numbers>
#include <utility>
#include <vector>

#include "symdisc/common.hpp"

namespace symdisc {

/// SplitMix64 with per-sample substreams. The low-level stream is generated
/// by hand so that reports are reproducible across platforms and standard
/// library implementations.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Substream for sample `index` under a global seed; streams for distinct
  /// indices are independent regardless of how much each one consumes.
  static SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mixer(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
    return SplitMix64(mixer.next());
  }
};

/// Uniform point of the open disc of radius r (area measure).
inline Cplx uniform_disc(SplitMix64& rng, double r = 1.0) {
  const double rad = r * std::sqrt(rng.uniform());
  const double th = 2.0 * std::numbers::pi * rng.uniform();
  return Cplx(rad * std::cos(th), rad * std::sin(th));
}

struct GridSpec {
  int torus_points = 4096;
  int disc_rings = 16;
  int refine_iters = 2;
};

struct SupResult {
  double value = 0.0;
  Cplx argmax;
};

namespace detail {

/// Golden-section maximization of h over [a, b]; h is assumed unimodal on
/// the bracket. Returns (argmax, max).
inline std::pair<double, double> golden_max(const std::function<double(double)>& h,
                                            double a, double b, int iters) {
  constexpr double phi = 0.6180339887498948482;
  double x1 = b - phi * (b - a);
  double x2 = a + phi * (b - a);
  double f1 = h(x1), f2 = h(x2);
  for (int i = 0; i < iters; ++i) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = h(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = h(x1);
    }
  }
  return (f1 >= f2) ? std::make_pair(x1, f1) : std::make_pair(x2, f2);
}

}  // namespace detail

/// Maximum of |f| over the unit circle: dense grid scan followed by
/// golden-section refinement of the best arc. Accuracy is well below 1e-6
/// for the rational functions used here. Exceptions from f propagate.
inline SupResult sup_on_torus(const std::function<Cplx(Cplx)>& f, const GridSpec& grid = {}) {
  const int n = std::max(grid.torus_points, 64);
  const double step = 2.0 * std::numbers::pi / n;
  auto h = [&](double th) { return std::abs(f(std::polar(1.0, th))); };
  double best = -1.0, th_best = 0.0;
  for (int i = 0; i < n; ++i) {
    const double th = step * i;
    const double v = h(th);
    if (v > best) best = v, th_best = th;
  }
  double a = th_best - step, b = th_best + step;
  for (int r = 0; r < std::max(grid.refine_iters, 1); ++r) {
    auto [th, v] = detail::golden_max(h, a, b, 24);
    if (v > best) best = v, th_best = th;
    a = th_best - 0.25 * (b - a);
    b = th_best + 0.25 * (b - a);
  }
  return {best, std::polar(1.0, th_best)};
}

/// Minimum of |f| over the unit circle (same scheme with the sign flipped).
inline SupResult inf_on_torus(const std::function<Cplx(Cplx)>& f, const GridSpec& grid = {}) {
  auto neg = [&](Cplx z) { return Cplx(-std::abs(f(z)), 0.0); };
  SupResult r = sup_on_torus(neg, grid);
  return {-r.value, r.argmax};
}

/// Deterministic grid covering the disc of radius rmax: `rings` circles with
/// `per_ring` staggered angles each.
inline std::vector<Cplx> disc_grid(int rings, int per_ring, double rmax = 0.999) {
  std::vector<Cplx> pts;
  pts.reserve(static_cast<std::size_t>(rings) * per_ring);
  for (int i = 0; i < rings; ++i) {
    const double r = rmax * (i + 1.0) / rings;
    const double off = std::numbers::pi * i / per_ring;
    for (int k = 0; k < per_ring; ++k) {
      const double th = 2.0 * std::numbers::pi * k / per_ring + off;
      pts.push_back(std::polar(r, th));
    }
  }
  return pts;
}

}  // namespace symdisc
