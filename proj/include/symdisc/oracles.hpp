#pragma once

#include <vector>

#include "symdisc/domains.hpp"
#include "symdisc/grid.hpp"

namespace symdisc {

/// One symmetrized point: image of an i.i.d. uniform tuple from the disc of
/// radius r.
inline SymPoint sample_gn_one(int n, double r, SplitMix64& rng) {
  std::vector<Cplx> z(static_cast<std::size_t>(n));
  for (auto& zi : z) zi = uniform_disc(rng, r);
  return sym_map(z);
}

/// Deterministic batch with one substream per sample.
inline std::vector<SymPoint> sample_gn(int n, int count, double r, std::uint64_t seed) {
  if (count < 0) throw error(errc::out_of_range, "sample_gn: count");
  std::vector<SymPoint> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    SplitMix64 rng = SplitMix64::substream(seed, static_cast<std::uint64_t>(i));
    out.push_back(sample_gn_one(n, r, rng));
  }
  return out;
}

/// One extended point built from its defining parameters: paired beta values
/// drawn by rejection under |beta_j| + |beta_{n-j}| < binom(n,j), q uniform
/// in the disc.
inline TildePoint sample_tilde_one(int n, SplitMix64& rng) {
  std::vector<Cplx> beta(static_cast<std::size_t>(n - 1));
  for (int j = 1; j <= n / 2; ++j) {
    const double c = static_cast<double>(binom(n, j));
    if (j == n - j) {
      beta[static_cast<std::size_t>(j - 1)] = uniform_disc(rng, 0.5 * c);
      continue;
    }
    Cplx bj, bnj;
    do {
      bj = uniform_disc(rng, c);
      bnj = uniform_disc(rng, c);
    } while (std::abs(bj) + std::abs(bnj) >= c);
    beta[static_cast<std::size_t>(j - 1)] = bj;
    beta[static_cast<std::size_t>(n - j - 1)] = bnj;
  }
  const Cplx q = uniform_disc(rng);
  TildePoint y{n, std::vector<Cplx>(static_cast<std::size_t>(n - 1)), q};
  for (int j = 1; j <= n - 1; ++j)
    y.y[static_cast<std::size_t>(j - 1)] =
        beta[static_cast<std::size_t>(j - 1)] + std::conj(beta[static_cast<std::size_t>(n - j - 1)]) * q;
  return y;
}

inline std::vector<TildePoint> sample_tilde(int n, int count, std::uint64_t seed) {
  if (count < 0) throw error(errc::out_of_range, "sample_tilde: count");
  std::vector<TildePoint> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    SplitMix64 rng = SplitMix64::substream(seed, static_cast<std::uint64_t>(i));
    out.push_back(sample_tilde_one(n, rng));
  }
  return out;
}

/// Uniform point of the bounding polydisc |y_j| < binom(n,j), |q| < 1;
/// mostly outside the domain, used to exercise the failing side of the
/// characterizations.
inline TildePoint sample_bounding_box_one(int n, SplitMix64& rng) {
  TildePoint y{n, std::vector<Cplx>(static_cast<std::size_t>(n - 1)), uniform_disc(rng)};
  for (int j = 1; j <= n - 1; ++j)
    y.y[static_cast<std::size_t>(j - 1)] = uniform_disc(rng, static_cast<double>(binom(n, j)));
  return y;
}

}  // namespace symdisc
