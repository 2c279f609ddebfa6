#pragma once

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symdisc/common.hpp"
#include "symdisc/grid.hpp"
#include "symdisc/mat2.hpp"

namespace symdisc {

/// Point of the extended family: (y_1, ..., y_{n-1}, q).
struct TildePoint {
  int n = 2;
  std::vector<Cplx> y;  // n-1 entries
  Cplx q;
};

/// Point of the symmetrized family: (s_1, ..., s_{n-1}, p).
struct SymPoint {
  int n = 1;
  std::vector<Cplx> s;  // n-1 entries
  Cplx p;
};

struct BetaVector {
  int n = 2;
  std::vector<Cplx> beta;  // n-1 entries
};

inline void validate(const TildePoint& y) {
  if (y.n < 2 || y.y.size() != static_cast<std::size_t>(y.n - 1))
    throw error(errc::invalid_point, "tilde point needs n >= 2 and n-1 components");
  for (const Cplx& c : y.y)
    if (!is_finite(c)) throw error(errc::invalid_point, "non-finite component");
  if (!is_finite(y.q)) throw error(errc::invalid_point, "non-finite q");
}

inline void validate(const SymPoint& s) {
  if (s.n < 1 || s.s.size() != static_cast<std::size_t>(s.n - 1))
    throw error(errc::invalid_point, "sym point needs n >= 1 and n-1 components");
  for (const Cplx& c : s.s)
    if (!is_finite(c)) throw error(errc::invalid_point, "non-finite component");
  if (!is_finite(s.p)) throw error(errc::invalid_point, "non-finite p");
}

/// 1-based component access, j in [1, n-1].
inline Cplx comp(const TildePoint& y, int j) { return y.y[static_cast<std::size_t>(j - 1)]; }

enum class Closure { open, closed };

struct ConditionEval {
  bool holds = false;
  double margin = 0.0;
};

struct MembershipVerdict {
  bool member_open = false;
  bool member_closed = false;
  std::map<std::string, ConditionEval> condition_values;
  std::optional<BetaVector> beta_witness;
  std::vector<Mat2> matrix_witness;
};

/// j-th fractional-linear map attached to y, evaluated at z. The degenerate
/// branch (product equal to C^2 q within 1e-12) is the constant y_j / C.
inline Cplx fractional_map(int j, Cplx z, const TildePoint& y) {
  validate(y);
  if (j < 1 || j > y.n - 1) throw error(errc::out_of_range, "fractional_map: index j");
  const double c = static_cast<double>(binom(y.n, j));
  const Cplx yj = comp(y, j);
  const Cplx ynj = comp(y, y.n - j);
  if (std::abs(yj * ynj - c * c * y.q) <= kTolDegenerate) return yj / c;
  const Cplx den = ynj * z - c;
  if (std::abs(den) <= 1e-14 * c)
    throw error(errc::pole_at_z, "fractional_map: pole at the requested z");
  return (c * y.q * z - yj) / den;
}

/// Closed form for the H-infinity norm of the j-th fractional map.
inline double d_norm(int j, const TildePoint& y) {
  validate(y);
  if (j < 1 || j > y.n - 1) throw error(errc::out_of_range, "d_norm: index j");
  const double c = static_cast<double>(binom(y.n, j));
  const Cplx yj = comp(y, j);
  const Cplx ynj = comp(y, y.n - j);
  const Cplx pd = yj * ynj - c * c * y.q;
  if (std::abs(pd) <= kTolDegenerate) return std::abs(yj) / c;
  const double den = c * c - std::norm(ynj);
  if (den <= 0.0)
    throw error(errc::outside_formula_domain, "d_norm: |y_{n-j}| >= binom(n,j)");
  return (c * std::abs(yj - std::conj(ynj) * y.q) + std::abs(pd)) / den;
}

namespace detail {

/// Minimum over the unit circle of |a + b z| / |c + d z|, grid scan plus
/// golden refinement.
inline double min_ratio_on_torus(Cplx a, Cplx b, Cplx c, Cplx d, int npts) {
  auto h = [&](double th) {
    const Cplx z = std::polar(1.0, th);
    const double num = std::abs(a + b * z);
    const double den = std::abs(c + d * z);
    if (den == 0.0) return num == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return num / den;
  };
  const int n = std::max(npts, 64);
  const double step = 2.0 * std::numbers::pi / n;
  double best = std::numeric_limits<double>::infinity(), th_best = 0.0;
  for (int i = 0; i < n; ++i) {
    const double v = h(step * i);
    if (v < best) best = v, th_best = step * i;
  }
  auto neg = [&](double th) { return -h(th); };
  auto [th, v] = golden_max(neg, th_best - step, th_best + step, 48);
  (void)th;
  return std::min(best, -v);
}

/// Margin of the bidisc non-vanishing condition
///   const - u z - v w + const2 z w != 0 on the closed bidisc,
/// after eliminating w: the unique zero w(z) = (k0 - u z)/(v - k1 z) must
/// stay outside the closed disc for every |z| <= 1, and the z making the
/// numerator vanish must lie outside as well.
inline double bidisc_margin(Cplx k0, Cplx u, Cplx v, Cplx k1, int npts) {
  // w(z) = (k0 - u z) / (v - k1 z)
  const double ring_min = min_ratio_on_torus(k0, -u, v, -k1, npts);
  double zero_pos = std::numeric_limits<double>::infinity();
  if (std::abs(u) > 0.0) zero_pos = std::abs(k0) / std::abs(u);
  return std::min(ring_min - 1.0, zero_pos - 1.0);
}

}  // namespace detail

/// Margins of the membership characterizations, aggregated over
/// j = 1..floor(n/2). Keys: "2","3","3'","4","4'","5","5'","6","7".
/// A margin > 0 certifies the open variant, >= 0 the closed one.
inline std::map<std::string, double> membership_condition_margins(
    const TildePoint& y, int bidisc_grid_points = 1024) {
  validate(y);
  const int n = y.n;
  const double inf = std::numeric_limits<double>::infinity();
  std::map<std::string, double> m = {
      {"2", inf}, {"3", inf}, {"3'", inf}, {"4", inf}, {"4'", inf},
      {"5", inf}, {"5'", inf}, {"6", inf}, {"7", inf}};
  auto acc = [&](const char* key, double v) { m[key] = std::min(m[key], v); };

  for (int j = 1; j <= n / 2; ++j) {
    const double c = static_cast<double>(binom(n, j));
    const Cplx yj = comp(y, j);
    const Cplx ynj = comp(y, n - j);
    const Cplx q = y.q;
    const Cplx pd = yj * ynj - c * c * q;
    const double apd = std::abs(pd);
    const double ayj = std::abs(yj), aynj = std::abs(ynj), aq = std::abs(q);
    const double num_j = std::abs(yj - std::conj(ynj) * q);
    const double num_nj = std::abs(ynj - std::conj(yj) * q);

    acc("2", detail::bidisc_margin(c, yj, ynj, c * q, bidisc_grid_points));

    // (3): D_j with the extra clause |y_{n-j}| < C in the degenerate case
    {
      double v;
      if (apd <= kTolDegenerate) {
        v = std::min(1.0 - ayj / c, (c - aynj) / c);
      } else if (c * c - aynj * aynj <= 0.0) {
        v = -1.0 - (aynj - c) / c;
      } else {
        v = 1.0 - (c * num_j + apd) / (c * c - aynj * aynj);
      }
      acc("3", v);
    }
    // (3'): D_{n-j} with |y_j| < C in the degenerate case
    {
      double v;
      if (apd <= kTolDegenerate) {
        v = std::min(1.0 - aynj / c, (c - ayj) / c);
      } else if (c * c - ayj * ayj <= 0.0) {
        v = -1.0 - (ayj - c) / c;
      } else {
        v = 1.0 - (c * num_nj + apd) / (c * c - ayj * ayj);
      }
      acc("3'", v);
    }
    acc("4", (c * c - aynj * aynj) - (c * num_j + apd));
    acc("4'", (c * c - ayj * ayj) - (c * num_nj + apd));
    acc("5", std::min(c * c - (ayj * ayj - aynj * aynj + c * c * aq * aq + 2.0 * c * num_nj),
                      c * (c - aynj)));
    acc("5'", std::min(c * c - (aynj * aynj - ayj * ayj + c * c * aq * aq + 2.0 * c * num_j),
                       c * (c - ayj)));
    acc("6", std::min(1.0 - aq,
                      c * c - (ayj * ayj + aynj * aynj - c * c * aq * aq + 2.0 * apd)));
    acc("7", c * (1.0 - aq * aq) - (num_nj + num_j));
  }
  for (auto& [key, v] : m) {
    (void)key;
    v = clamp_margin(v);
  }
  return m;
}

/// Fast margin of the primary decision inequality (condition "4"),
/// aggregated over all index pairs.
inline double tilde_condition4_margin(const TildePoint& y) {
  double worst = std::numeric_limits<double>::infinity();
  for (int j = 1; j <= y.n / 2; ++j) {
    const double c = static_cast<double>(binom(y.n, j));
    const Cplx yj = comp(y, j);
    const Cplx ynj = comp(y, y.n - j);
    const Cplx pd = yj * ynj - c * c * y.q;
    const double margin =
        (c * c - std::norm(ynj)) - (c * std::abs(yj - std::conj(ynj) * y.q) + std::abs(pd));
    worst = std::min(worst, margin);
  }
  return worst;
}

/// Recover the parameter vector from a point with |q| < 1:
/// beta_j = (y_j - conj(y_{n-j}) q) / (1 - |q|^2).
inline BetaVector beta_recover(const TildePoint& y) {
  validate(y);
  if (std::abs(y.q) >= 1.0)
    throw error(errc::boundary_parameter, "beta_recover: |q| must be < 1");
  const double d = 1.0 - std::norm(y.q);
  BetaVector b{y.n, std::vector<Cplx>(static_cast<std::size_t>(y.n - 1))};
  for (int j = 1; j <= y.n - 1; ++j)
    b.beta[static_cast<std::size_t>(j - 1)] = (comp(y, j) - std::conj(comp(y, y.n - j)) * y.q) / d;
  return b;
}

/// Symmetric 2x2 matrix B with diagonal (y_j/C, y_{n-j}/C) and det B = q.
/// The off-diagonal entry is a square root of y_j y_{n-j} / C^2 - q; the
/// branch argument selects the root. The contraction property is verified
/// numerically, not assumed.
inline Mat2 build_Bj(const TildePoint& y, int j, int branch = +1) {
  validate(y);
  if (j < 1 || j > y.n - 1) throw error(errc::out_of_range, "build_Bj: index j");
  if (tilde_condition4_margin(y) < -kMarginBand)
    throw error(errc::invalid_point, "build_Bj: point is outside the closed domain");
  const double c = static_cast<double>(binom(y.n, j));
  const Cplx yj = comp(y, j);
  const Cplx ynj = comp(y, y.n - j);
  Cplx w = std::sqrt(yj * ynj / (c * c) - y.q);
  if (branch < 0) w = -w;
  const Mat2 b{yj / c, w, w, ynj / c};
  if (op_norm(b) > 1.0 + kTolEq)
    throw error(errc::norm_certificate_failed,
                "build_Bj: constructed matrix has norm " + std::to_string(op_norm(b)));
  return b;
}

/// Membership test for the extended family. The decision is condition "4";
/// the full condition vector is attached for cross-checking, along with the
/// recovered parameter vector and the symmetric matrix witnesses.
inline MembershipVerdict membership_tilde(const TildePoint& y, Closure which = Closure::open) {
  const auto margins = membership_condition_margins(y);
  MembershipVerdict v;
  const double m4 = margins.at("4");
  v.member_open = m4 > kMarginBand;
  v.member_closed = m4 >= -kMarginBand;
  for (const auto& [key, margin] : margins) {
    const bool holds = (which == Closure::open) ? margin > kMarginBand : margin >= -kMarginBand;
    v.condition_values[key] = {holds, margin};
  }
  if (std::abs(y.q) < 1.0) v.beta_witness = beta_recover(y);
  if (v.member_closed) {
    for (int j = 1; j <= y.n / 2; ++j) {
      try {
        v.matrix_witness.push_back(build_Bj(y, j));
      } catch (const error&) {
        // reported through the absence of the witness
      }
    }
  }
  return v;
}

/// Elementary symmetric polynomials of the arguments; the last component is
/// the full product.
inline SymPoint sym_map(const std::vector<Cplx>& z) {
  const int n = static_cast<int>(z.size());
  if (n < 1) throw error(errc::invalid_point, "sym_map: empty tuple");
  std::vector<Cplx> e(static_cast<std::size_t>(n) + 1, Cplx(0.0));
  e[0] = 1.0;
  for (int i = 0; i < n; ++i)
    for (int k = std::min(i + 1, n); k >= 1; --k)
      e[static_cast<std::size_t>(k)] += z[static_cast<std::size_t>(i)] * e[static_cast<std::size_t>(k - 1)];
  SymPoint s{n, std::vector<Cplx>(e.begin() + 1, e.begin() + n), e[static_cast<std::size_t>(n)]};
  return s;
}

/// Rational membership function for the symmetrized family.
inline Cplx costara_f(const SymPoint& s, Cplx z) {
  validate(s);
  const int n = s.n;
  Cplx num = 0.0, den = static_cast<double>(n), zp = 1.0;
  double scale = static_cast<double>(n);
  for (int k = 1; k <= n - 1; ++k) {
    const double sgn = (k % 2) ? -1.0 : 1.0;
    const Cplx sk = s.s[static_cast<std::size_t>(k - 1)];
    num += sgn * static_cast<double>(k) * sk * zp;
    den += sgn * static_cast<double>(n - k) * sk * (zp * z);
    scale += static_cast<double>(n - k) * std::abs(sk);
    zp *= z;
  }
  num += ((n % 2) ? -1.0 : 1.0) * static_cast<double>(n) * s.p * zp;
  if (std::abs(den) <= 1e-13 * std::max(scale, 1.0))
    throw error(errc::pole_hit, "costara_f: pole at the requested z");
  return num / den;
}

/// Membership test for the symmetrized family via boundary maximization of
/// the rational function. The denominator's winding number flags poles
/// inside the disc (immediate non-membership).
inline MembershipVerdict membership_sym(const SymPoint& s, Closure which = Closure::open,
                                        const GridSpec& grid = {}) {
  validate(s);
  const int n = s.n;
  const int npts = std::max(grid.torus_points, 64);
  const double step = 2.0 * std::numbers::pi / npts;

  auto eval = [&](double th) -> std::pair<double, Cplx> {
    // returns (|f|, den)
    const Cplx z = std::polar(1.0, th);
    Cplx num = 0.0, den = static_cast<double>(n), zp = 1.0;
    for (int k = 1; k <= n - 1; ++k) {
      const double sgn = (k % 2) ? -1.0 : 1.0;
      const Cplx sk = s.s[static_cast<std::size_t>(k - 1)];
      num += sgn * static_cast<double>(k) * sk * zp;
      den += sgn * static_cast<double>(n - k) * sk * (zp * z);
      zp *= z;
    }
    num += ((n % 2) ? -1.0 : 1.0) * static_cast<double>(n) * s.p * zp;
    const double an = std::abs(num), ad = std::abs(den);
    const double v = (ad == 0.0) ? (an == 0.0 ? 0.0 : std::numeric_limits<double>::infinity())
                                 : an / ad;
    return {v, den};
  };

  double best = -1.0, th_best = 0.0;
  double wind = 0.0, prev_arg = 0.0;
  for (int i = 0; i <= npts; ++i) {
    const double th = step * i;
    auto [v, den] = eval(th);
    if (i < npts && v > best) best = v, th_best = th;
    const double a = std::arg(den);
    if (i > 0) {
      double dth = a - prev_arg;
      while (dth > std::numbers::pi) dth -= 2.0 * std::numbers::pi;
      while (dth <= -std::numbers::pi) dth += 2.0 * std::numbers::pi;
      wind += dth;
    }
    prev_arg = a;
  }
  const int winding = static_cast<int>(std::lround(wind / (2.0 * std::numbers::pi)));

  auto h = [&](double th) { return eval(th).first; };
  auto [th, v] = detail::golden_max(h, th_best - step, th_best + step, 48);
  (void)th;
  double sup = std::max(best, v);
  if (winding != 0) sup = std::numeric_limits<double>::infinity();

  MembershipVerdict verdict;
  verdict.member_open = sup < 1.0 - kMarginBand;
  verdict.member_closed = sup <= 1.0 + kMarginBand;
  const double margin = clamp_margin(1.0 - sup);
  const bool holds = (which == Closure::open) ? verdict.member_open : verdict.member_closed;
  verdict.condition_values["costara_sup"] = {holds, margin};
  return verdict;
}

/// (s_1/lambda, s_2/lambda^2, ..., p/lambda^n): exchanges membership in the
/// radius-|lambda| family with membership in the unit family.
inline SymPoint scale_equiv(const SymPoint& s, Cplx lambda) {
  validate(s);
  if (std::abs(lambda) == 0.0)
    throw error(errc::out_of_range, "scale_equiv: lambda must be nonzero");
  SymPoint r = s;
  Cplx lp = 1.0;
  for (int k = 1; k <= s.n - 1; ++k) {
    lp *= lambda;
    r.s[static_cast<std::size_t>(k - 1)] = s.s[static_cast<std::size_t>(k - 1)] / lp;
  }
  lp *= lambda;
  r.p = s.p / lp;
  return r;
}

/// Membership in the proportional slice on which the synthesis lift is
/// available. All of the family for n <= 3.
inline bool in_Jn(const TildePoint& y, double tol = 1e-10) {
  validate(y);
  const int n = y.n;
  if (n <= 3) return true;
  const Cplx y1 = comp(y, 1);
  const Cplx yn1 = comp(y, n - 1);
  const int k = n / 2;
  if (n % 2 == 1) {
    for (int j = 2; j <= k; ++j) {
      const double cj = static_cast<double>(binom(n, j));
      if (std::abs(comp(y, j) - (cj / n) * y1) > tol) return false;
      if (std::abs(comp(y, n - j) - (cj / n) * yn1) > tol) return false;
    }
    return true;
  }
  const double ck = static_cast<double>(binom(n, k));
  if (std::abs(comp(y, k) - (ck / n) * 0.5 * (y1 + yn1)) > tol) return false;
  for (int j = 2; j <= k - 1; ++j) {
    const double cj = static_cast<double>(binom(n, j));
    if (std::abs(comp(y, j) - (cj / n) * y1) > tol) return false;
    if (std::abs(comp(y, n - j) - (cj / n) * yn1) > tol) return false;
  }
  return true;
}

/// Lift of a two-point datum into an equivalent closed-membership test:
/// for odd n the lambda0-divided point in the same dimension, for even n
/// the weighted point one dimension up. Ties |y_{n-j}| = |y_j| take
/// the divide-y_j branch.
inline TildePoint lift_tilde(const TildePoint& y, Cplx lambda0) {
  validate(y);
  const double al = std::abs(lambda0);
  if (al <= 0.0 || al >= 1.0)
    throw error(errc::out_of_range, "lift_tilde: need 0 < |lambda0| < 1");
  const int n = y.n;
  if (n % 2 == 1) {
    TildePoint t{n, y.y, y.q / lambda0};
    for (int j = 1; j <= n / 2; ++j) {
      if (std::abs(comp(y, n - j)) <= std::abs(comp(y, j)))
        t.y[static_cast<std::size_t>(j - 1)] = comp(y, j) / lambda0;
      else
        t.y[static_cast<std::size_t>(n - j - 1)] = comp(y, n - j) / lambda0;
    }
    return t;
  }
  const int k = n / 2;
  std::vector<Cplx> ty = y.y;  // lambda0-divided components before weighting
  ty[static_cast<std::size_t>(k - 1)] = comp(y, k) / lambda0;
  for (int j = 1; j <= k - 1; ++j) {
    if (std::abs(comp(y, n - j)) <= std::abs(comp(y, j)))
      ty[static_cast<std::size_t>(j - 1)] = comp(y, j) / lambda0;
    else
      ty[static_cast<std::size_t>(n - j - 1)] = comp(y, n - j) / lambda0;
  }
  std::vector<Cplx> out(static_cast<std::size_t>(n));
  for (int p = 1; p <= k; ++p)
    out[static_cast<std::size_t>(p - 1)] = (n + 1.0) / (n + 1 - p) * ty[static_cast<std::size_t>(p - 1)];
  out[static_cast<std::size_t>(k)] = (n + 1.0) / (k + 1) * comp(y, k);
  for (int p = k + 2; p <= n; ++p)
    out[static_cast<std::size_t>(p - 1)] = (n + 1.0) / p * ty[static_cast<std::size_t>(p - 2)];
  return TildePoint{n + 1, std::move(out), y.q / lambda0};
}

}  // namespace symdisc
