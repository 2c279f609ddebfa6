#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "symdisc/domains.hpp"
#include "symdisc/grid.hpp"
#include "symdisc/mat2.hpp"
#include "symdisc/scalar_schur.hpp"

namespace symdisc {

/// Two-point interpolation datum: 0 -> origin, lambda0 -> y0.
struct SchwarzDatum {
  Cplx lambda0;
  TildePoint y0;
};

inline void validate(const SchwarzDatum& d) {
  validate(d.y0);
  const double al = std::abs(d.lambda0);
  if (al <= 0.0 || al >= 1.0)
    throw error(errc::invalid_point, "datum: lambda0 must lie in the punctured disc");
  if (tilde_condition4_margin(d.y0) <= kMarginBand)
    throw error(errc::invalid_point, "datum: target point must lie in the open domain");
}

using MatFunc = std::function<Mat2(Cplx)>;

/// Analytic map D -> C^n assembled from matrix-valued building blocks.
struct Interpolant {
  int n = 0;
  std::vector<MatFunc> blocks;
  std::function<std::vector<Cplx>(Cplx)> eval;

  std::vector<Cplx> operator()(Cplx lambda) const { return eval(lambda); }
};

struct SchwarzReport {
  int n = 0;
  Cplx lambda0;
  std::map<int, ConditionEval> cond;  // condition ids 2..11
  std::vector<bool> branch_primary;   // per pair j: |y_{n-j}| <= |y_j|
  bool consistent = true;
  bool jn_member = false;
  std::optional<BetaVector> beta;
};

namespace detail {

/// Role-resolved pair for index j: (a, b) with the branch rule
/// |y_{n-j}| <= |y_j| selecting a = y_j; ties go to the first branch.
struct RolePair {
  Cplx a, b;
  bool primary;  // true when a = y_j
};

inline RolePair role_pair(const TildePoint& y, int j) {
  const Cplx yj = comp(y, j);
  const Cplx ynj = comp(y, y.n - j);
  if (std::abs(ynj) <= std::abs(yj)) return {yj, ynj, true};
  return {ynj, yj, false};
}

/// Branch-resolved closed-form sup value for pair j.
inline double branch_sup_value(const SchwarzDatum& d, int j) {
  const auto rp = role_pair(d.y0, j);
  const double c = static_cast<double>(binom(d.y0.n, j));
  const Cplx pd = rp.a * rp.b - c * c * d.y0.q;
  if (std::abs(pd) <= kTolDegenerate) return std::abs(rp.a) / c;
  return (c * std::abs(rp.a - std::conj(rp.b) * d.y0.q) + std::abs(pd)) /
         (c * c - std::norm(rp.b));
}

}  // namespace detail

/// Symmetric matrix of the interpolation step for pair j, entries
/// (a/(C lambda0), w; w, b/C) with w^2 = (y_j y_{n-j} - C^2 q)/(C^2 lambda0).
/// root_branch selects the square root.
inline Mat2 build_Zj(const SchwarzDatum& d, int j, int root_branch = +1) {
  validate(d.y0);
  const int n = d.y0.n;
  if (j < 1 || j > n / 2) throw error(errc::out_of_range, "build_Zj: index j");
  const auto rp = detail::role_pair(d.y0, j);
  const double c = static_cast<double>(binom(n, j));
  const Cplx pd = rp.a * rp.b - c * c * d.y0.q;
  if (std::abs(pd) <= kTolDegenerate)
    throw error(errc::degenerate_product, "build_Zj: product equals C^2 q");
  Cplx w = std::sqrt(pd / (c * c * d.lambda0));
  if (root_branch < 0) w = -w;
  return {rp.a / (c * d.lambda0), w, w, rp.b / c};
}

/// Solvability test matrix of the constrained one-step problem.
inline Mat2 kz_matrix(const Mat2& z, double rho) {
  if (rho < 0.0 || rho >= 1.0) throw error(errc::out_of_range, "kz_matrix: rho in [0,1)");
  if (op_norm(z) >= 1.0 - 1e-12)
    throw error(errc::contraction_violation, "kz_matrix: |z| must be < 1");
  const Mat2 id = Mat2::identity();
  const Mat2 zs = adjoint(z);
  const Mat2 a_inv = inverse2(id - z * zs);   // (1 - Z Z*)^{-1}
  const Mat2 b_inv = inverse2(id - zs * z);   // (1 - Z* Z)^{-1}
  const double r2 = rho * rho;
  const Cplx e11 = ((id - r2 * (zs * z)) * b_inv).a11;
  const Cplx e12 = ((1.0 - r2) * (a_inv * z)).a21;
  const Cplx e21 = ((1.0 - r2) * (zs * a_inv)).a12;
  const Cplx e22 = ((z * zs - Mat2::diagonal(r2, r2)) * a_inv).a22;
  return {e11, e12, e21, e22};
}

/// Vector pair of the corner-zero characterization:
///   u = (1-ZZ*)^{-1/2}(alpha_1 Z e1 + alpha_2 e2),
///   v = -(1-Z*Z)^{-1/2}(alpha_1 e1 + alpha_2 Z* e2).
struct UvPair {
  Vec2 u, v;
};

inline UvPair uv_vectors(const Mat2& z, Vec2 alpha) {
  if (vec_norm(alpha) == 0.0) throw error(errc::out_of_range, "uv_vectors: alpha must be nonzero");
  if (op_norm(z) >= 1.0 - 1e-12)
    throw error(errc::contraction_violation, "uv_vectors: |z| must be < 1");
  const Mat2 id = Mat2::identity();
  const Mat2 zs = adjoint(z);
  const Mat2 p = inverse2(herm_sqrt(id - z * zs));
  const Mat2 q = inverse2(herm_sqrt(id - zs * z));
  const Vec2 ze1{z.a11, z.a21};
  const Vec2 zse2{std::conj(z.a21), std::conj(z.a22)};
  const Vec2 u = apply(p, alpha.x * ze1 + alpha.y * Vec2{0.0, 1.0});
  const Vec2 v = Cplx(-1.0) * apply(q, alpha.x * Vec2{1.0, 0.0} + alpha.y * zse2);
  return {u, v};
}

namespace detail {

inline void verify_corner_block(const MatFunc& g, const Mat2& z, Cplx lambda0, double tol) {
  const Mat2 g0 = g(0.0);
  const Mat2 gl = g(lambda0);
  const Mat2 r = gl - z;
  if (!(std::sqrt(frob_sq(r)) <= tol))
    throw error(errc::condition_failed, "corner block misses its endpoint");
  if (!(std::abs(g0.a22) <= tol))
    throw error(errc::condition_failed, "corner block has nonzero lower-right value at 0");
  for (const Cplx& l : disc_grid(8, 32, 0.999))
    if (!(op_norm(g(l)) <= 1.0 + kTolEq))
      throw error(errc::condition_failed, "corner block exceeds the unit ball");
}

}  // namespace detail

/// Schur-class G with G(lambda0) = Z_j and [G(0)]_22 = 0, built for the
/// strictly contractive case via the admissible-direction construction:
/// alpha is the bottom eigenvector of the Hermitian part of the test matrix,
/// Q the least-norm constant solution of Q^* (conj(lambda0) u) = v, and
/// G the Mobius pull-back of the Blaschke multiple of Q.
inline MatFunc construct_G(const SchwarzDatum& d, int j) {
  const Mat2 z = build_Zj(d, j);
  const double rho = std::abs(d.lambda0);
  const Mat2 k = kz_matrix(z, rho);
  if (std::real(det2(k)) > 1e-12)
    throw error(errc::det_test_failed, "construct_G: det test value " +
                                           std::to_string(std::real(det2(k))));
  // The test matrix is Hermitian and the feasibility form in alpha reads
  // |v(alpha)|^2 - rho^2 |u(alpha)|^2 = <K conj(alpha), conj(alpha)>, so the
  // admissible direction is the conjugate of the bottom eigenvector.
  const Mat2 h = 0.5 * (k + adjoint(k));
  const HermEig2 he = hermitian_eig2(h);
  if (he.lmin > 1e-9)
    throw error(errc::det_test_failed, "construct_G: no admissible direction");
  const Vec2 alpha{std::conj(he.vmin.x), std::conj(he.vmin.y)};
  const auto [u, v] = uv_vectors(z, alpha);
  const Vec2 a = std::conj(d.lambda0) * u;
  const double na = vec_norm(a);
  const double nv = vec_norm(v);
  Mat2 q;
  if (na <= 1e-14) {
    if (nv > 1e-9) throw error(errc::rank_one_infeasible, "construct_G: u vanished but v did not");
    q = Mat2::zero();
  } else {
    if (nv > na * (1.0 + kTolEq))
      throw error(errc::rank_one_infeasible, "construct_G: |v| exceeds |lambda0| |u|");
    q = (1.0 / (na * na)) * outer(a, v);
  }
  const Mat2 id = Mat2::identity();
  const Mat2 zs = adjoint(z);
  const Mat2 p = inverse2(herm_sqrt(id - z * zs));
  const Mat2 s = herm_sqrt(id - zs * z);
  const Cplx lambda0 = d.lambda0;
  MatFunc g = [=](Cplx l) {
    const Mat2 x = blaschke(lambda0, l) * q;
    return p * (x + z) * inverse2(id + zs * x) * s;
  };
  detail::verify_corner_block(g, z, lambda0, 1e-9);
  return g;
}

/// Norm-attaining case |Z_j| = 1. A Schur function pinned to a unimodular
/// singular value is rigid along the attaining pair, so
///   G(l) = u1 v1^* + gamma(l) u2 v2^*
/// with gamma a scalar Schur function fixed at gamma(lambda0) = s2 and
/// gamma(0) chosen to zero the lower-right corner.
inline MatFunc construct_G_boundary(const SchwarzDatum& d, int j) {
  const Mat2 z = build_Zj(d, j);
  const Svd2 sv = svd2(z);
  if (std::abs(sv.s1 - 1.0) > 1e-6)
    throw error(errc::condition_failed, "construct_G_boundary: expects |Z| = 1");
  const Mat2 r1 = outer(sv.u1, sv.v1);
  const Mat2 r2 = outer(sv.u2, sv.v2);
  Cplx c0;
  if (std::abs(r2.a22) > 1e-12) {
    c0 = -r1.a22 / r2.a22;
  } else {
    if (std::abs(r1.a22) > 1e-9)
      throw error(errc::infeasible_data, "construct_G_boundary: corner cannot vanish");
    c0 = sv.s2;  // corner already zero; any admissible gamma(0) works
  }
  if (std::abs(c0) > 1.0 + kTolEq)
    throw error(errc::infeasible_data, "construct_G_boundary: corner target leaves the disc");
  const ScalarFunc gamma = schur_two_point(c0, Cplx(sv.s2), d.lambda0, 0.0, 1e-7);
  MatFunc g = [=](Cplx l) { return r1 + gamma(l) * r2; };
  detail::verify_corner_block(g, z, d.lambda0, 2e-9);
  return g;
}

/// Schur-class block F_j with F_j(0) vanishing on the diagonal and on the
/// branch-side corner, and F_j(lambda0) carrying the pair (y_j/C, y_{n-j}/C)
/// on the diagonal with determinant q.
inline MatFunc construct_Fj(const SchwarzDatum& d, int j) {
  const int n = d.y0.n;
  if (j < 1 || j > n / 2) throw error(errc::out_of_range, "construct_Fj: index j");
  const auto rp = detail::role_pair(d.y0, j);
  const double c = static_cast<double>(binom(n, j));
  const Cplx lambda0 = d.lambda0;
  const Cplx q0 = d.y0.q;
  const Cplx pd = rp.a * rp.b - c * c * q0;
  if (detail::branch_sup_value(d, j) > std::abs(lambda0) + kMarginBand)
    throw error(errc::condition_failed, "construct_Fj: interpolation bound fails for this index");

  MatFunc core;
  if (std::abs(pd) <= kTolDegenerate) {
    const Cplx ca = rp.a / (c * lambda0);
    const Cplx cb = rp.b / (c * lambda0);
    core = [=](Cplx l) { return Mat2::diagonal(ca * l, cb * l); };
  } else {
    const Mat2 z = build_Zj(d, j);
    const MatFunc g = (op_norm(z) < 1.0 - 1e-9) ? construct_G(d, j) : construct_G_boundary(d, j);
    core = [=](Cplx l) { return g(l) * Mat2::diagonal(l, 1.0); };
  }
  MatFunc f;
  if (rp.primary) {
    f = core;
  } else {
    f = [=](Cplx l) {
      const Mat2 m = core(l);
      return Mat2{m.a22, m.a21, m.a12, m.a11};
    };
  }

  const Mat2 f0 = f(0.0);
  const Mat2 fl = f(lambda0);
  const Cplx tgt11 = comp(d.y0, j) / c;
  const Cplx tgt22 = comp(d.y0, n - j) / c;
  const Cplx off = rp.primary ? f0.a21 : f0.a12;
  if (!(std::abs(f0.a11) <= 1e-9 && std::abs(f0.a22) <= 1e-9 && std::abs(off) <= 1e-9 &&
        std::abs(det2(f0)) <= 1e-9))
    throw error(errc::endpoint_violation, "construct_Fj: origin pattern violated");
  if (!(std::abs(fl.a11 - tgt11) <= 1e-8 && std::abs(fl.a22 - tgt22) <= 1e-8 &&
        std::abs(det2(fl) - q0) <= 1e-8))
    throw error(errc::endpoint_violation, "construct_Fj: endpoint violated");
  return f;
}

/// Components of the family point read off one block: binomial-weighted
/// diagonal entries and the determinant (with the averaged middle component
/// in even dimension).
inline std::vector<Cplx> pi_lift(int n, const Mat2& b) {
  std::vector<Cplx> out(static_cast<std::size_t>(n));
  const int k = n / 2;
  if (n % 2 == 1) {
    for (int j = 1; j <= k; ++j) {
      const double c = static_cast<double>(binom(n, j));
      out[static_cast<std::size_t>(j - 1)] = c * b.a11;
      out[static_cast<std::size_t>(n - j - 1)] = c * b.a22;
    }
  } else {
    for (int j = 1; j <= k - 1; ++j) {
      const double c = static_cast<double>(binom(n, j));
      out[static_cast<std::size_t>(j - 1)] = c * b.a11;
      out[static_cast<std::size_t>(n - j - 1)] = c * b.a22;
    }
    out[static_cast<std::size_t>(k - 1)] =
        static_cast<double>(binom(n, k)) * 0.5 * (b.a11 + b.a22);
  }
  out[static_cast<std::size_t>(n - 1)] = det2(b);
  return out;
}

/// Analytic interpolant psi with psi(0) = 0 and psi(lambda0) = y0, available
/// on the proportional slice. Endpoints and the disc-grid range are verified
/// at construction.
inline Interpolant synthesize_interpolant(const SchwarzDatum& d) {
  validate(d);
  const int n = d.y0.n;
  if (!in_Jn(d.y0))
    throw error(errc::not_in_jn, "synthesize_interpolant: target is outside the slice");
  for (int j = 1; j <= n / 2; ++j)
    if (detail::branch_sup_value(d, j) > std::abs(d.lambda0) + kMarginBand)
      throw error(errc::condition_failed, "synthesize_interpolant: interpolation bound fails");

  const MatFunc f = construct_Fj(d, 1);
  Interpolant psi;
  psi.n = n;
  psi.blocks = {f};
  psi.eval = [f, n](Cplx l) { return pi_lift(n, f(l)); };

  const auto at0 = psi.eval(0.0);
  for (const Cplx& cval : at0)
    if (!(std::abs(cval) <= 1e-10))
      throw error(errc::endpoint_violation, "synthesize_interpolant: psi(0) != 0");
  const auto atl = psi.eval(d.lambda0);
  for (int i = 0; i < n - 1; ++i)
    if (!(std::abs(atl[static_cast<std::size_t>(i)] - comp(d.y0, i + 1)) <= 1e-8))
      throw error(errc::endpoint_violation, "synthesize_interpolant: psi(lambda0) misses y0");
  if (!(std::abs(atl[static_cast<std::size_t>(n - 1)] - d.y0.q) <= 1e-8))
    throw error(errc::endpoint_violation, "synthesize_interpolant: psi(lambda0) misses q");

  for (const Cplx& l : disc_grid(8, 8, 0.999)) {
    const auto val = psi.eval(l);
    TildePoint p{n, std::vector<Cplx>(val.begin(), val.end() - 1), val.back()};
    const double m = tilde_condition4_margin(p);
    if (m < -1e-8)
      throw error(errc::condition_failed, "synthesize_interpolant: range left the closure");
    if (std::abs(l) <= 1.0 - 1e-3 && m <= kMarginBand)
      throw error(errc::condition_failed, "synthesize_interpolant: interior range not strict");
  }
  return psi;
}

/// Solution of the parameter system behind the norm-bound condition (11).
struct ParamSolveResult {
  bool feasible = false;
  bool singular = false;
  double preamble_margin = 0.0;          // |lambda0| - |q|
  std::vector<double> pair_margins;      // binom - |beta_j| - |beta_pair|
  BetaVector beta;
  double residual = 0.0;                 // worst equation residual
};

/// Solve the conjugate-linear 2x2 system of condition (11) for each pair.
/// Even dimension uses the (beta_1..beta_n) indexing with pair (j, n+1-j).
inline ParamSolveResult solve_beta_cond11(const SchwarzDatum& d) {
  validate(d.y0);
  const int n = d.y0.n;
  const Cplx l0 = d.lambda0;
  const Cplx q = d.y0.q;
  const double al = std::abs(l0), aq = std::abs(q);

  ParamSolveResult r;
  r.preamble_margin = al - aq;
  const int beta_len = (n % 2 == 1) ? n - 1 : n;
  r.beta = BetaVector{n, std::vector<Cplx>(static_cast<std::size_t>(beta_len), Cplx(0.0))};
  if (r.preamble_margin < -kMarginBand) {
    r.feasible = false;
    return r;
  }

  const double disc = al * al - aq * aq;
  double worst_resid = 0.0;
  for (int j = 1; j <= n / 2; ++j) {
    const int pair = (n % 2 == 1) ? n - j : n + 1 - j;
    const Cplx yj = comp(d.y0, j);
    const Cplx ynj = comp(d.y0, n - j);
    const bool primary = std::abs(ynj) <= std::abs(yj);
    Cplx bj, bp;
    if (std::abs(disc) > 1e-12) {
      if (primary) {
        bp = (al * al * ynj - q * std::conj(yj)) / disc;
        bj = (yj - std::conj(bp) * q) / l0;
      } else {
        bj = (al * al * yj - q * std::conj(ynj)) / disc;
        bp = (ynj - std::conj(bj) * q) / l0;
      }
    } else {
      r.singular = true;
      if (primary) {
        bj = 0.0;
        bp = ynj;
      } else {
        bp = 0.0;
        bj = yj;
      }
    }
    // residuals of the two interpolation equations
    Cplx e1, e2;
    if (primary) {
      e1 = yj - (bj * l0 + std::conj(bp) * q);
      e2 = ynj * l0 - (bp * l0 + std::conj(bj) * q);
    } else {
      e1 = yj * l0 - (bj * l0 + std::conj(bp) * q);
      e2 = ynj - (bp * l0 + std::conj(bj) * q);
    }
    worst_resid = std::max({worst_resid, std::abs(e1), std::abs(e2)});
    r.beta.beta[static_cast<std::size_t>(j - 1)] = bj;
    r.beta.beta[static_cast<std::size_t>(pair - 1)] = bp;
    const double c = static_cast<double>(binom(n, j));
    r.pair_margins.push_back(c - (std::abs(bj) + std::abs(bp)));
  }
  r.residual = worst_resid;
  if (r.singular && worst_resid > 1e-9) {
    r.feasible = false;
    return r;
  }
  double m = r.preamble_margin;
  for (double pm : r.pair_margins) m = std::min(m, pm);
  r.feasible = m >= -kMarginBand;
  return r;
}

struct ReportOptions {
  bool constructive_check = true;  // attempt the block construction for cond 5
  int bidisc_grid_points = 1024;
};

/// Evaluate conditions (2)-(11) with numeric margins for a datum. All the
/// conditions are closed inequalities; a condition holds when its margin is
/// >= -1e-9.
inline SchwarzReport schwarz_report(const SchwarzDatum& d, const ReportOptions& opt = {}) {
  validate(d);
  const int n = d.y0.n;
  const Cplx l0 = d.lambda0;
  const double al = std::abs(l0);
  const Cplx q = d.y0.q;
  const double inf = std::numeric_limits<double>::infinity();

  SchwarzReport rep;
  rep.n = n;
  rep.lambda0 = l0;
  rep.jn_member = in_Jn(d.y0);

  // (2): all fractional maps bounded by |lambda0|
  double m2 = inf;
  for (int j = 1; j <= n - 1; ++j) {
    try {
      m2 = std::min(m2, al - d_norm(j, d.y0));
    } catch (const error&) {
      m2 = -kMarginSentinel;  // sup is unbounded on the closed disc
    }
  }
  rep.cond[2] = {m2 >= -kMarginBand, clamp_margin(m2)};

  double m3 = inf, m6 = inf, m7 = inf, m8 = inf, m9 = al - std::abs(q), m10 = inf;
  for (int j = 1; j <= n / 2; ++j) {
    const auto rp = detail::role_pair(d.y0, j);
    rep.branch_primary.push_back(rp.primary);
    const double c = static_cast<double>(binom(n, j));
    const Cplx pd = rp.a * rp.b - c * c * q;
    const double apd = std::abs(pd);
    const double aa = std::abs(rp.a), ab = std::abs(rp.b), aq = std::abs(q);

    m3 = std::min(m3, al - detail::branch_sup_value(d, j));
    if (apd <= kTolDegenerate) {
      m6 = std::min(m6, al - c * std::abs(rp.a - std::conj(rp.b) * q) / (c * c - ab * ab));
    } else {
      m6 = std::min(m6, al - (c * std::abs(rp.a - std::conj(rp.b) * q) + apd) / (c * c - ab * ab));
    }
    m7 = std::min(m7, detail::bidisc_margin(c * l0, rp.a, rp.b * l0, c * q,
                                            opt.bidisc_grid_points));
    m8 = std::min(m8, -(aa * aa - al * al * ab * ab + c * c * aq * aq - c * c * al * al +
                        2.0 * c * std::abs(al * al * rp.b - std::conj(rp.a) * q)));
    m9 = std::min(m9, c * c * al * al -
                          (aa * aa + al * al * ab * ab - c * c * aq * aq + 2.0 * al * apd));
    m10 = std::min(m10, c * al * al - (std::abs(al * al * rp.b - std::conj(rp.a) * q) +
                                       al * std::abs(rp.a - std::conj(rp.b) * q) + c * aq * aq));
  }
  rep.cond[3] = {m3 >= -kMarginBand, clamp_margin(m3)};

  const TildePoint lifted = lift_tilde(d.y0, l0);
  const double m4 = tilde_condition4_margin(lifted);
  rep.cond[4] = {m4 >= -kMarginBand, clamp_margin(m4)};

  // (5): constructive block existence; attempted only when (3) holds
  if (rep.cond[3].holds && opt.constructive_check) {
    bool ok = true;
    try {
      for (int j = 1; j <= n / 2; ++j) construct_Fj(d, j);
    } catch (const error&) {
      ok = false;
    }
    rep.cond[5] = {ok, clamp_margin(m3)};
  } else {
    rep.cond[5] = {false, clamp_margin(m3)};
  }

  rep.cond[6] = {m6 >= -kMarginBand, clamp_margin(m6)};
  rep.cond[7] = {m7 >= -kMarginBand, clamp_margin(m7)};
  rep.cond[8] = {m8 >= -kMarginBand, clamp_margin(m8)};
  rep.cond[9] = {m9 >= -kMarginBand, clamp_margin(m9)};
  rep.cond[10] = {m10 >= -kMarginBand, clamp_margin(m10)};

  const ParamSolveResult ps = solve_beta_cond11(d);
  double m11 = ps.preamble_margin;
  for (double pm : ps.pair_margins) m11 = std::min(m11, pm);
  if (ps.singular && ps.residual > 1e-9) m11 = std::min(m11, -ps.residual);
  rep.cond[11] = {ps.feasible, clamp_margin(m11)};
  if (ps.feasible) rep.beta = ps.beta;

  // consistency over the equivalent set {3,4,6,7,8,9,10,11}
  const int ids[] = {3, 4, 6, 7, 8, 9, 10, 11};
  int ref = 3;
  for (int id : ids)
    if (std::abs(rep.cond[id].margin) > std::abs(rep.cond[ref].margin)) ref = id;
  rep.consistent = true;
  for (int id : ids)
    if (rep.cond[id].holds != rep.cond[ref].holds &&
        std::abs(rep.cond[id].margin) > kMarginBand)
      rep.consistent = false;
  return rep;
}

/// Boundary sup of the rational membership function against |lambda0|.
struct CostaraBound {
  double sup = 0.0;
  bool holds = false;
};

inline CostaraBound costara_schwarz_bound(Cplx lambda0, const SymPoint& s0,
                                          const GridSpec& grid = {}) {
  const double al = std::abs(lambda0);
  if (al <= 0.0 || al >= 1.0)
    throw error(errc::invalid_point, "costara_schwarz_bound: lambda0 must lie in the punctured disc");
  const MembershipVerdict v = membership_sym(s0, Closure::open, grid);
  if (!v.member_open)
    throw error(errc::invalid_point, "costara_schwarz_bound: point must lie in the open domain");
  const double sup = 1.0 - v.condition_values.at("costara_sup").margin;
  return {sup, sup <= al + kTolEq};
}

/// Closed form of the scaled test matrix together with its determinant
/// factorization data for pair j.
struct KzIdentity {
  Mat2 scaled;        // K_Z(|lambda0|) det(1 - Z*Z), evaluated in closed form
  double k, kj, knj;  // determinant factors: det = -(k - kj)(k - knj)
  double xj, xnj;     // slack ratios, >= 2 under the interpolation bound
};

inline KzIdentity kz_identity(const SchwarzDatum& d, int j) {
  const int n = d.y0.n;
  if (j < 1 || j > n / 2) throw error(errc::out_of_range, "kz_identity: index j");
  const auto rp = detail::role_pair(d.y0, j);
  const double c = static_cast<double>(binom(n, j));
  const Cplx q = d.y0.q;
  const Cplx l0 = d.lambda0;
  const double al = std::abs(l0);
  const Cplx pd = rp.a * rp.b - c * c * q;
  const double apd = std::abs(pd);
  if (apd <= kTolDegenerate)
    throw error(errc::degenerate_product, "kz_identity: product equals C^2 q");
  const Cplx w = std::sqrt(pd / (c * c * l0));
  const double aa2 = std::norm(rp.a) / (c * c);
  const double ab2 = std::norm(rp.b) / (c * c);
  const double aq2 = std::norm(q);
  const double gpd = apd / (c * c);
  const double lam_sum = al + 1.0 / al;

  KzIdentity out;
  out.scaled.a11 = 1.0 - aa2 - ab2 + aq2 - gpd * lam_sum;
  out.scaled.a12 = (1.0 - al * al) * (w + (q / l0) * std::conj(w));
  out.scaled.a21 = (1.0 - al * al) * (std::conj(w) + std::conj(q / l0) * w);
  out.scaled.a22 = -al * al + aa2 + ab2 - aq2 / (al * al) + gpd * lam_sum;
  out.k = 2.0 * gpd;
  out.kj = al * (1.0 - aa2 - ab2 / (al * al) + aq2 / (al * al));
  out.knj = al * (1.0 - aa2 / (al * al) - ab2 + aq2 / (al * al));
  out.xj = out.kj / gpd;
  out.xnj = out.knj / gpd;
  return out;
}

}  // namespace symdisc
