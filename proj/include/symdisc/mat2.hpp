#pragma once

#include <algorithm>
#include <utility>

#include "symdisc/common.hpp"

namespace symdisc {

struct Vec2 {
  Cplx x{}, y{};
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(Cplx c, Vec2 a) { return {c * a.x, c * a.y}; }

/// Hermitian inner product <a, b> = b^* a.
inline Cplx dot(Vec2 a, Vec2 b) {
  return a.x * std::conj(b.x) + a.y * std::conj(b.y);
}

inline double vec_norm(Vec2 a) {
  return std::sqrt(std::norm(a.x) + std::norm(a.y));
}

/// 2x2 complex matrix, row-major entries.
struct Mat2 {
  Cplx a11{}, a12{}, a21{}, a22{};

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static Mat2 zero() { return {}; }
  static Mat2 diagonal(Cplx d1, Cplx d2) { return {d1, 0.0, 0.0, d2}; }
};

inline Mat2 operator+(const Mat2& a, const Mat2& b) {
  return {a.a11 + b.a11, a.a12 + b.a12, a.a21 + b.a21, a.a22 + b.a22};
}
inline Mat2 operator-(const Mat2& a, const Mat2& b) {
  return {a.a11 - b.a11, a.a12 - b.a12, a.a21 - b.a21, a.a22 - b.a22};
}
inline Mat2 operator-(const Mat2& a) { return {-a.a11, -a.a12, -a.a21, -a.a22}; }
inline Mat2 operator*(Cplx c, const Mat2& a) {
  return {c * a.a11, c * a.a12, c * a.a21, c * a.a22};
}
inline Mat2 operator*(const Mat2& a, const Mat2& b) {
  return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
          a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
}

inline Mat2 adjoint(const Mat2& a) {
  return {std::conj(a.a11), std::conj(a.a21), std::conj(a.a12), std::conj(a.a22)};
}

inline Mat2 transpose(const Mat2& a) { return {a.a11, a.a21, a.a12, a.a22}; }

inline Cplx trace(const Mat2& a) { return a.a11 + a.a22; }

inline Cplx det2(const Mat2& a) { return a.a11 * a.a22 - a.a12 * a.a21; }

inline Vec2 apply(const Mat2& a, Vec2 v) {
  return {a.a11 * v.x + a.a12 * v.y, a.a21 * v.x + a.a22 * v.y};
}

/// Rank-one matrix u v^*.
inline Mat2 outer(Vec2 u, Vec2 v) {
  return {u.x * std::conj(v.x), u.x * std::conj(v.y),
          u.y * std::conj(v.x), u.y * std::conj(v.y)};
}

inline double frob_sq(const Mat2& a) {
  return std::norm(a.a11) + std::norm(a.a12) + std::norm(a.a21) + std::norm(a.a22);
}

inline bool is_finite(const Mat2& a) {
  return is_finite(a.a11) && is_finite(a.a12) && is_finite(a.a21) && is_finite(a.a22);
}

/// Largest singular value of a 2x2 matrix.
///
/// With f the squared Frobenius norm and d = |det|, the two squared singular
/// values are (f +- sqrt(f^2 - 4 d^2)) / 2.
inline double op_norm(const Mat2& m) {
  const double f = frob_sq(m);
  const double d = std::abs(det2(m));
  const double disc = std::sqrt(std::max(f * f - 4.0 * d * d, 0.0));
  return std::sqrt(0.5 * (f + disc));
}

/// Smallest singular value (same closed form, minus branch).
inline double op_norm_min(const Mat2& m) {
  const double f = frob_sq(m);
  const double d = std::abs(det2(m));
  const double disc = std::sqrt(std::max(f * f - 4.0 * d * d, 0.0));
  return std::sqrt(std::max(0.5 * (f - disc), 0.0));
}

/// Both eigenvalues, ordered by descending modulus; ties broken by ascending
/// principal argument.
inline std::pair<Cplx, Cplx> eigen2(const Mat2& m) {
  const Cplx tr = trace(m);
  const Cplx d = det2(m);
  Cplx disc = std::sqrt(tr * tr - 4.0 * d);
  // ensure tr and disc do not cancel
  if (std::real(std::conj(tr) * disc) < 0.0) disc = -disc;
  Cplx l1 = 0.5 * (tr + disc);
  Cplx l2 = (std::abs(l1) > 0.0) ? d / l1 : 0.5 * (tr - disc);
  const double m1 = std::abs(l1), m2 = std::abs(l2);
  bool swap;
  if (std::abs(m1 - m2) <= 1e-12 * std::max(1.0, std::max(m1, m2))) {
    swap = std::arg(l1) > std::arg(l2);
  } else {
    swap = m1 < m2;
  }
  if (swap) std::swap(l1, l2);
  return {l1, l2};
}

inline Mat2 inverse2(const Mat2& m) {
  const Cplx d = det2(m);
  if (std::abs(d) < 1e-300)
    throw error(errc::singular_matrix, "inverse2 of a singular matrix");
  const Cplx inv = 1.0 / d;
  return {inv * m.a22, -inv * m.a12, -inv * m.a21, inv * m.a11};
}

/// Eigen data of a Hermitian 2x2 matrix: real eigenvalues and orthonormal
/// eigenvectors.
struct HermEig2 {
  double lmin, lmax;
  Vec2 vmin, vmax;
};

inline HermEig2 hermitian_eig2(const Mat2& h) {
  const double mu = 0.5 * std::real(trace(h));
  const double delta = 0.5 * (std::real(h.a11) - std::real(h.a22));
  const double off = std::abs(h.a12);
  const double dd = std::hypot(delta, off);
  HermEig2 e;
  e.lmax = mu + dd;
  e.lmin = mu - dd;
  // eigenvector for lmax from the larger of the two null-space candidates
  Vec2 c1{h.a12, Cplx(e.lmax) - h.a11};
  Vec2 c2{Cplx(e.lmax) - h.a22, h.a21};
  Vec2 v = (vec_norm(c1) >= vec_norm(c2)) ? c1 : c2;
  double nv = vec_norm(v);
  if (nv < 1e-300) v = {1.0, 0.0}, nv = 1.0;  // multiple of identity
  e.vmax = (1.0 / nv) * v;
  e.vmin = {-std::conj(e.vmax.y), std::conj(e.vmax.x)};
  return e;
}

/// Hermitian PSD square root via the trace/det closed form
/// sqrt(H) = (H + sqrt(det) I) / sqrt(tr + 2 sqrt(det)).
///
/// Eigenvalues in [-1e-12, 0) are clamped to 0; anything below fails.
inline Mat2 herm_sqrt(const Mat2& m) {
  if (std::abs(m.a12 - std::conj(m.a21)) > kTolEq ||
      std::abs(m.a11.imag()) > kTolEq || std::abs(m.a22.imag()) > kTolEq)
    throw error(errc::not_psd, "herm_sqrt: input is not Hermitian");
  const Mat2 h = 0.5 * (m + adjoint(m));
  const HermEig2 e = hermitian_eig2(h);
  if (e.lmin < -1e-12)
    throw error(errc::not_psd, "herm_sqrt: negative eigenvalue " + std::to_string(e.lmin));
  const double s = std::sqrt(std::max(e.lmin * e.lmax, 0.0));
  const double t2 = std::max(e.lmin + e.lmax + 2.0 * s, 0.0);
  if (t2 <= 0.0) return Mat2::zero();
  const double t = std::sqrt(t2);
  return (1.0 / t) * (h + Mat2::diagonal(s, s));
}

/// Mobius transformation of the 2x2 matrix ball sending the strict
/// contraction z to 0:
///   (1 - z z^*)^{-1/2} (x - z) (1 - z^* x)^{-1} (1 - z^* z)^{1/2}.
inline Mat2 mobius_matrix(const Mat2& z, const Mat2& x) {
  if (!is_finite(z) || !is_finite(x))
    throw error(errc::contraction_violation, "mobius_matrix: non-finite input");
  if (op_norm(z) >= 1.0 - 1e-12)
    throw error(errc::contraction_violation, "mobius_matrix: |z| must be < 1");
  if (op_norm(x) > 1.0 + kTolEq)
    throw error(errc::contraction_violation, "mobius_matrix: |x| must be <= 1");
  const Mat2 id = Mat2::identity();
  const Mat2 zs = adjoint(z);
  const Mat2 p = inverse2(herm_sqrt(id - z * zs));
  const Mat2 s = herm_sqrt(id - zs * z);
  return p * (x - z) * inverse2(id - zs * x) * s;
}

/// Full SVD of a 2x2 complex matrix: m = s1 u1 v1^* + s2 u2 v2^*, s1 >= s2.
struct Svd2 {
  double s1, s2;
  Vec2 u1, u2;  // left singular vectors
  Vec2 v1, v2;  // right singular vectors
};

inline Svd2 svd2(const Mat2& m) {
  const Mat2 h = adjoint(m) * m;
  const HermEig2 e = hermitian_eig2(h);
  Svd2 r;
  r.s1 = std::sqrt(std::max(e.lmax, 0.0));
  r.s2 = std::sqrt(std::max(e.lmin, 0.0));
  r.v1 = e.vmax;
  r.v2 = e.vmin;
  if (r.s1 > 1e-150) {
    r.u1 = (1.0 / r.s1) * apply(m, r.v1);
  } else {
    r.u1 = {1.0, 0.0};
  }
  if (r.s2 > 1e-12 * std::max(r.s1, 1.0)) {
    r.u2 = (1.0 / r.s2) * apply(m, r.v2);
  } else {
    r.u2 = {-std::conj(r.u1.y), std::conj(r.u1.x)};
  }
  return r;
}

}  // namespace symdisc
