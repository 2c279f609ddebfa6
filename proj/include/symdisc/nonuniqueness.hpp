#pragma once

#include "symdisc/grid.hpp"
#include "symdisc/scalar_schur.hpp"
#include "symdisc/schwarz.hpp"

namespace symdisc {

/// The worked two-point datum with a whole family of interpolants:
/// lambda0 = -4/5, target (3/2, 3/4, 1/2).
namespace worked {
inline const Cplx kLambda0{-0.8, 0.0};
inline const Cplx kY1{1.5, 0.0};
inline const Cplx kY2{0.75, 0.0};
inline const Cplx kQ{0.5, 0.0};
inline const Cplx kG0{0.3, 0.0};    // required g(0)
inline const Cplx kG1{0.625, 0.0};  // required g(lambda0)
inline TildePoint target() { return TildePoint{3, {kY1, kY2}, kQ}; }
}  // namespace worked

/// Two-point scalar data c0 = g(0), c1 = g(lambda0) plus the family
/// parameter zeta.
struct ScalarSchurSpec {
  Cplx c0;
  Cplx c1;
  Cplx lambda0;
  Cplx zeta;
};

/// Member of the scalar interpolation family for the given data; endpoints and
/// Schur bound are verified on a 512-point disc grid before returning.
inline ScalarFunc scalar_np_family(const ScalarSchurSpec& spec) {
  ScalarFunc g = schur_two_point(spec.c0, spec.c1, spec.lambda0, spec.zeta);
  if (!(std::abs(g(0.0) - spec.c0) <= 1e-12 && std::abs(g(spec.lambda0) - spec.c1) <= 1e-12))
    throw error(errc::infeasible_data, "scalar_np_family: endpoint check failed");
  for (const Cplx& l : disc_grid(16, 32, 0.999))
    if (!(std::abs(g(l)) <= 1.0 + kTolEq))
      throw error(errc::infeasible_data, "scalar_np_family: Schur bound violated");
  return g;
}

/// Unitary diagonalizer of the worked example's norm-one matrix, with the
/// eigenvector phases fixed so the second components are real.
inline Mat2 build_Uy() {
  const double w = std::sqrt(15.0 / 32.0);
  const double r39 = std::sqrt(39.0);
  const double r65 = std::sqrt(65.0);
  const double r2 = std::sqrt(2.0);
  return {Cplx(8.0 * w / r39), Cplx(4.0 * r2 * w / r65),
          Cplx(-3.0 / r39), Cplx(5.0 * r2 / r65)};
}

/// Interpolant of the worked family attached to a scalar Schur function g
/// with g(0) = 3/10 and g(-4/5) = 5/8:
///   psi_g(l) = (3 F(l)_11, 3 F(l)_22, det F(l)),
///   F(l) = U diag(-1, g(l)) U^* diag(l, 1).
/// The weights are the binomial factors of the three-dimensional lift; the
/// third component reduces to -l g(l).
inline Interpolant family_interpolant(const ScalarFunc& g) {
  if (!(std::abs(g(0.0) - worked::kG0) <= 1e-10 &&
        std::abs(g(worked::kLambda0) - worked::kG1) <= 1e-10))
    throw error(errc::endpoint_violation, "family_interpolant: g misses its endpoints");
  const Mat2 u = build_Uy();
  const Mat2 us = adjoint(u);
  MatFunc f = [u, us, g](Cplx l) {
    const Mat2 h = Mat2::diagonal(-1.0, g(l));
    return u * h * us * Mat2::diagonal(l, 1.0);
  };
  Interpolant psi;
  psi.n = 3;
  psi.blocks = {f};
  psi.eval = [f](Cplx l) { return pi_lift(3, f(l)); };

  const auto at0 = psi.eval(0.0);
  for (const Cplx& c : at0)
    if (!(std::abs(c) <= 1e-10))
      throw error(errc::endpoint_violation, "family_interpolant: psi(0) != 0");
  const auto atl = psi.eval(worked::kLambda0);
  if (!(std::abs(atl[0] - worked::kY1) <= 1e-9 && std::abs(atl[1] - worked::kY2) <= 1e-9 &&
        std::abs(atl[2] - worked::kQ) <= 1e-9))
    throw error(errc::endpoint_violation, "family_interpolant: psi(lambda0) misses the target");
  return psi;
}

/// Family member for a given zeta with the worked endpoints.
inline Interpolant family_member(Cplx zeta) {
  const ScalarSchurSpec spec{worked::kG0, worked::kG1, worked::kLambda0, zeta};
  return family_interpolant(scalar_np_family(spec));
}

}  // namespace symdisc
