#pragma once

#include <functional>

#include "symdisc/common.hpp"

namespace symdisc {

using ScalarFunc = std::function<Cplx(Cplx)>;

/// One Schur-algorithm step for the two-point problem g(0) = c0,
/// g(lambda0) = c1 on the disc. The free contraction parameter zeta selects
/// a member of the solution family:
///
///   g(l)  = m_{c0}(l * g1(l)),   g1(l) = m_{w1}(zeta * B(l)),
///   w1    = m_{-c0}(c1) / lambda0,
///
/// with m_a the disc automorphism mapping 0 to a and B the Blaschke factor
/// exchanging 0 and lambda0. Feasible iff d(c0, c1) <= |lambda0|, tested
/// with the given slack.
inline ScalarFunc schur_two_point(Cplx c0, Cplx c1, Cplx lambda0, Cplx zeta,
                                  double feas_tol = 1e-12) {
  if (std::abs(lambda0) <= 0.0 || std::abs(lambda0) >= 1.0)
    throw error(errc::infeasible_data, "schur_two_point: lambda0 must be in D \\ {0}");
  if (std::abs(c0) > 1.0 + kTolEq || std::abs(c1) > 1.0 + kTolEq)
    throw error(errc::infeasible_data, "schur_two_point: target values must lie in the closed disc");
  if (std::abs(zeta) > 1.0 + kTolEq)
    throw error(errc::infeasible_data, "schur_two_point: |zeta| must be <= 1");
  if (!(pseudo_hyperbolic(c0, c1) <= std::abs(lambda0) + feas_tol))
    throw error(errc::infeasible_data, "schur_two_point: d(c0,c1) exceeds |lambda0|");
  const Cplx w1 = mobius_disc(-c0, c1) / lambda0;
  return [=](Cplx l) {
    const Cplx g1 = mobius_disc(w1, zeta * blaschke(lambda0, l));
    return mobius_disc(c0, l * g1);
  };
}

}  // namespace symdisc
