// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "symdisc/fuzz.hpp"
#include "symdisc/io.hpp"
#include "symdisc/nonuniqueness.hpp"
#include "symdisc/oracles.hpp"

using namespace symdisc;

namespace {

int g_failures = 0;

struct Criterion {
  int id;
  std::string label;
  std::function<bool(std::string&)> run;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool check(bool ok, std::string& why, const std::string& what) {
  if (!ok && why.empty()) why = what;
  return ok;
}

const TildePoint kWorked{3, {Cplx(1.5), Cplx(0.75)}, Cplx(0.5)};
const SchwarzDatum kWorkedDatum{Cplx(-0.8), kWorked};

bool criterion1(std::string& why) {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  ok &= check(std::abs(d_norm(1, kWorked) - 0.8) <= 1e-12, why, "closed-form sup != 0.8");
  const double g1 =
      sup_on_torus([&](Cplx z) { return fractional_map(1, z, kWorked); }).value;
  const double g2 =
      sup_on_torus([&](Cplx z) { return fractional_map(2, z, kWorked); }).value;
  ok &= check(std::abs(d_norm(1, kWorked) - g1) <= 1e-6, why, "grid oracle disagrees for j=1");
  ok &= check(std::abs(d_norm(2, kWorked) - 0.5) <= 1e-6, why, "sup for j=2 != 0.5");
  ok &= check(std::abs(g2 - 0.5) <= 1e-6, why, "grid oracle disagrees for j=2");
  ok &= check(seconds_since(t0) < 1.0, why, "runtime exceeded 1 s");
  return ok;
}

bool criterion2(std::string& why) {
  bool ok = true;
  const Mat2 zy = build_Zj(kWorkedDatum, 1);
  ok &= check(std::abs(zy.a12 * zy.a12 - Cplx(15.0 / 32.0)) <= 1e-15, why, "w^2 != 15/32");
  ok &= check(std::abs(op_norm(zy) - 1.0) <= 1e-10, why, "norm of the pinned matrix != 1");
  const auto [l1, l2] = eigen2(zy);
  ok &= check(std::abs(l1 - Cplx(-1.0)) <= 1e-10 && std::abs(l2 - Cplx(0.625)) <= 1e-10, why,
              "eigenvalues != (-1, 5/8)");
  const Mat2 u = build_Uy();
  ok &= check(std::sqrt(frob_sq(adjoint(u) * u - Mat2::identity())) <= 1e-12, why,
              "diagonalizer is not unitary");
  const Mat2 rec = u * Mat2::diagonal(-1.0, 0.625) * adjoint(u);
  ok &= check(std::sqrt(frob_sq(rec - zy)) <= 1e-12, why, "diagonalization mismatch");
  const Mat2 g0 = u * Mat2::diagonal(-1.0, 0.3) * adjoint(u);
  ok &= check(std::abs(g0.a22 - Cplx((10.0 * 0.3 - 3.0) / 13.0)) <= 1e-12 &&
                  std::abs(g0.a22) <= 1e-12,
              why, "corner formula fails at 3/10");
  return ok;
}

bool criterion3(std::string& why) {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::vector<std::vector<Cplx>> probes;
  for (int i = 0; i < 16; ++i) {
    const Cplx zeta = std::polar(0.9, 2.0 * std::numbers::pi * i / 16.0);
    const Interpolant psi = family_member(zeta);
    const auto at0 = psi(0.0);
    for (const Cplx& c : at0)
      ok &= check(std::abs(c) <= 1e-10, why, "psi(0) != 0");
    const auto atl = psi(Cplx(-0.8));
    ok &= check(std::abs(atl[0] - Cplx(1.5)) <= 1e-9 && std::abs(atl[1] - Cplx(0.75)) <= 1e-9 &&
                    std::abs(atl[2] - Cplx(0.5)) <= 1e-9,
                why, "psi(-4/5) misses the target");
    for (const Cplx& l : disc_grid(16, 32, 0.999)) {
      const auto v = psi(l);
      const TildePoint p{3, {v[0], v[1]}, v[2]};
      ok &= check(tilde_condition4_margin(p) >= -1e-8, why, "family member left the closure");
    }
    probes.push_back(psi(Cplx(1.0 / 3.0)));
  }
  for (std::size_t a = 0; a < probes.size(); ++a)
    for (std::size_t b = a + 1; b < probes.size(); ++b) {
      double dist = 0.0;
      for (int k = 0; k < 3; ++k)
        dist += std::norm(probes[a][static_cast<std::size_t>(k)] -
                          probes[b][static_cast<std::size_t>(k)]);
      ok &= check(std::sqrt(dist) > 1e-8, why, "two family members coincide at the probe");
    }
  ok &= check(seconds_since(t0) < 10.0, why, "runtime exceeded 10 s");
  return ok;
}

bool criterion4(std::string& why) {
  bool ok = true;
  const TildePoint wt{3, {Cplx(2.5), Cplx(1.25)}, Cplx(0.5)};
  const SymPoint ws{3, {Cplx(2.5), Cplx(1.25)}, Cplx(0.5)};
  ok &= check(membership_tilde(wt).member_open, why, "witness not in the extended family");
  const MembershipVerdict vs = membership_sym(ws);
  ok &= check(!vs.member_open, why, "witness wrongly inside the symmetrized family");
  const double sup = 1.0 - vs.condition_values.at("costara_sup").margin;
  ok &= check(sup >= 1.0 - 1e-9, why, "witness sup below 1");
  const FuzzReport rep = g2_agreement_suite(10000, 20250840);
  ok &= check(rep.hard_failures == 0 && rep.checked == 10000, why,
              rep.events.empty() ? "dimension-two tests disagree" : rep.events.front());
  return ok;
}

bool criterion5(std::string& why) {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  for (int n = 2; n <= 6; ++n) {
    const FuzzReport rep = thm22_suite(n, 10000, 20250850 + static_cast<std::uint64_t>(n));
    ok &= check(rep.hard_failures == 0 && rep.checked == 10000, why,
                rep.events.empty() ? "characterizations disagree" : rep.events.front());
  }
  ok &= check(seconds_since(t0) < 60.0, why, "runtime exceeded 60 s");
  return ok;
}

bool criterion6(std::string& why) {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  for (int n = 2; n <= 5; ++n) {
    const FuzzReport rep = thm37_suite(n, 10000, 20250860 + static_cast<std::uint64_t>(n));
    ok &= check(rep.hard_failures == 0 && rep.checked == 10000, why,
                rep.events.empty() ? "condition lattice broke" : rep.events.front());
  }
  ok &= check(seconds_since(t0) < 300.0, why, "runtime exceeded 5 min");
  return ok;
}

bool criterion7(std::string& why) {
  const FuzzReport rep = lemma36_suite(1000, 20250870);
  bool ok = check(rep.hard_failures == 0, why,
                  rep.events.empty() ? "identity failed" : rep.events.front());
  ok &= check(rep.checked == 1000, why, "did not reach 1000 strict samples");
  return ok;
}

bool criterion8(std::string& why) {
  const FuzzReport rep = lemma41_suite(10000, 20250880);
  bool ok = check(rep.hard_failures == 0 && rep.checked == 10000, why,
                  rep.events.empty() ? "ordering violated" : rep.events.front());
  return ok;
}

bool criterion9(std::string& why) {
  const FuzzReport rep = scaling_suite(2000, 20250890);
  return check(rep.hard_failures == 0 && rep.checked == 2000, why,
               rep.events.empty() ? "scaling equivalence failed" : rep.events.front());
}

bool criterion10(std::string& why) {
  const FuzzReport rep = costara_necessity_suite(2000, 20250900);
  return check(rep.hard_failures == 0 && rep.checked == 2000, why,
               rep.events.empty() ? "necessity bound failed" : rep.events.front());
}

void run(const Criterion& c) {
  const auto t0 = std::chrono::steady_clock::now();
  std::string why;
  bool ok = false;
  try {
    ok = c.run(why);
  } catch (const std::exception& e) {
    why = e.what();
  }
  const double dt = seconds_since(t0);
  if (ok) {
    std::printf("[PASS] criterion %2d (%6.2fs): %s\n", c.id, dt, c.label.c_str());
  } else {
    ++g_failures;
    std::printf("[FAIL] criterion %2d (%6.2fs): %s -- %s\n", c.id, dt, c.label.c_str(),
                why.c_str());
  }
  std::fflush(stdout);
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "worked example: closed-form sup values against the grid oracle", criterion1},
      {2, "worked example: matrix facts", criterion2},
      {3, "sixteen distinct interpolants with verified range", criterion3},
      {4, "separation witness and dimension-two agreement", criterion4},
      {5, "membership characterizations agree, n = 2..6, 1e4 samples each", criterion5},
      {6, "interpolation-condition lattice and synthesis, n = 2..5, 1e4 each", criterion6},
      {7, "scaled test-matrix identity on 1e3 strict samples", criterion7},
      {8, "sup ordering inequality on 1e4 samples", criterion8},
      {9, "scaling equivalence in both directions", criterion9},
      {10, "boundary-sup necessity and dimension-two sufficiency", criterion10},
  };
  const auto t0 = std::chrono::steady_clock::now();
  for (const Criterion& c : criteria) run(c);
  std::printf("%d/%zu criteria passed in %.1fs\n", static_cast<int>(criteria.size()) - g_failures,
              criteria.size(), seconds_since(t0));
  return g_failures == 0 ? 0 : 1;
}
