#include <catch2/catch_amalgamated.hpp>

#include "symdisc/fuzz.hpp"
#include "symdisc/oracles.hpp"

using namespace symdisc;
using Catch::Matchers::WithinAbs;

namespace {

const TildePoint kWorked{3, {Cplx(1.5), Cplx(0.75)}, Cplx(0.5)};
const TildePoint kWitness{3, {Cplx(2.5), Cplx(1.25)}, Cplx(0.5)};

double grid_sup_fractional(int j, const TildePoint& y) {
  return sup_on_torus([&](Cplx z) { return fractional_map(j, z, y); }).value;
}

// Coefficients of prod (X - z_i), highest degree first.
std::vector<Cplx> expand_poly(const std::vector<Cplx>& roots) {
  std::vector<Cplx> c{1.0};
  for (const Cplx& r : roots) {
    std::vector<Cplx> next(c.size() + 1, Cplx(0.0));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i] += c[i];
      next[i + 1] -= c[i] * r;
    }
    c = std::move(next);
  }
  return c;
}

}  // namespace

TEST_CASE("fractional_map") {
  SECTION("origin collapses to zero") {
    const TildePoint origin{3, {Cplx(0.0), Cplx(0.0)}, Cplx(0.0)};
    CHECK(fractional_map(1, Cplx(0.3, 0.2), origin) == Cplx(0.0));
  }
  SECTION("worked point: boundary sup values") {
    CHECK_THAT(grid_sup_fractional(1, kWorked), WithinAbs(0.8, 1e-6));
    CHECK_THAT(grid_sup_fractional(2, kWorked), WithinAbs(0.5, 1e-6));
  }
  SECTION("pole is reported") {
    // y_{n-j} z = C at z = 3 / y2; shrink the components so the pole lands
    // on a representable point
    const TildePoint y{3, {Cplx(1.0), Cplx(3.0)}, Cplx(0.1)};
    CHECK_THROWS_AS(fractional_map(1, Cplx(1.0), y), error);
  }
  SECTION("degenerate product branch is constant") {
    TildePoint y{3, {Cplx(1.2, 0.3), Cplx(0.5, -0.4)}, Cplx(0.0)};
    y.q = comp(y, 1) * comp(y, 2) / 9.0;
    const Cplx v1 = fractional_map(1, Cplx(0.1), y);
    const Cplx v2 = fractional_map(1, Cplx(-0.7, 0.2), y);
    CHECK_THAT(std::abs(v1 - comp(y, 1) / 3.0), WithinAbs(0.0, 1e-14));
    CHECK_THAT(std::abs(v1 - v2), WithinAbs(0.0, 1e-14));
  }
}

TEST_CASE("d_norm") {
  CHECK_THAT(d_norm(1, kWorked), WithinAbs(0.8, 1e-12));
  CHECK_THAT(d_norm(2, kWorked), WithinAbs(0.5, 1e-12));
  CHECK_THAT(d_norm(1, kWitness), WithinAbs(16.0 / 17.0, 1e-12));
  CHECK(d_norm(1, kWitness) < 1.0);
  CHECK(d_norm(1, kWitness) > 0.0);

  const TildePoint origin{4, {Cplx(0.0), Cplx(0.0), Cplx(0.0)}, Cplx(0.0)};
  for (int j = 1; j <= 3; ++j) CHECK(d_norm(j, origin) == 0.0);

  SECTION("outside the formula domain") {
    const TildePoint y{2, {Cplx(2.5)}, Cplx(0.3)};
    CHECK_THROWS_AS(d_norm(1, y), error);
  }
  SECTION("matches the grid sup on sampled members") {
    for (int n = 2; n <= 5; ++n) {
      for (int i = 0; i < 60; ++i) {
        SplitMix64 rng = SplitMix64::substream(2000 + n, i);
        const TildePoint y = sample_tilde_one(n, rng);
        for (int j = 1; j <= n - 1; ++j)
          CHECK_THAT(d_norm(j, y), WithinAbs(grid_sup_fractional(j, y), 1e-6));
      }
    }
    CHECK_THAT(d_norm(1, kWitness), WithinAbs(grid_sup_fractional(1, kWitness), 1e-6));
  }
  SECTION("degenerate branch matches the grid sup") {
    TildePoint y{3, {Cplx(1.2, 0.3), Cplx(0.5, -0.4)}, Cplx(0.0)};
    y.q = comp(y, 1) * comp(y, 2) / 9.0;
    CHECK_THAT(d_norm(1, y), WithinAbs(grid_sup_fractional(1, y), 1e-6));
  }
}

TEST_CASE("membership_tilde") {
  SECTION("worked point and separation witness are inside") {
    CHECK(membership_tilde(kWorked).member_open);
    CHECK(membership_tilde(kWitness).member_open);
  }
  SECTION("origin for several dimensions") {
    for (int n = 2; n <= 8; ++n) {
      const TildePoint origin{n, std::vector<Cplx>(static_cast<std::size_t>(n - 1), Cplx(0.0)),
                              Cplx(0.0)};
      const MembershipVerdict v = membership_tilde(origin);
      CHECK(v.member_open);
      CHECK(v.member_closed);
    }
  }
  SECTION("closed boundary when the first component tops out") {
    const TildePoint y{3, {Cplx(3.0), Cplx(0.0)}, Cplx(0.0)};
    const MembershipVerdict v = membership_tilde(y, Closure::closed);
    CHECK_FALSE(v.member_open);
    CHECK(v.member_closed);
    CHECK_THAT(v.condition_values.at("7").margin, WithinAbs(0.0, 1e-12));
  }
  SECTION("open implies closed on mixed samples") {
    for (int i = 0; i < 300; ++i) {
      SplitMix64 rng = SplitMix64::substream(2100, i);
      const TildePoint y =
          (i % 2 == 0) ? sample_tilde_one(3, rng) : sample_bounding_box_one(3, rng);
      const MembershipVerdict v = membership_tilde(y);
      if (v.member_open) CHECK(v.member_closed);
    }
  }
  SECTION("beta-generated samples are members") {
    for (int n = 2; n <= 6; ++n)
      for (const TildePoint& y : sample_tilde(n, 100, 2200 + static_cast<std::uint64_t>(n)))
        CHECK(membership_tilde(y).member_open);
  }
}

TEST_CASE("membership characterizations agree") {
  for (int n = 2; n <= 6; ++n) {
    const FuzzReport rep = thm22_suite(n, 1500, 2300 + static_cast<std::uint64_t>(n));
    INFO((rep.events.empty() ? std::string() : rep.events.front()));
    CHECK(rep.hard_failures == 0);
    CHECK(rep.checked == 1500);
  }
}

TEST_CASE("beta_recover") {
  SECTION("separation witness has the closed-form parameters") {
    const BetaVector b = beta_recover(kWitness);
    CHECK_THAT(std::abs(b.beta[0] - Cplx(2.5)), WithinAbs(0.0, 1e-13));
    CHECK_THAT(std::abs(b.beta[1]), WithinAbs(0.0, 1e-13));
  }
  SECTION("round trip through the defining relation") {
    for (int n = 2; n <= 6; ++n) {
      for (int i = 0; i < 100; ++i) {
        SplitMix64 rng = SplitMix64::substream(2400 + n, i);
        const TildePoint y = sample_tilde_one(n, rng);
        const BetaVector b = beta_recover(y);
        for (int j = 1; j <= n - 1; ++j) {
          const Cplx back = b.beta[static_cast<std::size_t>(j - 1)] +
                            std::conj(b.beta[static_cast<std::size_t>(n - j - 1)]) * y.q;
          CHECK_THAT(std::abs(back - comp(y, j)), WithinAbs(0.0, 1e-12));
        }
      }
    }
  }
  SECTION("boundary parameter is rejected") {
    const TildePoint y{2, {Cplx(0.2)}, Cplx(1.0)};
    CHECK_THROWS_AS(beta_recover(y), error);
  }
}

TEST_CASE("build_Bj") {
  SECTION("origin gives the zero matrix") {
    const TildePoint origin{3, {Cplx(0.0), Cplx(0.0)}, Cplx(0.0)};
    const Mat2 b = build_Bj(origin, 1);
    CHECK_THAT(std::sqrt(frob_sq(b)), WithinAbs(0.0, 1e-15));
  }
  SECTION("worked point") {
    const Mat2 b = build_Bj(kWorked, 1);
    CHECK_THAT(std::abs(b.a11 - Cplx(0.5)), WithinAbs(0.0, 1e-15));
    CHECK_THAT(std::abs(b.a22 - Cplx(0.25)), WithinAbs(0.0, 1e-15));
    CHECK_THAT(std::abs(b.a12 - b.a21), WithinAbs(0.0, 0.0));
    CHECK_THAT(std::abs(det2(b) - Cplx(0.5)), WithinAbs(0.0, 1e-12));
  }
  SECTION("norm certificate on sampled members") {
    int checked = 0;
    for (int i = 0; i < 2500; ++i) {
      SplitMix64 rng = SplitMix64::substream(2500, i);
      const TildePoint y = sample_tilde_one(3, rng);
      for (int j = 1; j <= 2; ++j)
        for (int branch : {+1, -1}) {
          const Mat2 b = build_Bj(y, j, branch);
          CHECK_THAT(std::abs(det2(b) - y.q), WithinAbs(0.0, 1e-12));
          CHECK(op_norm(b) <= 1.0 + 1e-9);
          ++checked;
        }
    }
    CHECK(checked == 10000);
  }
  SECTION("points outside the closure are rejected") {
    const TildePoint y{3, {Cplx(3.5), Cplx(0.0)}, Cplx(0.0)};
    CHECK_THROWS_AS(build_Bj(y, 1), error);
  }
}

TEST_CASE("sym_map") {
  SECTION("zeros and symmetry") {
    const SymPoint z = sym_map({Cplx(0.0), Cplx(0.0), Cplx(0.0)});
    CHECK(z.s[0] == Cplx(0.0));
    CHECK(z.s[1] == Cplx(0.0));
    CHECK(z.p == Cplx(0.0));
    const Cplx t{0.3, -0.1};
    const SymPoint s = sym_map({t, t, t});
    CHECK_THAT(std::abs(s.s[0] - 3.0 * t), WithinAbs(0.0, 1e-15));
    CHECK_THAT(std::abs(s.s[1] - 3.0 * t * t), WithinAbs(0.0, 1e-15));
    CHECK_THAT(std::abs(s.p - t * t * t), WithinAbs(0.0, 1e-15));
  }
  SECTION("coefficients match the expanded polynomial") {
    SplitMix64 rng(2600);
    for (int n = 1; n <= 6; ++n) {
      for (int i = 0; i < 50; ++i) {
        std::vector<Cplx> roots(static_cast<std::size_t>(n));
        for (auto& r : roots) r = uniform_disc(rng, 2.0);
        const SymPoint s = sym_map(roots);
        const std::vector<Cplx> c = expand_poly(roots);
        // c[k] = (-1)^k e_k
        for (int k = 1; k <= n; ++k) {
          const Cplx ek = (k < n) ? s.s[static_cast<std::size_t>(k - 1)] : s.p;
          const double sign = (k % 2) ? -1.0 : 1.0;
          CHECK_THAT(std::abs(c[static_cast<std::size_t>(k)] - sign * ek), WithinAbs(0.0, 1e-12));
        }
      }
    }
  }
}

TEST_CASE("costara_f") {
  SECTION("zero point gives the zero function") {
    const SymPoint origin{3, {Cplx(0.0), Cplx(0.0)}, Cplx(0.0)};
    CHECK(costara_f(origin, Cplx(0.4, 0.1)) == Cplx(0.0));
  }
  SECTION("dimension one is the negated last component") {
    const SymPoint s{1, {}, Cplx(0.3, -0.6)};
    CHECK_THAT(std::abs(costara_f(s, Cplx(0.9)) + s.p), WithinAbs(0.0, 1e-15));
  }
  SECTION("bounded by one on the closed disc for members") {
    const SymPoint s = sym_map({Cplx(0.3), Cplx(0.0, -0.4), Cplx(0.5)});
    const double sup = sup_on_torus([&](Cplx z) { return costara_f(s, z); }).value;
    CHECK(sup < 1.0);
  }
}

TEST_CASE("membership_sym") {
  SECTION("separation of the two families") {
    CHECK(membership_tilde(kWitness).member_open);
    const SymPoint s{3, {Cplx(2.5), Cplx(1.25)}, Cplx(0.5)};
    CHECK_FALSE(membership_sym(s).member_open);
  }
  SECTION("origin and sampled members") {
    const SymPoint origin{3, {Cplx(0.0), Cplx(0.0)}, Cplx(0.0)};
    CHECK(membership_sym(origin).member_open);
    for (const SymPoint& s : sample_gn(3, 150, 1.0, 2700)) CHECK(membership_sym(s).member_open);
  }
  SECTION("symmetrized points are members of the extended family") {
    for (int n = 2; n <= 5; ++n)
      for (const SymPoint& s : sample_gn(n, 100, 1.0, 2800 + static_cast<std::uint64_t>(n))) {
        const TildePoint y{n, s.s, s.p};
        CHECK(membership_tilde(y).member_open);
      }
  }
}

TEST_CASE("dimension two: the families coincide") {
  const FuzzReport rep = g2_agreement_suite(2000, 2900);
  INFO((rep.events.empty() ? std::string() : rep.events.front()));
  CHECK(rep.hard_failures == 0);
}

TEST_CASE("scale_equiv") {
  SECTION("unit scale is the identity") {
    const SymPoint s = sym_map({Cplx(0.2), Cplx(0.4, 0.1), Cplx(-0.3)});
    const SymPoint r = scale_equiv(s, Cplx(1.0));
    CHECK_THAT(std::abs(r.s[0] - s.s[0]) + std::abs(r.s[1] - s.s[1]) + std::abs(r.p - s.p),
               WithinAbs(0.0, 1e-15));
  }
  SECTION("homogeneity") {
    SplitMix64 rng(3000);
    const Cplx lam{0.4, 0.3};
    for (int i = 0; i < 50; ++i) {
      std::vector<Cplx> w(3);
      for (auto& wi : w) wi = uniform_disc(rng);
      std::vector<Cplx> lw(3);
      for (int k = 0; k < 3; ++k) lw[static_cast<std::size_t>(k)] = lam * w[static_cast<std::size_t>(k)];
      const SymPoint scaled = sym_map(lw);
      const SymPoint back = scale_equiv(scaled, lam);
      const SymPoint expect = sym_map(w);
      CHECK_THAT(std::abs(back.s[0] - expect.s[0]), WithinAbs(0.0, 1e-12));
      CHECK_THAT(std::abs(back.s[1] - expect.s[1]), WithinAbs(0.0, 1e-12));
      CHECK_THAT(std::abs(back.p - expect.p), WithinAbs(0.0, 1e-12));
    }
  }
  SECTION("scaled families and the fuzz suite") {
    const FuzzReport rep = scaling_suite(400, 3100);
    INFO((rep.events.empty() ? std::string() : rep.events.front()));
    CHECK(rep.hard_failures == 0);
  }
  SECTION("zero scale is rejected") {
    const SymPoint s{2, {Cplx(0.1)}, Cplx(0.2)};
    CHECK_THROWS_AS(scale_equiv(s, Cplx(0.0)), error);
  }
}

TEST_CASE("in_Jn") {
  SECTION("every low-dimension member is in the slice") {
    for (int i = 0; i < 100; ++i) {
      SplitMix64 rng = SplitMix64::substream(3200, i);
      CHECK(in_Jn(sample_tilde_one(2, rng)));
      CHECK(in_Jn(sample_tilde_one(3, rng)));
    }
  }
  SECTION("five dimensions: proportionality is required") {
    TildePoint y{5, {Cplx(0.5), Cplx(1.0), Cplx(1.2), Cplx(0.25)}, Cplx(0.1)};
    CHECK_FALSE(in_Jn(y));  // y2 != 2 y1
    y.y[1] = 2.0 * y.y[0];
    y.y[2] = 2.0 * y.y[3];
    CHECK(in_Jn(y));
  }
  SECTION("four dimensions: averaged middle component") {
    const Cplx a{0.21, 0.05}, b{-0.17, 0.11};
    const TildePoint y{4, {4.0 * a, 3.0 * (a + b), 4.0 * b}, Cplx(0.2)};
    CHECK(in_Jn(y));
    TildePoint bad = y;
    bad.y[1] += Cplx(1e-6);
    CHECK_FALSE(in_Jn(bad));
  }
}

TEST_CASE("lift_tilde") {
  SECTION("origin is fixed") {
    const TildePoint origin{3, {Cplx(0.0), Cplx(0.0)}, Cplx(0.0)};
    const TildePoint t = lift_tilde(origin, Cplx(0.5));
    for (const Cplx& c : t.y) CHECK(c == Cplx(0.0));
    CHECK(t.q == Cplx(0.0));
  }
  SECTION("worked datum") {
    const TildePoint t = lift_tilde(kWorked, Cplx(-0.8));
    CHECK_THAT(std::abs(t.y[0] - Cplx(-1.875)), WithinAbs(0.0, 1e-14));
    CHECK_THAT(std::abs(t.y[1] - Cplx(0.75)), WithinAbs(0.0, 1e-14));
    CHECK_THAT(std::abs(t.q - Cplx(-0.625)), WithinAbs(0.0, 1e-14));
  }
  SECTION("even dimension lifts one dimension up") {
    const TildePoint y{2, {Cplx(0.6, 0.2)}, Cplx(0.1)};
    const Cplx l0{0.5, 0.25};
    const TildePoint t = lift_tilde(y, l0);
    REQUIRE(t.n == 3);
    CHECK_THAT(std::abs(t.y[0] - 1.5 * y.y[0] / l0), WithinAbs(0.0, 1e-14));
    CHECK_THAT(std::abs(t.y[1] - 1.5 * y.y[0]), WithinAbs(0.0, 1e-14));
    CHECK_THAT(std::abs(t.q - y.q / l0), WithinAbs(0.0, 1e-14));
  }
}

TEST_CASE("sup ordering under the branch rule") {
  const FuzzReport rep = lemma41_suite(2000, 3300);
  INFO((rep.events.empty() ? std::string() : rep.events.front()));
  CHECK(rep.hard_failures == 0);
}
