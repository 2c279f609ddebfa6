#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace symdisc {

using Cplx = std::complex<double>;

/// Default absolute tolerance for equality-style checks.
inline constexpr double kTolEq = 1e-9;
/// Band used to separate strict (open) from non-strict (closed) verdicts.
inline constexpr double kMarginBand = 1e-9;
/// Absolute band for the degenerate-product test y_j * y_{n-j} == C^2 q.
inline constexpr double kTolDegenerate = 1e-12;

enum class errc {
  out_of_range,
  not_psd,
  singular_matrix,
  contraction_violation,
  pole_at_z,
  pole_hit,
  outside_formula_domain,
  boundary_parameter,
  norm_certificate_failed,
  degenerate_product,
  det_test_failed,
  rank_one_infeasible,
  not_in_jn,
  condition_failed,
  infeasible_data,
  endpoint_violation,
  singular_system,
  invalid_point,
  parse_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::out_of_range: return "OutOfRange";
    case errc::not_psd: return "NotPSD";
    case errc::singular_matrix: return "SingularMatrix";
    case errc::contraction_violation: return "ContractionViolation";
    case errc::pole_at_z: return "PoleAtZ";
    case errc::pole_hit: return "PoleHit";
    case errc::outside_formula_domain: return "OutsideFormulaDomain";
    case errc::boundary_parameter: return "BoundaryParameter";
    case errc::norm_certificate_failed: return "NormCertificateFailed";
    case errc::degenerate_product: return "DegenerateProduct";
    case errc::det_test_failed: return "DetTestFailed";
    case errc::rank_one_infeasible: return "RankOneInfeasible";
    case errc::not_in_jn: return "NotInJn";
    case errc::condition_failed: return "ConditionFailed";
    case errc::infeasible_data: return "InfeasibleData";
    case errc::endpoint_violation: return "EndpointViolation";
    case errc::singular_system: return "SingularSystem";
    case errc::invalid_point: return "InvalidPoint";
    case errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

inline bool is_finite(Cplx z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Margins are stored in JSON reports; unbounded values (a vacuous condition
/// or a pole inside the disc) are clamped to a finite sentinel so every
/// report round-trips exactly.
inline constexpr double kMarginSentinel = 1e300;

inline double clamp_margin(double m) {
  if (std::isnan(m)) return -kMarginSentinel;
  if (m > kMarginSentinel) return kMarginSentinel;
  if (m < -kMarginSentinel) return -kMarginSentinel;
  return m;
}

/// Exact binomial coefficient. Restricted to n <= 62 so the result and all
/// intermediates stay within 64 bits.
inline std::int64_t binom(int n, int j) {
  if (n < 1 || n > 62 || j < 0 || j > n)
    throw error(errc::out_of_range, "binom(" + std::to_string(n) + "," + std::to_string(j) + ")");
  if (j > n - j) j = n - j;
  unsigned __int128 r = 1;
  for (int i = 1; i <= j; ++i) {
    r = r * static_cast<unsigned>(n - j + i) / static_cast<unsigned>(i);
  }
  return static_cast<std::int64_t>(r);
}

/// Disc automorphism w -> (a + w) / (1 + conj(a) w); maps 0 to a.
inline Cplx mobius_disc(Cplx a, Cplx w) {
  return (a + w) / (1.0 + std::conj(a) * w);
}

/// Blaschke factor exchanging 0 and lambda0.
inline Cplx blaschke(Cplx lambda0, Cplx lambda) {
  return (lambda0 - lambda) / (1.0 - std::conj(lambda0) * lambda);
}

/// Pseudo-hyperbolic distance |a - b| / |1 - conj(a) b| on the unit disc.
inline double pseudo_hyperbolic(Cplx a, Cplx b) {
  return std::abs(a - b) / std::abs(1.0 - std::conj(a) * b);
}

}  // namespace symdisc
