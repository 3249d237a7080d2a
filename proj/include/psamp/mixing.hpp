#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "psamp/dist.hpp"
#include "psamp/matrix.hpp"
#include "psamp/rational.hpp"

namespace psamp {

// Caps for exact matrix powers. Rational entries of P^t grow with t, so both
// the horizon and the per-entry bit size are budgeted; exceeding either
// raises ResourceError.
struct PowerBudget {
  std::uint64_t max_t = std::uint64_t{1} << 20;
  std::size_t max_entry_bits = std::size_t{1} << 22;
};

// Per-analysis-session cache of P^(2^k); assembles arbitrary exact powers by
// repeated squaring. Not shared across threads.
class PowerCache {
 public:
  explicit PowerCache(RationalMatrix P, PowerBudget budget = {});

  const RationalMatrix& base() const { return pow2_.at(0); }
  std::size_t dim() const { return base().rows(); }
  const PowerBudget& budget() const { return budget_; }

  RationalMatrix power(std::uint64_t t);

  // e_start * P^t by iterated row-by-matrix products; used when only one
  // start state's distribution is needed.
  std::vector<Rational> row_power(std::size_t start, std::uint64_t t) const;

 private:
  const RationalMatrix& pow2(unsigned k);
  void check_bits(const RationalMatrix& m) const;

  PowerBudget budget_;
  std::map<unsigned, RationalMatrix> pow2_;
};

// q_t(x,y) = p^t(x,y) / pi(y). Requires pi to have full support.
RationalMatrix q_ratio_matrix(PowerCache& cache, const FiniteDist& pi, std::uint64_t t);

enum class LpIndex { l1, l2, linf };

// Worst-start lp(pi) distance of q_t(x,.) from 1. For l2 the returned value
// is the exact square D2(t)^2, which keeps everything rational; comparisons
// against D1 and Dinf square both sides.
Rational d_p_at(PowerCache& cache, const FiniteDist& pi, std::uint64_t t, LpIndex which);

enum class CertProvenance { brute_exact, spectral_gap, ell1_bound, user_supplied };

std::string provenance_name(CertProvenance p);
std::optional<CertProvenance> provenance_from_name(const std::string& name);

// A claim that Dinf(t) <= eps for some chain. brute_exact certificates are
// machine-checked at construction; the other provenances are trusted but
// audited, and a false one surfaces downstream as CertificateViolation.
struct MixingCertificate {
  std::uint64_t t = 0;
  Rational eps;
  CertProvenance provenance = CertProvenance::user_supplied;
  std::optional<double> gap;
  std::string note;
};

// Smallest t found with Dinf(t) <= eps, by doubling then binary search with
// every candidate checked exactly. Dinf need not be monotone for general
// chains, so the answer is re-verified against an independent recomputation
// before the certificate is issued.
MixingCertificate tau_uniform_brute(PowerCache& cache, const FiniteDist& pi,
                                    const Rational& eps);

// t = 2*ceil((1/gamma_star) * ln(1/(eps*pi_star))), the even-time form.
// Caller asserts reversibility and the gap lower bound.
MixingCertificate tau_from_gap(double gamma_star, const Rational& pi_star,
                               const Rational& eps);

// t = T * ceil(ln(1/(eps*pi_star))) from a trusted l1 quarter-mixing time T.
MixingCertificate tau_from_ell1(std::uint64_t T, const Rational& pi_star,
                                const Rational& eps);

// min { t : D1(t) <= 1/4 }, exactly.
std::uint64_t ell1_quarter_time(PowerCache& cache, const FiniteDist& pi);

struct SpectralGapEstimate {
  double gamma_star = 0.0;
  // |lambda_max - 1| of the symmetrized kernel; a sanity figure, the
  // estimate stays non-certified either way.
  double residual = 0.0;
};

// Floating-point absolute spectral gap of the pi-symmetrized kernel.
// Requires exact reversibility. Non-certified: downstream users must
// tolerate CertificateViolation.
SpectralGapEstimate spectral_gap_estimate(const RationalMatrix& P, const FiniteDist& pi);

// Dinf(2t) == D2(t)^2 == max_x q_2t(x,x) - 1, all as exact rationals.
// Refuses non-reversible chains.
bool verify_l2_linf_identity(PowerCache& cache, const FiniteDist& pi, std::uint64_t t);

// Dinf(t) <= D1(t) / pi_star, exactly. False signals an implementation bug.
bool verify_linf_from_l1(PowerCache& cache, const FiniteDist& pi, std::uint64_t t);

}  // namespace psamp
