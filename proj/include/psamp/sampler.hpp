#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "psamp/bits.hpp"
#include "psamp/chain.hpp"
#include "psamp/dist.hpp"
#include "psamp/mixing.hpp"
#include "psamp/stationary.hpp"

namespace psamp {

// The approximate sampler A_eps: run the chain from `start` for `t` steps,
// where (t, eps) come from one MixingCertificate.
struct ApproxSamplerSpec {
  std::shared_ptr<const ChainModel> chain;
  std::size_t start = 0;
  std::uint64_t t = 0;
  Rational eps;
};

enum class SampleBranch { cheap, expensive_mixture, expensive_reject_accept, reject_retry };

std::string branch_name(SampleBranch b);

// Every branch except `cheap` consulted an expensive oracle: reject_retry
// only happens after a rejected oracle-backed acceptance coin.
inline bool is_expensive(SampleBranch b) noexcept { return b != SampleBranch::cheap; }

// One drawn state plus telemetry.
struct SampleReport {
  std::size_t state = 0;
  SampleBranch branch = SampleBranch::cheap;
  std::uint64_t steps_simulated = 0;
  std::uint64_t bits_used = 0;
  bool oracle_invoked = false;
  std::uint64_t iterations = 1;
};

// Exact oracle artifacts (stationary vector, the row 1_start P^t, the
// residual distribution) computed at most once and immutable afterwards.
// First-writer-wins; concurrent readers see the identical exact values.
class OracleCache {
 public:
  explicit OracleCache(PowerBudget budget = {});

  const StationaryVector& stationary(const ChainModel& chain);
  const FiniteDist& output_row(const ChainModel& chain, std::size_t start, std::uint64_t t);
  // Residual h of (output_row, stationary, eps) together with its sampler.
  const CategoricalSampler& residual_sampler(const ChainModel& chain, std::size_t start,
                                             std::uint64_t t, const Rational& eps);

  // Pre-computes artifacts without changing any output law (the cached
  // values are exact, so warm and cold runs consume identical bits).
  void prewarm(const ChainModel& chain, std::size_t start, std::uint64_t t,
               const Rational& eps);
  void seed_stationary(const StationaryVector& pi);
  bool warm() const;

 private:
  const StationaryVector& stationary_locked(const ChainModel& chain);
  const FiniteDist& output_row_locked(const ChainModel& chain, std::size_t start,
                                      std::uint64_t t);

  PowerBudget budget_;
  mutable std::mutex mu_;
  std::optional<StationaryVector> pi_;
  std::optional<FiniteDist> row_;
  std::optional<std::pair<std::size_t, std::uint64_t>> row_key_;
  std::optional<Rational> residual_eps_;
  std::optional<FiniteDist> residual_;
  std::optional<CategoricalSampler> residual_sampler_;
};

// Algorithm: flip y ~ Ber(1/(1+eps)). If y = 1 run the chain t steps and
// return X_t; otherwise compute pi, the exact row of P^t and the residual h,
// and return an exact draw from h. Output law is exactly pi whenever the
// certificate (t, eps) is true; a false certificate either leaves the
// mixture identity intact (still exact) or surfaces as CertificateViolation
// from the residual.
SampleReport perfect_sample_mixture(const ApproxSamplerSpec& spec, OracleCache& oracles,
                                    BitSource& bits);

// Rejection variant: per iteration draw x by simulating t steps, accept with
// Ber((1-eps)/(1+eps)); otherwise compute r(x) and p(x) for that single x
// and accept with Ber((1/(2 eps)) (r(x)/p(x) - (1-eps))). Requires eps <=
// 1/2. Per-iteration return mass of x is exactly r(x)/(1+eps). An acceptance
// probability outside [0,1] raises CertificateViolation. Once the oracles
// are warm the two coins are fused into a single exact three-way draw with
// the same outcome law; telemetry keeps the two-coin attribution.
SampleReport perfect_sample_reject(const ApproxSamplerSpec& spec, OracleCache& oracles,
                                   BitSource& bits);

enum class SamplerMode { mixture, reject };
enum class CertSource { brute, gap, ell1, user };

struct SamplerOptions {
  std::optional<Rational> eps_override;  // default eps = 1/|Omega|^4
  // CertSource::user
  std::optional<std::uint64_t> user_t;
  // CertSource::gap: analytic lower bound; when absent the gap is estimated
  // numerically (still non-certified).
  std::optional<double> gamma_star;
  // CertSource::ell1: trusted quarter-mixing time; when absent it is
  // computed exactly.
  std::optional<std::uint64_t> ell1_T;
  PowerBudget budget;
};

// A reusable perfect sampler for the stationary distribution of a chain,
// assembled per the mixing certificate of the chosen source. Shareable
// across threads provided each draw supplies its own BitSource.
class McPerfectSampler {
 public:
  static McPerfectSampler build(std::shared_ptr<const ChainModel> chain, std::size_t start,
                                SamplerMode mode, CertSource source,
                                SamplerOptions options = {});

  SampleReport draw(BitSource& bits) const;

  const MixingCertificate& certificate() const noexcept { return cert_; }
  // eps the algorithm actually runs at. For reject mode this is
  // cert.eps/(1 - cert.eps): a true Dinf bound of eps only constrains the
  // acceptance ratio r(x)/p(x) to [1/(1+eps), 1/(1-eps)], so the rejection
  // coin runs at the inflated value to keep its parameter inside [0,1].
  const Rational& executed_eps() const noexcept { return spec_.eps; }
  SamplerMode mode() const noexcept { return mode_; }
  std::size_t start() const noexcept { return spec_.start; }
  std::uint64_t steps() const noexcept { return spec_.t; }
  const ChainModel& chain() const noexcept { return *spec_.chain; }
  const StationaryVector& target() const;

 private:
  McPerfectSampler(ApproxSamplerSpec spec, MixingCertificate cert, SamplerMode mode,
                   PowerBudget budget, StationaryVector pi);

  ApproxSamplerSpec spec_;
  MixingCertificate cert_;
  SamplerMode mode_;
  mutable OracleCache cache_;
};

struct TheoremBound {
  std::optional<std::uint64_t> ell1_T;
  std::optional<double> gamma_star;
};

// Wires tau_from_ell1 or tau_from_gap with eps = 1/|Omega|^4 into a mixture
// sampler; the gap route requires exact reversibility.
McPerfectSampler main_theorem_sampler(std::shared_ptr<const ChainModel> chain,
                                      std::size_t start, const TheoremBound& bound,
                                      SamplerOptions options = {});

}  // namespace psamp
