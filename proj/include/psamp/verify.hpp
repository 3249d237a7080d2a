#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "psamp/chain.hpp"
#include "psamp/dist.hpp"
#include "psamp/mixing.hpp"
#include "psamp/rational.hpp"

namespace psamp {

// Outcome of an exact rational identity check. Never a tolerance.
struct IdentityCheck {
  bool pass = false;
  std::optional<std::size_t> offending_state;
  std::string detail;
};

// The mixture-law proof for one chain: with p = e_start P^t and h the
// residual against `target`, verifies p/(1+eps) + eps*h/(1+eps) == target
// entrywise. A negative residual mass reports the offending state instead of
// throwing.
IdentityCheck verify_mixture_identity(const ChainModel& chain, const FiniteDist& target,
                                      std::size_t start, std::uint64_t t, const Rational& eps,
                                      PowerBudget budget = {});

// The rejection-law proof: supp(target) covered by p, every acceptance
// probability (1/(2 eps))(target(x)/p(x) - (1-eps)) inside [0,1], the
// per-iteration return mass of every x exactly target(x)/(1+eps), and the
// total exactly 1/(1+eps).
IdentityCheck verify_reject_law(const ChainModel& chain, const FiniteDist& target,
                                std::size_t start, std::uint64_t t, const Rational& eps,
                                PowerBudget budget = {});

struct Chi2Result {
  double statistic = 0.0;
  std::size_t dof = 0;
  double p_value = 1.0;
  std::size_t pooled_bins = 0;
};

// Pearson goodness-of-fit of observed counts against an exact distribution.
// Bins with expected count below min_expected are pooled.
Chi2Result chi_square_gof(const std::vector<std::uint64_t>& counts, const FiniteDist& expected,
                          double min_expected = 5.0);

// (count - n p) / sqrt(n p (1-p)).
double binomial_z(std::uint64_t count, std::uint64_t n, double p);

}  // namespace psamp
