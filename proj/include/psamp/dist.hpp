#pragma once

#include <optional>
#include <vector>

#include "psamp/rational.hpp"
#include "psamp/state_space.hpp"

namespace psamp {

// Exact probability vector over an indexed state space. Immutable; masses
// are validated to be nonnegative and to sum to exactly 1.
class FiniteDist {
 public:
  FiniteDist(StateSpace space, std::vector<Rational> mass);

  static FiniteDist point_mass(StateSpace space, std::size_t at);
  static FiniteDist uniform(StateSpace space);

  const StateSpace& space() const noexcept { return space_; }
  std::size_t size() const noexcept { return mass_.size(); }
  const Rational& mass(std::size_t i) const;
  const std::vector<Rational>& masses() const noexcept { return mass_; }
  std::vector<std::size_t> support() const;

  // Two distributions compare equal when they have the same size and
  // identical masses; labels are reporting sugar and do not participate.
  bool operator==(const FiniteDist& other) const { return mass_ == other.mass_; }

 private:
  StateSpace space_;
  std::vector<Rational> mass_;
};

// max over supp(p) of p(x)/r(x). Requires supp(p) subseteq supp(r); a
// violation raises SupportError. Always >= 1 for genuine distributions.
Rational d_max(const FiniteDist& p, const FiniteDist& r);

// Variant that reports an unbounded ratio as nullopt instead of throwing.
std::optional<Rational> d_max_allow_infinite(const FiniteDist& p, const FiniteDist& r);

// max over supp(p) of |p(x)/r(x) - 1|. Requires supp(p) subseteq supp(r).
Rational d_inf(const FiniteDist& p, const FiniteDist& r);

// The distribution h completing the mixture r = p/(1+eps) + eps*h/(1+eps),
// computed exactly. Raises CertificateViolation if any h(z) < 0, which means
// the promised bound d_max(p, r) <= 1+eps was false.
FiniteDist residual(const FiniteDist& p, const FiniteDist& r, const Rational& eps);

// l1 distance sum_x |p(x) - r(x)|, in [0, 2]. Twice the usual total
// variation; callers wanting TV halve it.
Rational tv_distance(const FiniteDist& p, const FiniteDist& r);

}  // namespace psamp
