#pragma once

#include <vector>

#include "psamp/dist.hpp"
#include "psamp/matrix.hpp"
#include "psamp/rational.hpp"
#include "psamp/state_space.hpp"

namespace psamp {

struct StationaryVector {
  FiniteDist dist;
  // Minimum mass over the support of dist.
  Rational pi_star;
};

// Exact stationary distribution of a row-stochastic matrix, from the system
// pi P = pi, sum(pi) = 1, solved by fraction-free (Bareiss) elimination so
// intermediate bit sizes stay polynomial. Rejects inputs whose solution
// space has dimension > 1 (MultiplicityError) rather than picking one of
// many stationary distributions.
StationaryVector solve_stationary(const RationalMatrix& P);
StationaryVector solve_stationary(const RationalMatrix& P, const StateSpace& space);

// Exact detailed-balance check: pi(x) P(x,y) == pi(y) P(y,x) for all x, y.
bool check_reversible(const RationalMatrix& P, const FiniteDist& pi);

// dist(x) = weight(x) / sum(weights), exactly. Weights must be nonnegative
// and not all zero.
FiniteDist gibbs_from_weights(StateSpace space, const std::vector<Rational>& weights);

}  // namespace psamp
