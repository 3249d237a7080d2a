#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "psamp/bits.hpp"
#include "psamp/matrix.hpp"
#include "psamp/rational.hpp"
#include "psamp/state_space.hpp"

namespace psamp {

inline constexpr std::size_t kDefaultDenseCap = 5000;

// A finite Markov chain: an enumerated state space plus one exact rational
// transition row per state. Immutable after construction and safe to share
// across threads; the per-row exact samplers are built eagerly.
class ChainModel {
 public:
  // Sparse row: (target index, probability) pairs with unique targets,
  // nonnegative probabilities, exact sum 1.
  using Row = std::vector<std::pair<std::size_t, Rational>>;
  // Optional custom step simulator; its outcome law must equal the row
  // exactly (testable by exhausting its bit-consumption tree).
  using StepSimulator = std::function<std::size_t(std::size_t, BitSource&)>;

  ChainModel(StateSpace space, std::vector<Row> rows);
  ChainModel(StateSpace space, std::vector<Row> rows, StepSimulator simulator);

  const StateSpace& space() const noexcept { return space_; }
  std::size_t size() const noexcept { return rows_.size(); }
  const Row& row(std::size_t i) const;

  // One exact step from state i.
  std::size_t step(std::size_t i, BitSource& bits) const;

 private:
  StateSpace space_;
  std::vector<Row> rows_;
  std::vector<CategoricalSampler> row_samplers_;
  StepSimulator simulator_;  // empty -> row sampler
};

// X_t of the chain started at X_0 = start; t = 0 returns start.
std::size_t simulate(const ChainModel& chain, std::size_t start, std::uint64_t t,
                     BitSource& bits);

// Densifies the rows. Refuses state spaces above the cap.
RationalMatrix transition_matrix(const ChainModel& chain,
                                 std::size_t dense_cap = kDefaultDenseCap);

// Reachability of every state from every state, over the directed graph of
// nonzero transitions.
bool is_irreducible(const ChainModel& chain);

// Some state holds in place with positive probability.
bool has_lazy_state(const ChainModel& chain);

}  // namespace psamp
