#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "psamp/chain.hpp"
#include "psamp/dist.hpp"
#include "psamp/graph.hpp"
#include "psamp/rational.hpp"

namespace psamp {

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

// A concrete chain instance together with its exact reference stationary
// distribution.
struct GalleryChain {
  std::shared_ptr<const ChainModel> chain;
  FiniteDist pi;
  std::string kind;
};

// 1/2-lazy random walk: self-loop 1/2, remaining mass uniform over
// neighbors. Stationary mass proportional to degree.
GalleryChain lazy_walk(const GraphSpec& graph);

struct ColoringOptions {
  std::size_t enumeration_cap = kDefaultEnumerationCap;
  // The q >= maxdeg+2 precondition and the reachability check guarantee an
  // irreducible heat-bath chain. Opting out keeps deliberately frozen
  // instances constructible for identity-level experiments.
  bool allow_reducible = false;
};

// Heat-bath Glauber dynamics on proper q-colorings: pick a vertex uniformly,
// recolor uniformly among the colors absent from its neighborhood. Uniform
// stationary distribution.
GalleryChain coloring_glauber(const GraphSpec& graph, unsigned q, ColoringOptions options = {});

// Single-site heat-bath dynamics for the 2-spin model with interaction
// matrix ((beta,1),(1,gamma)) and activity lambda, on the configurations of
// positive weight. Hardcore is (beta,gamma) = (1,0); Ising is beta = gamma.
GalleryChain two_spin_glauber(const GraphSpec& graph, const Rational& beta,
                              const Rational& gamma, const Rational& lambda,
                              std::size_t enumeration_cap = kDefaultEnumerationCap);

// Hardcore shorthand: two_spin_glauber with beta = 1, gamma = 0.
GalleryChain hardcore_glauber(const GraphSpec& graph, const Rational& lambda,
                              std::size_t enumeration_cap = kDefaultEnumerationCap);

// Lazy adjacent-transposition walk on the linear extensions of a poset:
// with probability 1/2 hold, else pick an adjacent position pair uniformly
// and swap when the result is still a linear extension. Uniform stationary.
GalleryChain linear_extension_chain(const Poset& poset,
                                    std::size_t enumeration_cap = kDefaultEnumerationCap);

// Down-up walk on an explicitly enumerated basis family: drop a uniformly
// random basis element, then add back a uniformly random element that
// completes a basis. Uniform stationary over the bases.
GalleryChain bases_exchange_chain_from_bases(std::size_t ground_size,
                                             const std::vector<std::vector<std::size_t>>& bases,
                                             std::string kind = "bases-exchange");

// Graphic instantiation: bases are the spanning trees of the graph.
GalleryChain bases_exchange_chain(const GraphSpec& graph,
                                  std::size_t enumeration_cap = kDefaultEnumerationCap);

// All spanning trees as sorted edge-index lists.
std::vector<std::vector<std::size_t>> spanning_trees(const GraphSpec& graph,
                                                     std::size_t cap = kDefaultEnumerationCap);

// Cycle-basis Metropolis dynamics on the even subgraphs of a graph with
// weights beta^{|S|}: with probability 1/2 hold, else XOR a uniformly random
// fundamental cycle and accept with min(1, beta^{delta}). Single-edge flips
// do not preserve parity, the cycle moves do.
GalleryChain even_subgraph_chain(const GraphSpec& graph, const Rational& beta,
                                 std::size_t enumeration_cap = kDefaultEnumerationCap);

}  // namespace psamp
