#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace psamp {

// Simple undirected graph on vertices 0..n-1, with an optional bipartition
// for the matching chains.
struct GraphSpec {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  struct Bipartition {
    std::vector<std::size_t> left;
    std::vector<std::size_t> right;
  };
  std::optional<Bipartition> bipartition;

  // Throws ModelError on loops, duplicate or out-of-range edges, or a
  // bipartition inconsistent with the edge set.
  void validate() const;

  std::vector<std::vector<std::size_t>> adjacency() const;
  std::size_t max_degree() const;
  bool connected() const;

  static GraphSpec complete(std::size_t n);
  static GraphSpec path(std::size_t n);
  static GraphSpec cycle(std::size_t n);
  // Complete bipartite K_{n,n} with left = 0..n-1, right = n..2n-1.
  static GraphSpec complete_bipartite(std::size_t n);
};

// Strict partial order on elements 0..n-1 given by generating relations
// a < b; must be acyclic.
struct Poset {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> less_than;

  void validate() const;
  // less[a][b] == true iff a < b in the transitive closure.
  std::vector<std::vector<bool>> closure() const;
};

}  // namespace psamp
