#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "psamp/bits.hpp"
#include "psamp/gallery.hpp"
#include "psamp/graph.hpp"
#include "psamp/rational.hpp"
#include "psamp/sampler.hpp"

namespace psamp {

// A matching of the complete bipartite closure K_{n,n}: match_of_u[u] is the
// matched right vertex of u, or npos when u is a hole. States are either
// perfect (no holes) or near-perfect (exactly one hole on each side).
struct MatchingState {
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> match_of_u;

  bool perfect() const;
  // (u, v) hole pair of a near-perfect matching.
  std::pair<std::size_t, std::size_t> holes() const;
  std::size_t edge_count() const;
};

// Single-phase weighted matching chain on perfect plus near-perfect
// matchings of the complete bipartite closure of a graph. Real edges carry
// weight 1, non-edges the penalty (default 1/n!); hole weights are the ideal
// w*(u,v) = lambda(P)/lambda(N(u,v)) computed by exact enumeration, times an
// optional scale for robustness experiments. Moves: propose a uniform pair
// (u,v) and apply the unique applicable remove/add/exchange, with Metropolis
// acceptance min(1, Lambda'/Lambda) and 1/2 laziness.
struct JsvInstance {
  GalleryChain gallery;
  std::size_t n = 0;
  std::vector<MatchingState> states;
  // lambda(M) per state and the Lambda weights defining pi.
  std::vector<Rational> lambda;
  std::vector<Rational> big_lambda;
  Rational lambda_perfect;                        // lambda(P)
  std::vector<std::vector<Rational>> lambda_hole; // lambda(N(u,v))
  std::vector<std::vector<Rational>> ideal_w;     // w*(u,v)
  std::vector<std::vector<Rational>> used_w;      // scale * w*(u,v)
  std::vector<bool> real_edge;                    // (u,v) in E, flattened u*n+v

  bool is_perfect(std::size_t state) const;
  // Perfect and free of penalty edges, i.e. a perfect matching of the input
  // graph.
  bool is_valid_perfect(std::size_t state) const;
  // Exact stationary mass of the perfect matchings / of one hole class.
  Rational pi_perfect() const;
  Rational pi_hole(std::size_t u, std::size_t v) const;
  // Exact stationary mass of the valid perfect matchings.
  Rational pi_valid_perfect() const;
};

struct JsvOptions {
  std::optional<Rational> edge_penalty;  // default 1/n!
  Rational weight_scale = 1;             // w = scale * w*
};

// graph must carry a bipartition with equal sides of size n <= 6; the state
// space (n^2+1) * n!... is enumerated eagerly.
JsvInstance jsv_matching_chain(const GraphSpec& graph, JsvOptions options = {});

// Perfect sampler for the uniform distribution over the perfect matchings of
// a bipartite graph: draws exact pi_{lambda,w*} samples from the matching
// chain and restarts until the sample is a penalty-free perfect matching.
class JsvPerfectMatchingSampler {
 public:
  struct Draw {
    std::size_t state = 0;  // index into instance().states
    std::uint64_t restarts = 0;
    SampleReport last;
  };

  JsvPerfectMatchingSampler(std::shared_ptr<const JsvInstance> instance,
                            McPerfectSampler sampler);

  Draw draw(BitSource& bits) const;

  const JsvInstance& instance() const noexcept { return *instance_; }
  const McPerfectSampler& chain_sampler() const noexcept { return sampler_; }

 private:
  std::shared_ptr<const JsvInstance> instance_;
  McPerfectSampler sampler_;
};

struct JsvSamplerOptions {
  JsvOptions chain;
  SamplerMode mode = SamplerMode::mixture;
  CertSource cert_source = CertSource::brute;
  std::optional<Rational> eps_override;  // default 1/|Omega|^4
  PowerBudget budget;
};

// Checks by enumeration that the input graph has a perfect matching, then
// wires jsv_matching_chain into an exact chain sampler.
JsvPerfectMatchingSampler jsv_perfect_matching_sampler(const GraphSpec& graph,
                                                       JsvSamplerOptions options = {});

}  // namespace psamp
