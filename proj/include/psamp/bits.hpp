#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "psamp/rational.hpp"

namespace psamp {

// A stream of independent fair bits with a consumed-bit counter. Zero-error
// sampling draws nothing but fair bits from one of these. Single-owner: a
// source must not be shared across threads; parallel work derives one
// independently seeded source per unit of work.
class BitSource {
 public:
  virtual ~BitSource() = default;
  BitSource() = default;
  BitSource(const BitSource&) = delete;
  BitSource& operator=(const BitSource&) = delete;

  bool next_bit() {
    ++consumed_;
    return draw();
  }
  std::uint64_t bits_consumed() const noexcept { return consumed_; }

 protected:
  virtual bool draw() = 0;

 private:
  std::uint64_t consumed_ = 0;
};

// Deterministic replay under a fixed seed.
class SeededBitSource final : public BitSource {
 public:
  explicit SeededBitSource(std::uint64_t seed) : engine_(seed) {}

 private:
  bool draw() override {
    if (remaining_ == 0) {
      word_ = engine_();
      remaining_ = 64;
    }
    const bool b = (word_ & 1u) != 0;
    word_ >>= 1;
    --remaining_;
    return b;
  }

  std::mt19937_64 engine_;
  std::uint64_t word_ = 0;
  unsigned remaining_ = 0;
};

// Deterministic derivation of per-draw / per-worker seeds from a run seed.
// Draw i of a run always sees the same bit stream, independent of how draws
// are distributed over threads.
std::uint64_t derive_seed(std::uint64_t run_seed, std::uint64_t index) noexcept;

// Returns true with probability exactly p by lazily comparing the bit stream
// against the binary expansion of p. Expected bits consumed <= 2. With
// p = 1/2 the result is the first bit itself.
bool bernoulli_exact(const Rational& p, BitSource& bits);

// Reusable exact sampler for a fixed rational distribution. Construction
// validates nonnegativity and an exact sum of 1; sampling refines a dyadic
// interval until it sits inside one CDF cell, so the outcome law is exactly
// the given weights.
class CategoricalSampler {
 public:
  explicit CategoricalSampler(const std::vector<Rational>& weights);

  std::size_t sample(BitSource& bits) const;
  std::size_t outcomes() const noexcept { return outcomes_; }

 private:
  std::size_t sample_wide(BigInt interval_lo, unsigned depth, BitSource& bits) const;

  std::size_t outcomes_ = 0;
  // CDF over outcomes with nonzero weight, as integers over a common
  // denominator; cdf_.back() == total_.
  std::vector<BigInt> cdf_;
  BigInt total_;
  std::vector<std::size_t> target_;
  // Fast path when the common denominator fits in 64 bits.
  bool fits64_ = false;
  std::vector<std::uint64_t> cdf64_;
  std::uint64_t total64_ = 0;
  unsigned total_bits_ = 0;
};

// One-shot exact draw: index i with probability exactly weights[i].
std::size_t categorical_exact(const std::vector<Rational>& weights, BitSource& bits);

}  // namespace psamp
