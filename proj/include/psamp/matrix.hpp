#pragma once

#include <cstddef>
#include <vector>

#include "psamp/rational.hpp"

namespace psamp {

// Dense matrix of exact rationals. Only what the stationary solver and the
// exact power computations need.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const RationalMatrix& other) const = default;

  // Largest bit_size over all entries; drives the exact-power budget.
  std::size_t max_entry_bits() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

  // row * this, for single-start distribution evolution.
  std::vector<Rational> left_apply(const std::vector<Rational>& row) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

}  // namespace psamp
