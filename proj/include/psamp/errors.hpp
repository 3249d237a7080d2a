#pragma once

#include <stdexcept>
#include <string>

namespace psamp {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad argument values: probabilities outside [0,1], non-stochastic rows,
// malformed parameters.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A vector claimed to be a distribution is not one (negative mass or the
// masses do not sum to 1).
class InvalidDistributionError : public Error {
 public:
  using Error::Error;
};

// A support precondition failed, e.g. supp(p) not contained in supp(r).
class SupportError : public Error {
 public:
  using Error::Error;
};

// A claimed mixing certificate turned out to be false at runtime: a residual
// mass went negative or a rejection acceptance probability left [0,1].
class CertificateViolation : public Error {
 public:
  using Error::Error;
};

// A configurable resource budget (dense-matrix cap, exact-power bit budget,
// step budget) was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// The stationary equation has more than a one-dimensional solution space;
// the chain does not identify a single target distribution.
class MultiplicityError : public Error {
 public:
  using Error::Error;
};

// A gallery instance cannot be built as requested (disconnected graph, too
// few colors, empty support, no perfect matching, ...).
class ModelError : public Error {
 public:
  using Error::Error;
};

}  // namespace psamp
