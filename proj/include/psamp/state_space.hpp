#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>

namespace psamp {

// An indexed finite state space. States are the indices 0..size-1; concrete
// structures (colorings, matchings, ...) keep their own index<->object
// bijection and hand a label function here for reporting.
class StateSpace {
 public:
  using LabelFn = std::function<std::string(std::size_t)>;

  explicit StateSpace(std::size_t size);
  StateSpace(std::size_t size, LabelFn label);

  std::size_t size() const noexcept { return size_; }
  std::string label(std::size_t index) const;

 private:
  std::size_t size_;
  std::shared_ptr<const LabelFn> label_;
};

}  // namespace psamp
