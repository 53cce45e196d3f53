#pragma once

#include <cstdint>

namespace ccsub {

// Primitive-operation tallies for one algorithm run.
//
// `setup` holds work spent on preconditions such as computing the closure,
// kept apart so the per-phase counts stay comparable with the bounds.
struct StepCounter {
  std::uint64_t edge_probes = 0;
  std::uint64_t neighbor_scans = 0;
  std::uint64_t index_touches = 0;
  std::uint64_t setup = 0;

  std::uint64_t algorithm_steps() const noexcept {
    return edge_probes + neighbor_scans + index_touches;
  }
  std::uint64_t total() const noexcept { return algorithm_steps() + setup; }
  void reset() noexcept { *this = StepCounter{}; }
};

// Resolves an optional caller-supplied counter to a usable reference.
class CounterRef {
 public:
  explicit CounterRef(StepCounter* external) noexcept
      : counter_(external != nullptr ? external : &local_) {}
  CounterRef(const CounterRef&) = delete;
  CounterRef& operator=(const CounterRef&) = delete;

  StepCounter& operator*() noexcept { return *counter_; }
  StepCounter* operator->() noexcept { return counter_; }
  StepCounter* get() noexcept { return counter_; }

 private:
  StepCounter local_;
  StepCounter* counter_;
};

}  // namespace ccsub
