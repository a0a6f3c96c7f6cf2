#pragma once

#include <chrono>
#include <optional>

#include "sgi/errors.hpp"

namespace sgi {

/// Cooperative time limit polled by long-running algebra.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  /// Never expires.
  Deadline() = default;
  explicit Deadline(std::chrono::duration<double> budget)
      : at_(Clock::now() + std::chrono::duration_cast<Clock::duration>(budget)) {}

  bool expired() const { return at_ && Clock::now() >= *at_; }
  void check(const char* what = "computation") const {
    if (expired()) throw Timeout(std::string(what) + " exceeded its time limit");
  }

 private:
  std::optional<Clock::time_point> at_;
};

}  // namespace sgi
