#pragma once

#include <chrono>
#include <optional>

namespace tclique::detail {

class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  explicit Deadline(std::optional<double> budget_secs) {
    if (budget_secs) {
      end_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                std::chrono::duration<double>(*budget_secs));
    }
  }

  bool bounded() const { return end_.has_value(); }
  bool expired() const { return end_ && Clock::now() >= *end_; }

  // Seconds left, or nullopt when unbounded.
  std::optional<double> remaining() const {
    if (!end_) return std::nullopt;
    return std::chrono::duration<double>(*end_ - Clock::now()).count();
  }

 private:
  std::optional<Clock::time_point> end_;
};

}  // namespace tclique::detail
