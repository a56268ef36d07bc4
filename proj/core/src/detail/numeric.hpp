#pragma once

#include <cmath>
#include <limits>
#include <span>

namespace lclc::detail {

// Neumaier-compensated summation.
class CompensatedSum {
 public:
  void add(double v) noexcept {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

inline double sum(std::span<const double> v) noexcept {
  CompensatedSum s;
  for (double x : v) s.add(x);
  return s.value();
}

// log Σ exp(t · log wᵢ) over positive entries, max-shifted.
inline double log_power_sum(std::span<const double> w, double t) noexcept {
  double max_log = -std::numeric_limits<double>::infinity();
  for (double x : w) {
    if (x > 0.0) max_log = std::max(max_log, std::log(x));
  }
  if (!std::isfinite(max_log)) return -std::numeric_limits<double>::infinity();
  CompensatedSum s;
  for (double x : w) {
    if (x > 0.0) s.add(std::exp(t * (std::log(x) - max_log)));
  }
  return t * max_log + std::log(s.value());
}

inline constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace lclc::detail
