#pragma once

#include "footfix/motion.hpp"

#include <vector>

namespace footfix::frdm {

/// Variance schedule over steps 1..T; alpha_bar(0) is defined as 1.
class DiffusionSchedule {
 public:
  /// Linear betas from beta_start to beta_end. Throws ConfigError unless
  /// T >= 1 and 0 < beta_start <= beta_end < 1.
  static DiffusionSchedule linear(int steps, double beta_start, double beta_end);

  int steps() const noexcept { return static_cast<int>(betas_.size()); }
  double beta(int t) const;
  double alpha_bar(int t) const;
  double beta_start() const noexcept { return beta_start_; }
  double beta_end() const noexcept { return beta_end_; }

 private:
  std::vector<double> betas_;
  std::vector<double> alpha_bar_;  // index 0 holds 1
  double beta_start_ = 0.0;
  double beta_end_ = 0.0;
};

/// x_t = sqrt(alpha_bar_t) x_0 + sqrt(1 - alpha_bar_t) noise.
Matrix add_noise(const Matrix& x0, int t, const Matrix& noise, const DiffusionSchedule& schedule);

}  // namespace footfix::frdm
