#include "footfix/frdm/schedule.hpp"

#include "footfix/error.hpp"

#include <cmath>
#include <string>

namespace footfix::frdm {

DiffusionSchedule DiffusionSchedule::linear(int steps, double beta_start, double beta_end) {
  if (steps < 1) throw ConfigError("diffusion_steps", "must be at least 1");
  if (!(beta_start > 0.0 && beta_start <= beta_end && beta_end < 1.0)) {
    throw ConfigError("beta", "need 0 < beta_start <= beta_end < 1");
  }
  DiffusionSchedule s;
  s.beta_start_ = beta_start;
  s.beta_end_ = beta_end;
  s.alpha_bar_.push_back(1.0);
  for (int t = 1; t <= steps; ++t) {
    const double frac = steps == 1 ? 0.0 : static_cast<double>(t - 1) / (steps - 1);
    const double beta = beta_start + frac * (beta_end - beta_start);
    s.betas_.push_back(beta);
    s.alpha_bar_.push_back(s.alpha_bar_.back() * (1.0 - beta));
  }
  return s;
}

double DiffusionSchedule::beta(int t) const {
  if (t < 1 || t > steps()) throw ValidationError("diffusion step " + std::to_string(t) + " out of range");
  return betas_[static_cast<std::size_t>(t - 1)];
}

double DiffusionSchedule::alpha_bar(int t) const {
  if (t < 0 || t > steps()) throw ValidationError("diffusion step " + std::to_string(t) + " out of range");
  return alpha_bar_[static_cast<std::size_t>(t)];
}

Matrix add_noise(const Matrix& x0, int t, const Matrix& noise, const DiffusionSchedule& schedule) {
  if (t < 1 || t > schedule.steps()) {
    throw ValidationError("diffusion step " + std::to_string(t) + " out of range 1.." +
                          std::to_string(schedule.steps()));
  }
  if (x0.rows() != noise.rows() || x0.cols() != noise.cols()) throw ShapeError("noise shape mismatch");
  const double ab = schedule.alpha_bar(t);
  return std::sqrt(ab) * x0 + std::sqrt(1.0 - ab) * noise;
}

}  // namespace footfix::frdm
