#pragma once

#include "footfix/motion.hpp"

#include <span>

namespace footfix::frdm {

/// Per-dimension z-scoring. Frame 0 has its own statistics because its
/// velocity slots hold absolute positions (zero-initial integration).
struct FeatureNormalizer {
  RowVector mean;
  RowVector std;
  RowVector first_mean;
  RowVector first_std;

  static constexpr double kStdFloor = 1e-3;

  static FeatureNormalizer identity();
  static FeatureNormalizer fit(std::span<const MotionSequence> corpus);

  Matrix normalize(const Matrix& raw) const;
  Matrix denormalize(const Matrix& normalized) const;
  /// Scales a gradient taken w.r.t. raw features into normalized space.
  Matrix raw_to_normalized_gradient(const Matrix& grad_raw) const;
};

}  // namespace footfix::frdm
