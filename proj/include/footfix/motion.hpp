#pragma once

#include <Eigen/Dense>

#include <span>
#include <vector>

namespace footfix {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using RowVector = Eigen::RowVectorXd;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Per-frame feature layout: [root(4) | joint velocities(3*22) | local positions(3*21) | 6D rotations(6*21)].
namespace layout {
inline constexpr int kJoints = 22;
inline constexpr int kRootDims = 4;
inline constexpr int kVelDims = 3 * kJoints;
inline constexpr int kPosDims = 3 * (kJoints - 1);
inline constexpr int kRotDims = 6 * (kJoints - 1);
inline constexpr int kVelOffset = kRootDims;
inline constexpr int kPosOffset = kVelOffset + kVelDims;
inline constexpr int kRotOffset = kPosOffset + kPosDims;
inline constexpr int kFeatureDim = kRotOffset + kRotDims;
static_assert(kFeatureDim == 259);

// Root block columns.
inline constexpr int kYawRate = 0;
inline constexpr int kVelX = 1;
inline constexpr int kVelZ = 2;
inline constexpr int kHeight = 3;

/// Column of the first velocity component of joint j (0..21).
constexpr int vel_col(int joint) { return kVelOffset + 3 * joint; }
/// Column of the first local-position component of non-root joint j (1..21).
constexpr int pos_col(int joint) { return kPosOffset + 3 * (joint - 1); }
/// Column of the first 6D-rotation component of non-root joint j (1..21).
constexpr int rot_col(int joint) { return kRotOffset + 6 * (joint - 1); }
}  // namespace layout

struct RootState {
  double yaw_rate = 0.0;  // radians/frame
  double vel_x = 0.0;     // meters/frame, yaw-aligned frame
  double vel_z = 0.0;
  double height = 0.0;    // meters

  bool operator==(const RootState&) const = default;
};

/// An L x 259 feature matrix plus its frame rate. Immutable once built.
class MotionSequence {
 public:
  /// Throws LayoutError for a wrong feature count, ValidationError for
  /// L < 2, non-positive fps or non-finite entries.
  MotionSequence(Matrix frames, double fps);

  const Matrix& frames() const noexcept { return frames_; }
  double fps() const noexcept { return fps_; }
  int length() const noexcept { return static_cast<int>(frames_.rows()); }

  bool operator==(const MotionSequence& other) const {
    return fps_ == other.fps_ && frames_ == other.frames_;
  }

 private:
  Matrix frames_;
  double fps_;
};

/// The four feature blocks of a sequence, one row per frame.
struct FeatureParts {
  std::vector<RootState> root;
  Matrix velocities;  // L x 66
  Matrix positions;   // L x 63
  Matrix rotations;   // L x 126
};

FeatureParts split_features(const MotionSequence& m);
/// Inverse of split_features; validates block widths and row counts.
MotionSequence join_features(const FeatureParts& parts, double fps);

Matrix root_matrix(std::span<const RootState> root);
std::vector<RootState> root_states(const Matrix& root_block);

}  // namespace footfix
