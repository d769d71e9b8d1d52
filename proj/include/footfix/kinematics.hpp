#pragma once

#include "footfix/motion.hpp"
#include "footfix/skeleton.hpp"

#include <array>
#include <span>

namespace footfix {

using Vec6 = Eigen::Matrix<double, 6, 1>;

/// Continuous 6D rotation: the two 3-vectors are the first two columns of R
/// before Gram-Schmidt. Throws SingularInputError on zero or parallel input.
Mat3 rot6d_to_matrix(const Vec6& r6);
Vec6 matrix_to_rot6d(const Mat3& rotation);

/// Right-handed rotation about +Y; yaw_rotation(pi/2) maps (1,0,0) to (0,0,-1).
Mat3 yaw_rotation(double angle);

/// World joint positions, L x (3*22), joint j in columns [3j, 3j+3).
class GlobalPositions {
 public:
  GlobalPositions() = default;
  explicit GlobalPositions(Matrix xyz);

  int frames() const noexcept { return static_cast<int>(xyz_.rows()); }
  Vec3 at(int frame, int joint) const { return xyz_.block<1, 3>(frame, 3 * joint).transpose(); }
  double height(int frame, int joint) const { return xyz_(frame, 3 * joint + 1); }
  const Matrix& matrix() const noexcept { return xyz_; }

 private:
  Matrix xyz_;
};

/// Per-frame FK: local rotations for joints 1..21 (index 0 ignored, root pinned
/// at the origin with identity orientation). Returns positions of all 22 joints.
std::array<Vec3, layout::kJoints> forward_kinematics_frame(std::span<const Mat3, layout::kJoints> local,
                                                           const Skeleton& skeleton);

/// FK over a sequence of 6D rotations (L x 126). Returns root-relative joint
/// positions for joints 1..21 as L x 63.
Matrix forward_kinematics(const Matrix& rotations, const Skeleton& skeleton);

struct RootTrajectory {
  Vector yaw;  // r^a, radians
  Vector x;    // r^x, meters
  Vector z;    // r^z, meters
};

/// Exclusive cumulative sums from a zero initial state: the rates stored at
/// frame t move the root from t to t+1, with the planar step rotated by the
/// yaw at frame t. The last frame's rates are never consumed.
RootTrajectory integrate_root(std::span<const RootState> root);

/// P_root = (x, height, z); other joints are the yaw-rotated local positions
/// plus the root translation.
GlobalPositions recover_global(std::span<const RootState> root, const Matrix& local_positions);

/// Inverse of recover_global for the non-root joints.
Matrix localize(const GlobalPositions& global, std::span<const RootState> root);

/// positions[t] = initial + sum_{s<=t} v[s].
Matrix cumsum_velocity(const Matrix& velocities, const RowVector& initial);
/// v[t] = p[t] - p[t-1], v[0] = 0. cumsum_velocity(finite_difference(p), p.row(0)) == p.
Matrix finite_difference(const Matrix& positions);

/// The j^v block for given root and local positions: non-root joints carry the
/// local displacement with frame 0 measured from the origin, so a zero-initial
/// cumsum reproduces j^p; the root slot carries the root's world displacement
/// expressed in the current yaw frame (frame 0: (0, height, 0)).
Matrix velocity_features(std::span<const RootState> root, const Matrix& local_positions);

/// Assembles a kinematically consistent sequence: j^p = FK(j^r), j^v from j^p.
MotionSequence build_motion(std::span<const RootState> root, const Matrix& rotations,
                            const Skeleton& skeleton, double fps);

/// Global positions of a sequence (recover_global on its root and j^p blocks).
GlobalPositions global_positions(const MotionSequence& m);

}  // namespace footfix
