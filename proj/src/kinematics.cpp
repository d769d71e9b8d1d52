#include "footfix/kinematics.hpp"

#include "footfix/error.hpp"

#include <cmath>

namespace footfix {

namespace {
constexpr double kSingularEps = 1e-12;
}

Mat3 rot6d_to_matrix(const Vec6& r6) {
  const Vec3 a1 = r6.head<3>();
  const Vec3 a2 = r6.tail<3>();
  const double n1 = a1.norm();
  if (!(n1 > kSingularEps)) throw SingularInputError("6D rotation: first column has zero norm");
  const Vec3 b1 = a1 / n1;
  const Vec3 u = a2 - b1.dot(a2) * b1;
  const double n2 = u.norm();
  if (!(n2 > kSingularEps * std::max(1.0, a2.norm()))) {
    throw SingularInputError("6D rotation: columns are parallel or second column is zero");
  }
  const Vec3 b2 = u / n2;
  Mat3 r;
  r.col(0) = b1;
  r.col(1) = b2;
  r.col(2) = b1.cross(b2);
  return r;
}

Vec6 matrix_to_rot6d(const Mat3& rotation) {
  Vec6 out;
  out.head<3>() = rotation.col(0);
  out.tail<3>() = rotation.col(1);
  return out;
}

Mat3 yaw_rotation(double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  Mat3 r;
  r << c, 0.0, s, 0.0, 1.0, 0.0, -s, 0.0, c;
  return r;
}

GlobalPositions::GlobalPositions(Matrix xyz) : xyz_(std::move(xyz)) {
  if (xyz_.cols() != 3 * layout::kJoints) throw ShapeError("global positions must have 66 columns");
}

std::array<Vec3, layout::kJoints> forward_kinematics_frame(std::span<const Mat3, layout::kJoints> local,
                                                           const Skeleton& skeleton) {
  std::array<Mat3, layout::kJoints> global;
  std::array<Vec3, layout::kJoints> pos;
  global[0] = Mat3::Identity();
  pos[0] = Vec3::Zero();
  for (int j = 1; j < layout::kJoints; ++j) {
    const auto p = static_cast<std::size_t>(skeleton.parent(j));
    const auto i = static_cast<std::size_t>(j);
    pos[i] = pos[p] + global[p] * skeleton.rest_offset(j);
    global[i] = global[p] * local[i];
  }
  return pos;
}

Matrix forward_kinematics(const Matrix& rotations, const Skeleton& skeleton) {
  if (rotations.cols() != layout::kRotDims) throw ShapeError("rotations must have 126 columns");
  Matrix out(rotations.rows(), layout::kPosDims);
  std::array<Mat3, layout::kJoints> local;
  local[0] = Mat3::Identity();
  for (Eigen::Index t = 0; t < rotations.rows(); ++t) {
    for (int j = 1; j < layout::kJoints; ++j) {
      const Vec6 r6 = rotations.block<1, 6>(t, 6 * (j - 1)).transpose();
      local[static_cast<std::size_t>(j)] = rot6d_to_matrix(r6);
    }
    const auto pos = forward_kinematics_frame(local, skeleton);
    for (int j = 1; j < layout::kJoints; ++j) {
      out.block<1, 3>(t, 3 * (j - 1)) = pos[static_cast<std::size_t>(j)].transpose();
    }
  }
  return out;
}

RootTrajectory integrate_root(std::span<const RootState> root) {
  if (root.empty()) throw EmptyInputError("root sequence is empty");
  const auto n = static_cast<Eigen::Index>(root.size());
  RootTrajectory traj{Vector::Zero(n), Vector::Zero(n), Vector::Zero(n)};
  for (Eigen::Index t = 1; t < n; ++t) {
    const RootState& prev = root[static_cast<std::size_t>(t - 1)];
    const double yaw = traj.yaw(t - 1);
    const double c = std::cos(yaw);
    const double s = std::sin(yaw);
    traj.yaw(t) = yaw + prev.yaw_rate;
    traj.x(t) = traj.x(t - 1) + c * prev.vel_x + s * prev.vel_z;
    traj.z(t) = traj.z(t - 1) - s * prev.vel_x + c * prev.vel_z;
  }
  return traj;
}

GlobalPositions recover_global(std::span<const RootState> root, const Matrix& local_positions) {
  if (local_positions.cols() != layout::kPosDims) throw ShapeError("local positions must have 63 columns");
  if (local_positions.rows() != static_cast<Eigen::Index>(root.size())) {
    throw ShapeError("root and local positions disagree on frame count");
  }
  const RootTrajectory traj = integrate_root(root);
  Matrix xyz(local_positions.rows(), 3 * layout::kJoints);
  for (Eigen::Index t = 0; t < local_positions.rows(); ++t) {
    const Vec3 translation(traj.x(t), root[static_cast<std::size_t>(t)].height, traj.z(t));
    const Mat3 yaw = yaw_rotation(traj.yaw(t));
    xyz.block<1, 3>(t, 0) = translation.transpose();
    for (int j = 1; j < layout::kJoints; ++j) {
      const Vec3 local = local_positions.block<1, 3>(t, 3 * (j - 1)).transpose();
      xyz.block<1, 3>(t, 3 * j) = (yaw * local + translation).transpose();
    }
  }
  return GlobalPositions(std::move(xyz));
}

Matrix localize(const GlobalPositions& global, std::span<const RootState> root) {
  if (global.frames() != static_cast<int>(root.size())) {
    throw ShapeError("root and global positions disagree on frame count");
  }
  const RootTrajectory traj = integrate_root(root);
  Matrix out(global.frames(), layout::kPosDims);
  for (int t = 0; t < global.frames(); ++t) {
    const Vec3 translation(traj.x(t), root[static_cast<std::size_t>(t)].height, traj.z(t));
    const Mat3 inv_yaw = yaw_rotation(traj.yaw(t)).transpose();
    for (int j = 1; j < layout::kJoints; ++j) {
      out.block<1, 3>(t, 3 * (j - 1)) = (inv_yaw * (global.at(t, j) - translation)).transpose();
    }
  }
  return out;
}

Matrix cumsum_velocity(const Matrix& velocities, const RowVector& initial) {
  if (initial.size() != velocities.cols()) throw ShapeError("initial state width mismatch");
  Matrix out(velocities.rows(), velocities.cols());
  RowVector acc = initial;
  for (Eigen::Index t = 0; t < velocities.rows(); ++t) {
    acc += velocities.row(t);
    out.row(t) = acc;
  }
  return out;
}

Matrix finite_difference(const Matrix& positions) {
  Matrix out = Matrix::Zero(positions.rows(), positions.cols());
  for (Eigen::Index t = 1; t < positions.rows(); ++t) {
    out.row(t) = positions.row(t) - positions.row(t - 1);
  }
  return out;
}

Matrix velocity_features(std::span<const RootState> root, const Matrix& local_positions) {
  if (local_positions.cols() != layout::kPosDims) throw ShapeError("local positions must have 63 columns");
  const auto n = local_positions.rows();
  if (n != static_cast<Eigen::Index>(root.size())) throw ShapeError("frame count mismatch");
  Matrix vel(n, layout::kVelDims);
  Matrix diff = finite_difference(local_positions);
  if (n > 0) diff.row(0) = local_positions.row(0);
  vel.rightCols(layout::kPosDims) = diff;

  const RootTrajectory traj = integrate_root(root);
  for (Eigen::Index t = 0; t < n; ++t) {
    const double height = root[static_cast<std::size_t>(t)].height;
    Vec3 step;
    if (t == 0) {
      step = Vec3(0.0, height, 0.0);
    } else {
      const Vec3 world(traj.x(t) - traj.x(t - 1), height - root[static_cast<std::size_t>(t - 1)].height,
                       traj.z(t) - traj.z(t - 1));
      step = yaw_rotation(traj.yaw(t)).transpose() * world;
    }
    vel.block<1, 3>(t, 0) = step.transpose();
  }
  return vel;
}

MotionSequence build_motion(std::span<const RootState> root, const Matrix& rotations,
                            const Skeleton& skeleton, double fps) {
  FeatureParts parts;
  parts.root.assign(root.begin(), root.end());
  parts.positions = forward_kinematics(rotations, skeleton);
  parts.velocities = velocity_features(root, parts.positions);
  parts.rotations = rotations;
  return join_features(parts, fps);
}

GlobalPositions global_positions(const MotionSequence& m) {
  const Matrix& f = m.frames();
  const auto root = root_states(f.leftCols(layout::kRootDims));
  return recover_global(root, f.middleCols(layout::kPosOffset, layout::kPosDims));
}

}  // namespace footfix
