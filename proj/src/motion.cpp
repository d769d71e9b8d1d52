#include "footfix/motion.hpp"

#include "footfix/error.hpp"

#include <cmath>
#include <string>

namespace footfix {

MotionSequence::MotionSequence(Matrix frames, double fps) : frames_(std::move(frames)), fps_(fps) {
  if (frames_.cols() != layout::kFeatureDim) {
    throw LayoutError("feature dimension must be 259, got " + std::to_string(frames_.cols()));
  }
  if (frames_.rows() < 2) {
    throw ValidationError("motion needs at least 2 frames, got " + std::to_string(frames_.rows()));
  }
  if (!(fps_ > 0.0) || !std::isfinite(fps_)) {
    throw ValidationError("fps must be positive and finite");
  }
  if (!frames_.allFinite()) {
    throw ValidationError("motion contains non-finite entries");
  }
}

FeatureParts split_features(const MotionSequence& m) {
  using namespace layout;
  const Matrix& f = m.frames();
  FeatureParts parts;
  parts.root = root_states(f.leftCols(kRootDims));
  parts.velocities = f.middleCols(kVelOffset, kVelDims);
  parts.positions = f.middleCols(kPosOffset, kPosDims);
  parts.rotations = f.middleCols(kRotOffset, kRotDims);
  return parts;
}

MotionSequence join_features(const FeatureParts& parts, double fps) {
  using namespace layout;
  const auto rows = static_cast<Eigen::Index>(parts.root.size());
  if (parts.velocities.cols() != kVelDims || parts.positions.cols() != kPosDims ||
      parts.rotations.cols() != kRotDims) {
    throw LayoutError("feature block widths must be 66/63/126");
  }
  if (parts.velocities.rows() != rows || parts.positions.rows() != rows ||
      parts.rotations.rows() != rows) {
    throw LayoutError("feature blocks disagree on frame count");
  }
  Matrix f(rows, kFeatureDim);
  f.leftCols(kRootDims) = root_matrix(parts.root);
  f.middleCols(kVelOffset, kVelDims) = parts.velocities;
  f.middleCols(kPosOffset, kPosDims) = parts.positions;
  f.middleCols(kRotOffset, kRotDims) = parts.rotations;
  return MotionSequence(std::move(f), fps);
}

Matrix root_matrix(std::span<const RootState> root) {
  Matrix out(static_cast<Eigen::Index>(root.size()), layout::kRootDims);
  for (std::size_t t = 0; t < root.size(); ++t) {
    const auto r = static_cast<Eigen::Index>(t);
    out(r, layout::kYawRate) = root[t].yaw_rate;
    out(r, layout::kVelX) = root[t].vel_x;
    out(r, layout::kVelZ) = root[t].vel_z;
    out(r, layout::kHeight) = root[t].height;
  }
  return out;
}

std::vector<RootState> root_states(const Matrix& root_block) {
  if (root_block.cols() != layout::kRootDims) {
    throw LayoutError("root block must have 4 columns");
  }
  std::vector<RootState> out(static_cast<std::size_t>(root_block.rows()));
  for (Eigen::Index t = 0; t < root_block.rows(); ++t) {
    out[static_cast<std::size_t>(t)] = {root_block(t, layout::kYawRate), root_block(t, layout::kVelX),
                                        root_block(t, layout::kVelZ), root_block(t, layout::kHeight)};
  }
  return out;
}

}  // namespace footfix
