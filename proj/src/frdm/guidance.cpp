#include "footfix/frdm/guidance.hpp"

#include "footfix/error.hpp"
#include "footfix/kinematics.hpp"

namespace footfix::frdm {

FeatureMask merge_mask(const Skeleton& skeleton) {
  using namespace layout;
  FeatureMask mask{};
  for (int c = 0; c < kRootDims; ++c) mask[static_cast<std::size_t>(c)] = true;
  auto set = [&](int first, int count) {
    for (int c = first; c < first + count; ++c) mask[static_cast<std::size_t>(c)] = true;
  };
  for (int j : skeleton.knee_feet()) {
    set(vel_col(j), 3);
    set(pos_col(j), 3);
    set(rot_col(j), 6);
  }
  return mask;
}

Matrix merge(const Matrix& source, const Matrix& keep, const FeatureMask& mask) {
  if (source.rows() != keep.rows() || source.cols() != keep.cols()) {
    throw ShapeError("merge inputs differ in shape");
  }
  if (keep.cols() != layout::kFeatureDim) throw LayoutError("merge expects 259 feature columns");
  Matrix out = keep;
  for (int c = 0; c < layout::kFeatureDim; ++c) {
    if (mask[static_cast<std::size_t>(c)]) out.col(c) = source.col(c);
  }
  return out;
}

MotionSequence merge(const MotionSequence& source, const MotionSequence& keep, const Skeleton& skeleton) {
  return MotionSequence(merge(source.frames(), keep.frames(), merge_mask(skeleton)), keep.fps());
}

Matrix geometric_guidance(const Matrix& prediction, const Matrix& original, double w) {
  using namespace layout;
  if (!(w >= 0.0 && w <= 1.0)) throw ValidationError("guidance weight must lie in [0, 1]");
  if (prediction.rows() != original.rows() || prediction.cols() != original.cols()) {
    throw ShapeError("guidance inputs differ in shape");
  }
  if (prediction.cols() != kFeatureDim) throw LayoutError("guidance expects 259 feature columns");
  Matrix out = prediction;
  auto blend = [&](int offset, int width) {
    out.middleCols(offset, width) =
        (1.0 - w) * original.middleCols(offset, width) + w * prediction.middleCols(offset, width);
  };
  blend(kPosOffset, kPosDims);
  blend(kRotOffset, kRotDims);
  return out;
}

FootGuidanceResult foot_contact_guidance(const Matrix& velocities, const BinaryMatrix& b, double w,
                                         const RowVector& initial) {
  if (velocities.cols() != 3 * b.cols() || velocities.rows() != b.rows()) {
    throw ShapeError("contact mask does not match the velocity block");
  }
  if (initial.size() != velocities.cols()) throw ShapeError("initial position width mismatch");
  FootGuidanceResult out;
  out.velocities = velocities;
  for (Eigen::Index t = 0; t < b.rows(); ++t) {
    for (Eigen::Index k = 0; k < b.cols(); ++k) {
      if (b(t, k)) out.velocities.block<1, 3>(t, 3 * k) *= w;
    }
  }
  out.positions = cumsum_velocity(out.velocities, initial);
  return out;
}

}  // namespace footfix::frdm
