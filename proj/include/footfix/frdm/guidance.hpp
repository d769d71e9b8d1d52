#pragma once

#include "footfix/contact.hpp"
#include "footfix/motion.hpp"
#include "footfix/skeleton.hpp"

#include <array>

namespace footfix::frdm {

/// True for the feature dims a merge takes from the source: the root block and
/// the velocity/position/rotation slots of the skeleton's knee/foot joints.
using FeatureMask = std::array<bool, layout::kFeatureDim>;

FeatureMask merge_mask(const Skeleton& skeleton);

/// Source dims where the mask is set, keep dims elsewhere. Throws ShapeError
/// when the two inputs differ in shape.
Matrix merge(const Matrix& source, const Matrix& keep, const FeatureMask& mask);
MotionSequence merge(const MotionSequence& source, const MotionSequence& keep, const Skeleton& skeleton);

/// Convex blend of rotations and positions: (1 - w) * original + w * prediction.
/// Root and velocity blocks come from the prediction. Throws ValidationError
/// unless 0 <= w <= 1.
Matrix geometric_guidance(const Matrix& prediction, const Matrix& original, double w);

struct FootGuidanceResult {
  Matrix velocities;  // L x 3k
  Matrix positions;   // L x 3k, cumsum of the guided velocities from `initial`
};

/// Velocity triplets of contact joints are scaled by w where b is set; others
/// pass through. velocities: L x 3k, b: L x k, initial: 1 x 3k.
FootGuidanceResult foot_contact_guidance(const Matrix& velocities, const BinaryMatrix& b, double w,
                                         const RowVector& initial);

}  // namespace footfix::frdm
