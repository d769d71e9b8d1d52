#pragma once

#include "footfix/contact.hpp"
#include "footfix/motion.hpp"
#include "footfix/skeleton.hpp"

#include <cstdint>
#include <vector>

namespace footfix {

struct GaitSpec {
  double step_length = 0.25;   // m advanced per step
  int step_period = 16;        // frames per step (half gait cycle)
  double hip_height = 0.94;    // pelvis height, m
  double arm_swing = 0.35;     // rad
  double turning_rate = 0.004; // rad/frame
  int duration = 256;          // frames
  double fps = 30.0;
  std::uint64_t seed = 0;
};

void validate(const GaitSpec& spec);

/// Procedural walk/step-in-place with exactly pinned stance feet. The output
/// satisfies j^p = FK(j^r) and has FSR = 0 and no penetration.
MotionSequence generate_clean(const GaitSpec& spec, const Skeleton& skeleton = Skeleton::smpl());

/// Draws a feasible spec for corpus member `index` from the corpus seed.
GaitSpec random_gait(std::uint64_t corpus_seed, std::size_t index, int duration, double fps = 30.0);

std::vector<MotionSequence> generate_corpus(std::uint64_t corpus_seed, std::size_t count, int duration,
                                            double fps = 30.0, int jobs = 1);

struct ArtifactSpec {
  double skate_fraction = 0.0;   // target fraction of frames with a sliding stance foot
  double skate_drift = 0.03;     // horizontal m/frame while sliding
  double jitter_sigma = 0.0;     // m, white noise on jitter_joints' local positions
  std::vector<int> jitter_joints;  // empty = the skeleton's knee/foot set
  double float_offset = 0.0;     // m added to root height over float_fraction of frames
  double float_fraction = 0.25;
  double penetrate_depth = 0.0;  // m subtracted from root height
  double penetrate_fraction = 0.0;
  std::uint64_t seed = 0;

  bool empty() const {
    return skate_fraction == 0.0 && jitter_sigma == 0.0 && float_offset == 0.0 &&
           (penetrate_depth == 0.0 || penetrate_fraction == 0.0);
  }
};

void validate(const ArtifactSpec& spec);

namespace artifact {
inline constexpr std::uint8_t kSkate = 1;
inline constexpr std::uint8_t kJitter = 2;
inline constexpr std::uint8_t kFloat = 4;
inline constexpr std::uint8_t kPenetrate = 8;
}  // namespace artifact

struct CorruptionResult {
  MotionSequence motion;
  std::vector<std::uint8_t> labels;  // per-frame artifact bit flags
  Matrix delta;                      // motion - input
  bool identity = false;             // no artifact was injected
};

/// Feature-space artifact injection; j^v is rebuilt from the perturbed root and
/// positions. Frames flagged kSkate are exactly the frames where a stance foot
/// slides by skate_drift.
CorruptionResult corrupt(const MotionSequence& m, const ArtifactSpec& spec,
                         const Skeleton& skeleton = Skeleton::smpl());

}  // namespace footfix
