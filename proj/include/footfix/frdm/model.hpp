#pragma once

#include "footfix/contact.hpp"
#include "footfix/frdm/denoiser.hpp"
#include "footfix/frdm/losses.hpp"
#include "footfix/frdm/normalizer.hpp"
#include "footfix/frdm/schedule.hpp"
#include "footfix/skeleton.hpp"

#include <cstdint>

namespace footfix::frdm {

struct FrdmModel {
  DiffusionSchedule schedule;
  FeatureNormalizer normalizer;
  Denoiser denoiser;
  std::uint64_t seed = 0;
  std::uint64_t train_steps = 0;

  bool trained() const noexcept { return train_steps > 0; }
};

/// Fresh model: initialized denoiser conditioned on the skeleton's kept dims,
/// identity normalizer until fitted.
FrdmModel make_model(const DiffusionSchedule& schedule, const DenoiserConfig& config, const Skeleton& skeleton,
                     std::uint64_t seed);

struct GuidanceConfig {
  int t_threshold = 10;
  double eps = 0.1;
  LossWeights weights;
  ContactThresholds contact;
};

/// Throws ConfigError unless 1 <= t_threshold <= steps, eps > 0, weights >= 0.
void validate(const GuidanceConfig& config, int steps);

/// Foot-contact phase on raw features: world-frame velocities of foot joints
/// in contact are scaled by w and re-integrated; the displacement removed is
/// repaid over the following non-contact frames. Positions and velocities of
/// the foot joints change; root and rotations pass through.
Matrix foot_phase(const Matrix& prediction, const ContactMask& contact, double w);

/// Guided reverse diffusion over the root/knee/foot dims. Every other dim of the
/// result is copied from x unchanged. Throws ModelStateError for an untrained
/// model.
MotionSequence restore(const MotionSequence& x, const FrdmModel& model, const Skeleton& skeleton,
                       const GuidanceConfig& config, std::uint64_t seed);

}  // namespace footfix::frdm
