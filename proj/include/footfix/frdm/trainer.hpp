#pragma once

#include "footfix/frdm/model.hpp"
#include "footfix/random.hpp"

#include <span>
#include <vector>

namespace footfix::frdm {

struct TrainConfig {
  int steps = 6000;
  int batch = 4;
  int crop = 64;  // 0 trains on whole sequences
  double learning_rate = 2e-3;
  int warmup = 100;
  double grad_clip = 1.0;
  double ema_decay = 0.98;
  std::uint64_t seed = 0;
  GuidanceConfig losses;  // eps, weights and contact thresholds
};

void validate(const TrainConfig& config);

/// One clean training window in normalized units plus its contact mask.
struct TrainingSample {
  Matrix normalized;
  ContactMask mask;
};

/// Cuts frames [start, start+length) out of a sequence, rebuilding the
/// velocity block so the crop starts from its own origin.
MotionSequence crop_sequence(const MotionSequence& m, int start, int length);

TrainingSample prepare_sample(const MotionSequence& clean, const FeatureNormalizer& normalizer,
                              const Skeleton& skeleton, const ContactThresholds& contact);

/// Loss for one (sample, t, noise) triple: x_t = add_noise, merged with the
/// clean window, denoised, scored. Writes the parameter gradient when asked.
LossBreakdown training_loss(const FrdmModel& model, const TrainingSample& sample, int t, const Matrix& noise,
                            const Skeleton& skeleton, const GuidanceConfig& config, Vector* grad = nullptr);

/// Adam with linear warmup, cosine decay and global-norm clipping.
class Trainer {
 public:
  Trainer(FrdmModel& model, const Skeleton& skeleton, TrainConfig config);

  /// Draws a batch of crops from the corpus, takes one optimizer step and
  /// returns the batch-mean losses. Throws NumericError on a non-finite loss.
  LossBreakdown step(std::span<const MotionSequence> corpus);

  int steps_taken() const noexcept { return step_; }
  double ema_loss() const noexcept { return ema_; }
  double learning_rate() const;

 private:
  FrdmModel& model_;
  Skeleton skeleton_;
  TrainConfig config_;
  Rng rng_;
  Vector m_, v_;
  int step_ = 0;
  double ema_ = 0.0;
};

}  // namespace footfix::frdm
