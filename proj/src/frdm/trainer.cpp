#include "footfix/frdm/trainer.hpp"

#include "footfix/error.hpp"
#include "footfix/frdm/guidance.hpp"
#include "footfix/kinematics.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace footfix::frdm {

void validate(const TrainConfig& c) {
  if (c.steps < 0) throw ConfigError("train.steps", "must be non-negative");
  if (c.batch < 1) throw ConfigError("train.batch", "must be at least 1");
  if (c.crop != 0 && c.crop < 4) throw ConfigError("train.crop", "must be 0 or at least 4");
  if (!(c.learning_rate > 0.0)) throw ConfigError("train.learning_rate", "must be positive");
  if (c.warmup < 0) throw ConfigError("train.warmup", "must be non-negative");
  if (!(c.grad_clip > 0.0)) throw ConfigError("train.grad_clip", "must be positive");
  if (!(c.ema_decay >= 0.0 && c.ema_decay < 1.0)) throw ConfigError("train.ema_decay", "must lie in [0, 1)");
  if (!(c.losses.eps > 0.0)) throw ConfigError("guidance.eps", "must be positive");
}

MotionSequence crop_sequence(const MotionSequence& m, int start, int length) {
  if (start < 0 || length < 2 || start + length > m.length()) throw ValidationError("crop out of range");
  const Matrix frames = m.frames().middleRows(start, length);
  const auto root = root_states(frames.leftCols(layout::kRootDims));
  Matrix out = frames;
  out.middleCols(layout::kVelOffset, layout::kVelDims) =
      velocity_features(root, frames.middleCols(layout::kPosOffset, layout::kPosDims));
  return MotionSequence(std::move(out), m.fps());
}

TrainingSample prepare_sample(const MotionSequence& clean, const FeatureNormalizer& normalizer,
                              const Skeleton& skeleton, const ContactThresholds& contact) {
  return {normalizer.normalize(clean.frames()), detect_contact(global_positions(clean), skeleton, contact)};
}

LossBreakdown training_loss(const FrdmModel& model, const TrainingSample& sample, int t, const Matrix& noise,
                            const Skeleton& skeleton, const GuidanceConfig& config, Vector* grad) {
  const Matrix x_t = add_noise(sample.normalized, t, noise, model.schedule);
  const Matrix merged = merge(x_t, sample.normalized, merge_mask(skeleton));
  Denoiser::Cache cache;
  const Matrix pred = model.denoiser.forward(merged, t, model.schedule.alpha_bar(t), grad ? &cache : nullptr);
  Matrix grad_pred;
  const LossBreakdown losses = compute_losses(pred, sample.normalized, model.normalizer, sample.mask, skeleton,
                                              config.weights, config.eps, grad ? &grad_pred : nullptr);
  if (grad) *grad = model.denoiser.backward(cache, grad_pred);
  return losses;
}

Trainer::Trainer(FrdmModel& model, const Skeleton& skeleton, TrainConfig config)
    : model_(model), skeleton_(skeleton), config_(std::move(config)), rng_(derive_seed(config_.seed, 0x7a)) {
  validate(config_);
  m_ = Vector::Zero(model_.denoiser.parameters().size());
  v_ = Vector::Zero(model_.denoiser.parameters().size());
}

double Trainer::learning_rate() const {
  const double base = config_.learning_rate;
  if (step_ < config_.warmup) return base * static_cast<double>(step_ + 1) / (config_.warmup + 1);
  const double span = std::max(1, config_.steps - config_.warmup);
  const double progress = std::min(1.0, static_cast<double>(step_ - config_.warmup) / span);
  return base * (0.05 + 0.95 * 0.5 * (1.0 + std::cos(std::numbers::pi * progress)));
}

LossBreakdown Trainer::step(std::span<const MotionSequence> corpus) {
  if (corpus.empty()) throw EmptyInputError("training corpus is empty");
  const int steps_total = model_.schedule.steps();
  Vector grad_sum = Vector::Zero(model_.denoiser.parameters().size());
  LossBreakdown mean;
  for (int b = 0; b < config_.batch; ++b) {
    const auto& seq = corpus[rng_.below(corpus.size())];
    const int length = config_.crop == 0 ? seq.length() : std::min(config_.crop, seq.length());
    const int start = static_cast<int>(rng_.below(static_cast<std::uint64_t>(seq.length() - length + 1)));
    const MotionSequence window = length == seq.length() ? seq : crop_sequence(seq, start, length);
    const TrainingSample sample = prepare_sample(window, model_.normalizer, skeleton_, config_.losses.contact);
    const int t = 1 + static_cast<int>(rng_.below(static_cast<std::uint64_t>(steps_total)));
    Matrix noise(length, layout::kFeatureDim);
    for (Eigen::Index i = 0; i < noise.size(); ++i) noise.data()[i] = rng_.normal();

    Vector grad;
    const LossBreakdown l = training_loss(model_, sample, t, noise, skeleton_, config_.losses, &grad);
    if (!std::isfinite(l.total) || !grad.allFinite()) {
      std::ostringstream msg;
      msg << "training diverged at step " << step_ << " (t=" << t << ", recon=" << l.recon << ", root=" << l.root
          << ", foot=" << l.foot << ", vp=" << l.vp << ", eps_i=" << l.eps_insensitive << ")";
      throw NumericError(msg.str());
    }
    grad_sum += grad;
    mean.recon += l.recon;
    mean.root += l.root;
    mean.foot += l.foot;
    mean.vp += l.vp;
    mean.eps_insensitive += l.eps_insensitive;
    mean.total += l.total;
  }
  const double inv = 1.0 / config_.batch;
  grad_sum *= inv;
  for (double* f : {&mean.recon, &mean.root, &mean.foot, &mean.vp, &mean.eps_insensitive, &mean.total}) *f *= inv;

  const double norm = grad_sum.norm();
  if (norm > config_.grad_clip) grad_sum *= config_.grad_clip / norm;

  constexpr double kBeta1 = 0.9, kBeta2 = 0.999, kEpsilon = 1e-8;
  const double lr = learning_rate();
  ++step_;
  m_ = kBeta1 * m_ + (1.0 - kBeta1) * grad_sum;
  v_ = kBeta2 * v_ + (1.0 - kBeta2) * grad_sum.cwiseAbs2();
  const double c1 = 1.0 - std::pow(kBeta1, step_);
  const double c2 = 1.0 - std::pow(kBeta2, step_);
  model_.denoiser.parameters().array() -=
      lr * (m_.array() / c1) / ((v_.array() / c2).sqrt() + kEpsilon);
  ++model_.train_steps;

  ema_ = step_ == 1 ? mean.total : config_.ema_decay * ema_ + (1.0 - config_.ema_decay) * mean.total;
  return mean;
}

}  // namespace footfix::frdm
