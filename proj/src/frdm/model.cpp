#include "footfix/frdm/model.hpp"

#include "footfix/error.hpp"
#include "footfix/frdm/guidance.hpp"
#include "footfix/kinematics.hpp"
#include "footfix/random.hpp"

#include <cmath>

namespace footfix::frdm {

FrdmModel make_model(const DiffusionSchedule& schedule, const DenoiserConfig& config, const Skeleton& skeleton,
                     std::uint64_t seed) {
  FrdmModel model{schedule, FeatureNormalizer::identity(), Denoiser(config), seed, 0};
  model.denoiser.initialize(seed);
  if (config.feature_dim == layout::kFeatureDim) {
    const FeatureMask merged = merge_mask(skeleton);
    std::vector<std::uint8_t> kept(merged.size());
    for (std::size_t c = 0; c < merged.size(); ++c) kept[c] = merged[c] ? 0 : 1;
    model.denoiser.set_conditioning(std::move(kept));
  }
  return model;
}

void validate(const GuidanceConfig& c, int steps) {
  if (c.t_threshold < 1 || c.t_threshold > steps) {
    throw ConfigError("guidance.t_th", "must lie in 1.." + std::to_string(steps));
  }
  if (!(c.eps > 0.0)) throw ConfigError("guidance.eps", "must be positive");
  const auto& w = c.weights;
  for (double v : {w.recon, w.root, w.foot, w.vp, w.eps_insensitive}) {
    if (!(v >= 0.0)) throw ConfigError("loss_weights", "must be non-negative");
  }
  if (!(c.contact.velocity > 0.0)) throw ConfigError("contact.v_th", "must be positive");
  if (!(c.contact.toe_height > 0.0)) throw ConfigError("contact.h_th_toe", "must be positive");
  if (!(c.contact.ankle_height > 0.0)) throw ConfigError("contact.h_th_ankle", "must be positive");
}

namespace {

/// Damping leaves each foot behind its predicted path by whatever it removed.
/// Across every non-contact run that offset is paid back linearly, so a foot
/// rejoins the prediction before its next contact instead of drifting.
Matrix repay_offsets(const Matrix& predicted, const Matrix& damped, const BinaryMatrix& step_contact) {
  const auto n = predicted.rows();
  Matrix out = damped;
  for (Eigen::Index k = 0; k < step_contact.cols(); ++k) {
    const auto cols = Eigen::seqN(3 * k, 3);
    for (Eigen::Index t = 1; t < n; ++t) {
      if (step_contact(t, k)) {
        out(t, cols) = out(t - 1, cols) + (damped(t, cols) - damped(t - 1, cols));
        continue;
      }
      Eigen::Index remaining = 1;
      while (t + remaining < n && !step_contact(t + remaining, k)) ++remaining;
      const double keep = 1.0 - 1.0 / static_cast<double>(remaining);
      out(t, cols) = predicted(t, cols) - keep * (predicted(t - 1, cols) - out(t - 1, cols));
    }
  }
  return out;
}

}  // namespace

Matrix foot_phase(const Matrix& pred, const ContactMask& contact, double w) {
  using namespace layout;
  const auto root = root_states(pred.leftCols(kRootDims));
  const GlobalPositions world = recover_global(root, pred.middleCols(kPosOffset, kPosDims));
  const auto n = pred.rows();
  const auto k = static_cast<Eigen::Index>(contact.joints.size());

  Matrix feet(n, 3 * k);
  for (Eigen::Index i = 0; i < k; ++i) {
    feet.middleCols(3 * i, 3) = world.matrix().middleCols(3 * contact.joints[static_cast<std::size_t>(i)], 3);
  }
  // b(t) describes the step t -> t+1, which finite_difference stores at t+1.
  BinaryMatrix shifted = BinaryMatrix::Zero(n, k);
  if (n > 1) shifted.bottomRows(n - 1) = contact.b.topRows(n - 1);
  const FootGuidanceResult guided = foot_contact_guidance(finite_difference(feet), shifted, w, feet.row(0));
  const Matrix settled = repay_offsets(feet, guided.positions, shifted);

  Matrix moved = world.matrix();
  for (Eigen::Index i = 0; i < k; ++i) {
    moved.middleCols(3 * contact.joints[static_cast<std::size_t>(i)], 3) = settled.middleCols(3 * i, 3);
  }
  const Matrix local = localize(GlobalPositions(std::move(moved)), root);
  Matrix out = pred;
  out.middleCols(kPosOffset, kPosDims) = local;
  out.middleCols(kVelOffset, kVelDims) = velocity_features(root, local);
  return out;
}

MotionSequence restore(const MotionSequence& x, const FrdmModel& model, const Skeleton& skeleton,
                       const GuidanceConfig& config, std::uint64_t seed) {
  const int steps = model.schedule.steps();
  validate(config, steps);
  if (!model.trained()) throw ModelStateError("restore needs a trained model");
  if (model.denoiser.config().feature_dim != layout::kFeatureDim) {
    throw ModelStateError("denoiser feature width does not match the motion layout");
  }

  const FeatureMask mask = merge_mask(skeleton);
  const Matrix& original = x.frames();
  const Matrix original_n = model.normalizer.normalize(original);
  const ContactMask contact = detect_contact(global_positions(x), skeleton, config.contact);

  Rng rng(seed);
  Matrix x_T(original.rows(), original.cols());
  for (Eigen::Index i = 0; i < x_T.size(); ++i) x_T.data()[i] = rng.normal();

  Matrix x_t = x_T;
  Matrix guided;
  for (int t = steps; t >= 1; --t) {
    const Matrix merged = merge(x_t, original_n, mask);
    const Matrix pred = model.normalizer.denormalize(model.denoiser.forward(merged, t, model.schedule.alpha_bar(t)));
    const double w = static_cast<double>(t) / steps;
    guided = t >= config.t_threshold ? geometric_guidance(pred, original, w) : foot_phase(pred, contact, w);
    if (!guided.allFinite()) throw NumericError("non-finite values during restoration at step " + std::to_string(t));
    const double ab = model.schedule.alpha_bar(t - 1);
    x_t = std::sqrt(ab) * model.normalizer.normalize(guided) + std::sqrt(1.0 - ab) * x_T;
  }

  Matrix out = original;
  for (int c = 0; c < layout::kFeatureDim; ++c) {
    if (mask[static_cast<std::size_t>(c)]) out.col(c) = guided.col(c);
  }
  return MotionSequence(std::move(out), x.fps());
}

}  // namespace footfix::frdm
