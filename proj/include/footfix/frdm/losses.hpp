#pragma once

#include "footfix/contact.hpp"
#include "footfix/frdm/normalizer.hpp"
#include "footfix/motion.hpp"
#include "footfix/skeleton.hpp"

namespace footfix::frdm {

// Each loss returns its value and, when the gradient pointers are non-null,
// writes d(loss)/d(input) into them (resized as needed).

/// sum over frames/joints/axes of (cumsum(v) - p)^2 using the non-root
/// velocity slots and a zero initial state. vel: L x 66, pos: L x 63.
double loss_vp(const Matrix& vel, const Matrix& pos, Matrix* grad_vel = nullptr, Matrix* grad_pos = nullptr);

/// sum_i sum_{k in F} b_k(i) |P_k(i+1) - P_k(i)|^2 with P = Rec(root, pos).
/// root: L x 4, pos: L x 63.
double loss_foot(const Matrix& root, const Matrix& pos, const ContactMask& mask, Matrix* grad_root = nullptr,
                 Matrix* grad_pos = nullptr);

/// sum_t sum_{k in KF} max(|FK(rot)_k - pos_k|^2 - eps, 0)^2. rot: L x 126.
double loss_eps_insensitive(const Matrix& rot, const Matrix& pos, const Skeleton& skeleton, double eps,
                            Matrix* grad_rot = nullptr, Matrix* grad_pos = nullptr);

struct LossWeights {
  double recon = 1.0;
  double root = 1.0;
  double foot = 1.0;
  double vp = 0.5;
  double eps_insensitive = 0.5;
};

struct LossBreakdown {
  double recon = 0.0;
  double root = 0.0;
  double foot = 0.0;
  double vp = 0.0;
  double eps_insensitive = 0.0;
  double total = 0.0;
};

/// Reconstruction and root terms are mean squared errors in normalized units;
/// the geometric terms are evaluated on denormalized features and enter the
/// total divided by the frame count.
LossBreakdown compute_losses(const Matrix& pred_normalized, const Matrix& target_normalized,
                             const FeatureNormalizer& normalizer, const ContactMask& mask,
                             const Skeleton& skeleton, const LossWeights& weights, double eps,
                             Matrix* grad_pred_normalized = nullptr);

}  // namespace footfix::frdm
