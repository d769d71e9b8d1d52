#pragma once

#include "footfix/motion.hpp"

#include <cstdint>
#include <vector>

namespace footfix::frdm {

struct DenoiserConfig {
  int feature_dim = layout::kFeatureDim;
  int width = 64;
  int depth = 4;
  int kernel = 5;
  int time_dim = 32;
  int steps = 100;  // diffusion steps the skip table covers
  bool learned_skip = true;

  bool operator==(const DenoiserConfig&) const = default;
};

void validate(const DenoiserConfig& config);

/// Time-conditioned residual temporal network predicting the clean sequence:
///
///   h_0     = x W_in^T + (b_in + T_in e(t))
///   u_k     = conv_k(h_k) + b_k + G_k mean_t(h_k) + T_k e(t)
///   h_{k+1} = h_k + silu(u_k) W_k^T + c_k
///   x0_hat  = s(t) * x + h_D W_out^T + b_out
///
/// s(t) is sqrt(alpha_bar_t) plus a learned per-step, per-dim correction for
/// noised dims, and exactly 1 for conditioning dims, which arrive clean.
/// conv_k is a zero-padded dilated temporal convolution (dilation 2^(k mod 4));
/// the mean-pooled term gives every frame a view of the whole window.
/// Parameters live in one flat vector so optimizers and checkpoints see a
/// single blob.
class Denoiser {
 public:
  explicit Denoiser(DenoiserConfig config);

  const DenoiserConfig& config() const noexcept { return config_; }
  std::size_t parameter_count() const noexcept { return static_cast<std::size_t>(params_.size()); }
  Vector& parameters() noexcept { return params_; }
  const Vector& parameters() const noexcept { return params_; }

  /// Dims flagged here are treated as clean conditioning (unit skip). Empty
  /// means every dim is noised.
  void set_conditioning(std::vector<std::uint8_t> mask);
  const std::vector<std::uint8_t>& conditioning() const noexcept { return conditioning_; }

  /// Deterministic random initialization.
  void initialize(std::uint64_t seed);

  struct Cache {
    Matrix input;
    Vector time_embedding;
    std::vector<Matrix> hidden;  // depth + 1
    std::vector<Matrix> pre_activation;
    std::vector<Matrix> activation;
    std::vector<RowVector> pooled;
    int step = 0;
  };

  /// x: L x feature_dim in normalized units; t in 1..T.
  Matrix forward(const Matrix& x, int t, double alpha_bar, Cache* cache = nullptr) const;
  /// Gradient of a scalar loss w.r.t. the parameters, given dLoss/dOutput.
  Vector backward(const Cache& cache, const Matrix& grad_output) const;

  Vector time_embedding(int t) const;

 private:
  struct Block {
    std::size_t conv_w, conv_b, pool_w, time_w, out_w, out_b;
    int dilation;
  };

  bool is_conditioning(int dim) const {
    return !conditioning_.empty() && conditioning_[static_cast<std::size_t>(dim)] != 0;
  }
  Eigen::Map<const Matrix> view(std::size_t offset, int rows, int cols) const;
  Eigen::Map<Matrix> mutable_view(Vector& storage, std::size_t offset, int rows, int cols) const;

  DenoiserConfig config_;
  Vector params_;
  std::size_t in_w_ = 0, in_b_ = 0, in_t_ = 0, head_w_ = 0, head_b_ = 0, skip_ = 0;
  std::vector<Block> blocks_;
  std::vector<std::uint8_t> conditioning_;
};

}  // namespace footfix::frdm
