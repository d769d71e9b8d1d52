#include "footfix/frdm/denoiser.hpp"

#include "footfix/error.hpp"
#include "footfix/random.hpp"

#include <cmath>

namespace footfix::frdm {

namespace {

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

Matrix silu(const Matrix& u) {
  return u.unaryExpr([](double v) { return v * sigmoid(v); });
}

Matrix silu_grad(const Matrix& u) {
  return u.unaryExpr([](double v) {
    const double s = sigmoid(v);
    return s * (1.0 + v * (1.0 - s));
  });
}

/// Row range [first, first+len) of the output that reads input rows shifted by `shift`.
struct Overlap {
  Eigen::Index first, len;
};

Overlap overlap(Eigen::Index rows, Eigen::Index shift) {
  const Eigen::Index first = std::max<Eigen::Index>(0, -shift);
  const Eigen::Index last = std::min<Eigen::Index>(rows, rows - shift);
  return {first, std::max<Eigen::Index>(0, last - first)};
}

}  // namespace

void validate(const DenoiserConfig& c) {
  if (c.feature_dim < 1) throw ConfigError("feature_dim", "must be positive");
  if (c.width < 1) throw ConfigError("width", "must be positive");
  if (c.depth < 0) throw ConfigError("depth", "must be non-negative");
  if (c.kernel < 1 || c.kernel % 2 == 0) throw ConfigError("kernel", "must be odd and positive");
  if (c.time_dim < 2 || c.time_dim % 2 != 0) throw ConfigError("time_dim", "must be even and >= 2");
  if (c.steps < 1) throw ConfigError("steps", "must be positive");
}

Denoiser::Denoiser(DenoiserConfig config) : config_(config) {
  validate(config_);
  const auto h = static_cast<std::size_t>(config_.width);
  const auto d = static_cast<std::size_t>(config_.feature_dim);
  const auto e = static_cast<std::size_t>(config_.time_dim);
  const auto k = static_cast<std::size_t>(config_.kernel);
  std::size_t offset = 0;
  auto take = [&offset](std::size_t n) {
    const std::size_t at = offset;
    offset += n;
    return at;
  };
  in_w_ = take(h * d);
  in_b_ = take(h);
  in_t_ = take(h * e);
  for (int b = 0; b < config_.depth; ++b) {
    Block blk{};
    blk.conv_w = take(k * h * h);
    blk.conv_b = take(h);
    blk.pool_w = take(h * h);
    blk.time_w = take(h * e);
    blk.out_w = take(h * h);
    blk.out_b = take(h);
    blk.dilation = 1 << (b % 4);
    blocks_.push_back(blk);
  }
  head_w_ = take(d * h);
  head_b_ = take(d);
  skip_ = take(config_.learned_skip ? static_cast<std::size_t>(config_.steps) * d : 0);
  params_ = Vector::Zero(static_cast<Eigen::Index>(offset));
}

Eigen::Map<const Matrix> Denoiser::view(std::size_t offset, int rows, int cols) const {
  return {params_.data() + offset, rows, cols};
}

Eigen::Map<Matrix> Denoiser::mutable_view(Vector& storage, std::size_t offset, int rows, int cols) const {
  return {storage.data() + offset, rows, cols};
}

void Denoiser::set_conditioning(std::vector<std::uint8_t> mask) {
  if (!mask.empty() && mask.size() != static_cast<std::size_t>(config_.feature_dim)) {
    throw ShapeError("conditioning mask width mismatch");
  }
  conditioning_ = std::move(mask);
}

void Denoiser::initialize(std::uint64_t seed) {
  Rng rng(seed);
  const int h = config_.width, d = config_.feature_dim, e = config_.time_dim, k = config_.kernel;
  auto fill = [&](std::size_t offset, int count, double scale) {
    for (int i = 0; i < count; ++i) params_(static_cast<Eigen::Index>(offset) + i) = scale * rng.normal();
  };
  params_.setZero();
  fill(in_w_, h * d, 1.0 / std::sqrt(static_cast<double>(d)));
  fill(in_t_, h * e, 1.0 / std::sqrt(static_cast<double>(e)));
  for (const Block& b : blocks_) {
    fill(b.conv_w, k * h * h, 1.0 / std::sqrt(static_cast<double>(k * h)));
    fill(b.pool_w, h * h, 0.5 / std::sqrt(static_cast<double>(h)));
    fill(b.time_w, h * e, 1.0 / std::sqrt(static_cast<double>(e)));
    fill(b.out_w, h * h, 0.1 / std::sqrt(static_cast<double>(h)));
  }
  fill(head_w_, d * h, 0.01 / std::sqrt(static_cast<double>(h)));
}

Vector Denoiser::time_embedding(int t) const {
  const int half = config_.time_dim / 2;
  Vector e(config_.time_dim);
  for (int i = 0; i < half; ++i) {
    const double freq = std::exp(-std::log(1000.0) * i / half);
    e(i) = std::sin(t * freq);
    e(half + i) = std::cos(t * freq);
  }
  return e;
}

Matrix Denoiser::forward(const Matrix& x, int t, double alpha_bar, Cache* cache) const {
  if (x.cols() != config_.feature_dim) throw ShapeError("denoiser input width mismatch");
  if (x.rows() < 1) throw EmptyInputError("denoiser input has no frames");
  if (t < 1 || t > config_.steps) throw ValidationError("denoiser step out of range");
  const int h = config_.width, d = config_.feature_dim, e = config_.time_dim, k = config_.kernel;
  const Eigen::Index rows = x.rows();
  const Vector temb = time_embedding(t);

  RowVector bias0 = (view(in_b_, h, 1) + view(in_t_, h, e) * temb).transpose();
  Matrix hidden = x * view(in_w_, h, d).transpose();
  hidden.rowwise() += bias0;

  if (cache) {
    cache->input = x;
    cache->time_embedding = temb;
    cache->hidden.assign(1, hidden);
    cache->pre_activation.clear();
    cache->activation.clear();
    cache->pooled.clear();
    cache->step = t;
  }

  for (const Block& b : blocks_) {
    Matrix u = Matrix::Zero(rows, h);
    for (int tap = 0; tap < k; ++tap) {
      const Eigen::Index shift = static_cast<Eigen::Index>(tap - k / 2) * b.dilation;
      const Overlap o = overlap(rows, shift);
      if (o.len == 0) continue;
      u.middleRows(o.first, o.len).noalias() +=
          hidden.middleRows(o.first + shift, o.len) *
          view(b.conv_w + static_cast<std::size_t>(tap * h * h), h, h).transpose();
    }
    const RowVector pooled = hidden.colwise().mean();
    const RowVector bias = (view(b.conv_b, h, 1) + view(b.time_w, h, e) * temb).transpose() +
                           pooled * view(b.pool_w, h, h).transpose();
    u.rowwise() += bias;
    Matrix a = silu(u);
    Matrix next = hidden;
    next.noalias() += a * view(b.out_w, h, h).transpose();
    next.rowwise() += RowVector(view(b.out_b, h, 1).transpose());
    if (cache) {
      cache->pooled.push_back(pooled);
      cache->pre_activation.push_back(std::move(u));
      cache->activation.push_back(std::move(a));
      cache->hidden.push_back(next);
    }
    hidden = std::move(next);
  }

  const std::size_t skip_row = skip_ + static_cast<std::size_t>((t - 1) * d);
  Matrix out(rows, d);
  for (int c = 0; c < d; ++c) {
    double gain = 1.0;
    if (!is_conditioning(c)) {
      gain = std::sqrt(alpha_bar);
      if (config_.learned_skip) gain += params_(static_cast<Eigen::Index>(skip_row) + c);
    }
    out.col(c) = gain * x.col(c);
  }
  out.noalias() += hidden * view(head_w_, d, h).transpose();
  out.rowwise() += RowVector(view(head_b_, d, 1).transpose());
  return out;
}

Vector Denoiser::backward(const Cache& cache, const Matrix& grad_output) const {
  const int h = config_.width, d = config_.feature_dim, e = config_.time_dim, k = config_.kernel;
  const Eigen::Index rows = cache.input.rows();
  if (grad_output.rows() != rows || grad_output.cols() != d) throw ShapeError("gradient shape mismatch");
  Vector grad = Vector::Zero(params_.size());
  const Vector& temb = cache.time_embedding;

  mutable_view(grad, head_w_, d, h).noalias() = grad_output.transpose() * cache.hidden.back();
  mutable_view(grad, head_b_, d, 1) = grad_output.colwise().sum().transpose();
  const std::size_t skip_row = skip_ + static_cast<std::size_t>((cache.step - 1) * d);
  for (int c = 0; c < d && config_.learned_skip; ++c) {
    if (!is_conditioning(c)) grad(static_cast<Eigen::Index>(skip_row) + c) = grad_output.col(c).dot(cache.input.col(c));
  }
  Matrix dh = grad_output * view(head_w_, d, h);

  for (std::size_t bi = blocks_.size(); bi-- > 0;) {
    const Block& b = blocks_[bi];
    const Matrix& hidden = cache.hidden[bi];
    mutable_view(grad, b.out_w, h, h).noalias() = dh.transpose() * cache.activation[bi];
    mutable_view(grad, b.out_b, h, 1) = dh.colwise().sum().transpose();
    const Matrix du = (dh * view(b.out_w, h, h)).cwiseProduct(silu_grad(cache.pre_activation[bi]));
    const Vector du_sum = du.colwise().sum().transpose();
    mutable_view(grad, b.conv_b, h, 1) = du_sum;
    mutable_view(grad, b.time_w, h, e).noalias() = du_sum * temb.transpose();
    mutable_view(grad, b.pool_w, h, h).noalias() = du_sum * cache.pooled[bi];
    const RowVector dpooled = du_sum.transpose() * view(b.pool_w, h, h);

    Matrix dprev = dh;  // residual path
    dprev.rowwise() += dpooled / static_cast<double>(rows);
    for (int tap = 0; tap < k; ++tap) {
      const Eigen::Index shift = static_cast<Eigen::Index>(tap - k / 2) * b.dilation;
      const Overlap o = overlap(rows, shift);
      if (o.len == 0) continue;
      const std::size_t w_off = b.conv_w + static_cast<std::size_t>(tap * h * h);
      mutable_view(grad, w_off, h, h).noalias() +=
          du.middleRows(o.first, o.len).transpose() * hidden.middleRows(o.first + shift, o.len);
      dprev.middleRows(o.first + shift, o.len).noalias() += du.middleRows(o.first, o.len) * view(w_off, h, h);
    }
    dh = std::move(dprev);
  }

  mutable_view(grad, in_w_, h, d).noalias() = dh.transpose() * cache.input;
  const Vector dh_sum = dh.colwise().sum().transpose();
  mutable_view(grad, in_b_, h, 1) = dh_sum;
  mutable_view(grad, in_t_, h, e).noalias() = dh_sum * temb.transpose();
  return grad;
}

}  // namespace footfix::frdm
