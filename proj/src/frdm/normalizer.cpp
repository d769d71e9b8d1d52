#include "footfix/frdm/normalizer.hpp"

#include "footfix/error.hpp"

namespace footfix::frdm {

namespace {

RowVector floored(RowVector v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = std::max(v(i), FeatureNormalizer::kStdFloor);
  return v;
}

void check(const FeatureNormalizer& n, const Matrix& m) {
  if (m.cols() != n.mean.size()) throw ShapeError("normalizer width mismatch");
}

}  // namespace

FeatureNormalizer FeatureNormalizer::identity() {
  const auto d = layout::kFeatureDim;
  return {RowVector::Zero(d), RowVector::Ones(d), RowVector::Zero(d), RowVector::Ones(d)};
}

FeatureNormalizer FeatureNormalizer::fit(std::span<const MotionSequence> corpus) {
  if (corpus.empty()) throw EmptyInputError("cannot fit a normalizer on an empty corpus");
  const auto d = layout::kFeatureDim;
  RowVector sum = RowVector::Zero(d), sq = RowVector::Zero(d);
  RowVector first_sum = RowVector::Zero(d), first_sq = RowVector::Zero(d);
  double rows = 0.0;
  for (const auto& m : corpus) {
    const Matrix& f = m.frames();
    const auto body = f.bottomRows(f.rows() - 1);
    sum += body.colwise().sum();
    sq += body.array().square().matrix().colwise().sum();
    first_sum += f.row(0);
    first_sq += f.row(0).array().square().matrix();
    rows += static_cast<double>(f.rows() - 1);
  }
  const double n0 = static_cast<double>(corpus.size());
  FeatureNormalizer out;
  out.mean = sum / rows;
  out.std = floored((sq / rows - out.mean.array().square().matrix()).cwiseMax(0.0).cwiseSqrt());
  out.first_mean = first_sum / n0;
  out.first_std = floored((first_sq / n0 - out.first_mean.array().square().matrix()).cwiseMax(0.0).cwiseSqrt());
  return out;
}

Matrix FeatureNormalizer::normalize(const Matrix& raw) const {
  check(*this, raw);
  Matrix out = (raw.rowwise() - mean).array().rowwise() / std.array();
  if (raw.rows() > 0) out.row(0) = (raw.row(0) - first_mean).array() / first_std.array();
  return out;
}

Matrix FeatureNormalizer::denormalize(const Matrix& normalized) const {
  check(*this, normalized);
  Matrix out = (normalized.array().rowwise() * std.array()).matrix().rowwise() + mean;
  if (normalized.rows() > 0) {
    out.row(0) = (normalized.row(0).array() * first_std.array()).matrix() + first_mean;
  }
  return out;
}

Matrix FeatureNormalizer::raw_to_normalized_gradient(const Matrix& grad_raw) const {
  check(*this, grad_raw);
  Matrix out = grad_raw.array().rowwise() * std.array();
  if (grad_raw.rows() > 0) out.row(0) = grad_raw.row(0).array() * first_std.array();
  return out;
}

}  // namespace footfix::frdm
