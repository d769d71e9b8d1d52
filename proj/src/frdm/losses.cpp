#include "footfix/frdm/losses.hpp"

#include "footfix/error.hpp"
#include "footfix/kinematics.hpp"

#include <array>
#include <cmath>

namespace footfix::frdm {

namespace {

using layout::kJoints;

Mat3 yaw_derivative(double a) {
  const double c = std::cos(a), s = std::sin(a);
  Mat3 d;
  d << -s, 0.0, c, 0.0, 0.0, 0.0, -c, 0.0, -s;
  return d;
}

/// Gram-Schmidt decoding with its intermediates kept for the backward pass.
struct DecodedRotation {
  Vec3 a2, b1, b2;
  double n1 = 0.0, n2 = 0.0;
  Mat3 matrix;
};

DecodedRotation decode(const Vec6& r6) {
  DecodedRotation d;
  d.matrix = rot6d_to_matrix(r6);  // validates degeneracy
  const Vec3 a1 = r6.head<3>();
  d.a2 = r6.tail<3>();
  d.n1 = a1.norm();
  d.b1 = a1 / d.n1;
  const Vec3 u = d.a2 - d.b1.dot(d.a2) * d.b1;
  d.n2 = u.norm();
  d.b2 = u / d.n2;
  return d;
}

Vec6 decode_backward(const DecodedRotation& d, const Mat3& grad_matrix) {
  Vec3 gb1 = grad_matrix.col(0);
  Vec3 gb2 = grad_matrix.col(1);
  const Vec3 gb3 = grad_matrix.col(2);
  gb1 += d.b2.cross(gb3);
  gb2 += gb3.cross(d.b1);
  const Vec3 gu = (gb2 - d.b2 * d.b2.dot(gb2)) / d.n2;
  const Vec3 ga2 = gu - d.b1 * d.b1.dot(gu);
  gb1 -= d.b1.dot(d.a2) * gu + d.b1.dot(gu) * d.a2;
  const Vec3 ga1 = (gb1 - d.b1 * d.b1.dot(gb1)) / d.n1;
  Vec6 out;
  out.head<3>() = ga1;
  out.tail<3>() = ga2;
  return out;
}

void check_rows(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw ShapeError("loss inputs disagree on frame count");
}

}  // namespace

double loss_vp(const Matrix& vel, const Matrix& pos, Matrix* grad_vel, Matrix* grad_pos) {
  if (vel.cols() != layout::kVelDims || pos.cols() != layout::kPosDims) {
    throw ShapeError("loss_vp expects 66 velocity and 63 position columns");
  }
  check_rows(vel, pos);
  const Matrix integrated =
      cumsum_velocity(vel.rightCols(layout::kPosDims), RowVector::Zero(layout::kPosDims));
  const Matrix residual = integrated - pos;
  if (grad_pos) *grad_pos = -2.0 * residual;
  if (grad_vel) {
    grad_vel->setZero(vel.rows(), vel.cols());
    RowVector acc = RowVector::Zero(layout::kPosDims);
    for (Eigen::Index t = vel.rows(); t-- > 0;) {
      acc += 2.0 * residual.row(t);
      grad_vel->row(t).tail(layout::kPosDims) = acc;
    }
  }
  return residual.squaredNorm();
}

double loss_foot(const Matrix& root, const Matrix& pos, const ContactMask& mask, Matrix* grad_root,
                 Matrix* grad_pos) {
  if (root.cols() != layout::kRootDims || pos.cols() != layout::kPosDims) {
    throw ShapeError("loss_foot expects 4 root and 63 position columns");
  }
  check_rows(root, pos);
  const auto n = root.rows();
  if (mask.frames() != n) throw ShapeError("contact mask frame count mismatch");
  const auto states = root_states(root);
  const RootTrajectory traj = integrate_root(states);

  auto world = [&](Eigen::Index t, int joint) -> Vec3 {
    const Vec3 local = pos.block<1, 3>(t, 3 * (joint - 1)).transpose();
    return yaw_rotation(traj.yaw(t)) * local + Vec3(traj.x(t), root(t, layout::kHeight), traj.z(t));
  };

  const bool want_grad = grad_root || grad_pos;
  Matrix g_world;  // L x 3|F|
  if (want_grad) g_world = Matrix::Zero(n, 3 * static_cast<Eigen::Index>(mask.joints.size()));
  double loss = 0.0;
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    for (std::size_t k = 0; k < mask.joints.size(); ++k) {
      if (!mask.contact(static_cast<int>(i), static_cast<int>(k))) continue;
      const int j = mask.joints[k];
      const Vec3 d = world(i + 1, j) - world(i, j);
      loss += d.squaredNorm();
      if (want_grad) {
        const auto c = 3 * static_cast<Eigen::Index>(k);
        g_world.block<1, 3>(i + 1, c) += 2.0 * d.transpose();
        g_world.block<1, 3>(i, c) -= 2.0 * d.transpose();
      }
    }
  }
  if (!want_grad) return loss;

  Matrix gpos = Matrix::Zero(n, layout::kPosDims);
  Vector g_yaw = Vector::Zero(n), g_x = Vector::Zero(n), g_z = Vector::Zero(n);
  Matrix groot = Matrix::Zero(n, layout::kRootDims);
  for (Eigen::Index t = 0; t < n; ++t) {
    const Mat3 r = yaw_rotation(traj.yaw(t));
    const Mat3 dr = yaw_derivative(traj.yaw(t));
    for (std::size_t k = 0; k < mask.joints.size(); ++k) {
      const Vec3 g = g_world.block<1, 3>(t, 3 * static_cast<Eigen::Index>(k)).transpose();
      if (g.isZero(0.0)) continue;
      const int j = mask.joints[k];
      const Vec3 local = pos.block<1, 3>(t, 3 * (j - 1)).transpose();
      gpos.block<1, 3>(t, 3 * (j - 1)) += (r.transpose() * g).transpose();
      g_yaw(t) += g.dot(dr * local);
      g_x(t) += g.x();
      groot(t, layout::kHeight) += g.y();
      g_z(t) += g.z();
    }
  }
  // Reverse pass through the exclusive integration.
  double acc_x = 0.0, acc_z = 0.0, acc_yaw = 0.0;
  for (Eigen::Index t = n - 1; t >= 0; --t) {
    // acc_* hold the total adjoints of X, Z, yaw at frame t+1.
    if (t + 1 < n) {
      const double a = traj.yaw(t);
      const double c = std::cos(a), s = std::sin(a);
      const double vx = root(t, layout::kVelX), vz = root(t, layout::kVelZ);
      groot(t, layout::kVelX) = acc_x * c - acc_z * s;
      groot(t, layout::kVelZ) = acc_x * s + acc_z * c;
      groot(t, layout::kYawRate) = acc_yaw;
      acc_yaw += acc_x * (-s * vx + c * vz) + acc_z * (-c * vx - s * vz);
    }
    acc_x += g_x(t);
    acc_z += g_z(t);
    acc_yaw += g_yaw(t);
  }
  if (grad_root) *grad_root = std::move(groot);
  if (grad_pos) *grad_pos = std::move(gpos);
  return loss;
}

double loss_eps_insensitive(const Matrix& rot, const Matrix& pos, const Skeleton& skeleton, double eps,
                            Matrix* grad_rot, Matrix* grad_pos) {
  if (rot.cols() != layout::kRotDims || pos.cols() != layout::kPosDims) {
    throw ShapeError("loss_eps_insensitive expects 126 rotation and 63 position columns");
  }
  check_rows(rot, pos);
  const auto n = rot.rows();
  if (grad_rot) grad_rot->setZero(n, layout::kRotDims);
  if (grad_pos) grad_pos->setZero(n, layout::kPosDims);
  const bool want_grad = grad_rot || grad_pos;

  std::array<DecodedRotation, kJoints> decoded;
  std::array<Mat3, kJoints> global;
  std::array<Vec3, kJoints> fk;
  double loss = 0.0;
  for (Eigen::Index t = 0; t < n; ++t) {
    global[0] = Mat3::Identity();
    fk[0] = Vec3::Zero();
    for (int j = 1; j < kJoints; ++j) {
      const auto p = static_cast<std::size_t>(skeleton.parent(j));
      const auto i = static_cast<std::size_t>(j);
      decoded[i] = decode(rot.block<1, 6>(t, 6 * (j - 1)).transpose());
      fk[i] = fk[p] + global[p] * skeleton.rest_offset(j);
      global[i] = global[p] * decoded[i].matrix;
    }

    std::array<Vec3, kJoints> g_fk;
    g_fk.fill(Vec3::Zero());
    bool active = false;
    for (int k : skeleton.knee_feet()) {
      const Vec3 diff = fk[static_cast<std::size_t>(k)] - pos.block<1, 3>(t, 3 * (k - 1)).transpose();
      const double excess = diff.squaredNorm() - eps;
      if (excess <= 0.0) continue;
      loss += excess * excess;
      if (!want_grad) continue;
      active = true;
      const Vec3 g = 4.0 * excess * diff;
      g_fk[static_cast<std::size_t>(k)] += g;
      if (grad_pos) grad_pos->block<1, 3>(t, 3 * (k - 1)) -= g.transpose();
    }
    if (!active || !grad_rot) continue;

    std::array<Mat3, kJoints> g_global;
    g_global.fill(Mat3::Zero());
    for (int j = kJoints - 1; j >= 1; --j) {
      const auto p = static_cast<std::size_t>(skeleton.parent(j));
      const auto i = static_cast<std::size_t>(j);
      g_fk[p] += g_fk[i];
      g_global[p] += g_fk[i] * skeleton.rest_offset(j).transpose();
      g_global[p] += g_global[i] * decoded[i].matrix.transpose();
      const Mat3 g_local = global[p].transpose() * g_global[i];
      grad_rot->block<1, 6>(t, 6 * (j - 1)) += decode_backward(decoded[i], g_local).transpose();
    }
  }
  return loss;
}

LossBreakdown compute_losses(const Matrix& pred_normalized, const Matrix& target_normalized,
                             const FeatureNormalizer& normalizer, const ContactMask& mask,
                             const Skeleton& skeleton, const LossWeights& w, double eps,
                             Matrix* grad_pred_normalized) {
  using namespace layout;
  if (pred_normalized.rows() != target_normalized.rows() || pred_normalized.cols() != kFeatureDim ||
      target_normalized.cols() != kFeatureDim) {
    throw ShapeError("prediction and target must both be L x 259");
  }
  const auto n = pred_normalized.rows();
  const double frames = static_cast<double>(n);
  const Matrix raw = normalizer.denormalize(pred_normalized);
  const Matrix root = raw.leftCols(kRootDims);
  const Matrix vel = raw.middleCols(kVelOffset, kVelDims);
  const Matrix pos = raw.middleCols(kPosOffset, kPosDims);
  const Matrix rot = raw.middleCols(kRotOffset, kRotDims);
  const Matrix diff = pred_normalized - target_normalized;

  LossBreakdown out;
  out.recon = diff.squaredNorm() / static_cast<double>(diff.size());
  out.root = diff.leftCols(kRootDims).squaredNorm() / (frames * kRootDims);

  const bool grad = grad_pred_normalized != nullptr;
  Matrix g_root, g_pos_foot, g_vel, g_pos_vp, g_rot, g_pos_eps;
  out.foot = loss_foot(root, pos, mask, grad ? &g_root : nullptr, grad ? &g_pos_foot : nullptr);
  out.vp = loss_vp(vel, pos, grad ? &g_vel : nullptr, grad ? &g_pos_vp : nullptr);
  out.eps_insensitive = loss_eps_insensitive(rot, pos, skeleton, eps, grad ? &g_rot : nullptr,
                                             grad ? &g_pos_eps : nullptr);
  out.total = w.recon * out.recon + w.root * out.root +
              (w.foot * out.foot + w.vp * out.vp + w.eps_insensitive * out.eps_insensitive) / frames;

  if (grad) {
    Matrix g_raw = Matrix::Zero(n, kFeatureDim);
    g_raw.leftCols(kRootDims) = (w.foot / frames) * g_root;
    g_raw.middleCols(kVelOffset, kVelDims) = (w.vp / frames) * g_vel;
    g_raw.middleCols(kPosOffset, kPosDims) =
        (w.foot * g_pos_foot + w.vp * g_pos_vp + w.eps_insensitive * g_pos_eps) / frames;
    g_raw.middleCols(kRotOffset, kRotDims) = (w.eps_insensitive / frames) * g_rot;
    Matrix g = normalizer.raw_to_normalized_gradient(g_raw);
    g += (2.0 * w.recon / static_cast<double>(diff.size())) * diff;
    g.leftCols(kRootDims) += (2.0 * w.root / (frames * kRootDims)) * diff.leftCols(kRootDims);
    *grad_pred_normalized = std::move(g);
  }
  return out;
}

}  // namespace footfix::frdm
