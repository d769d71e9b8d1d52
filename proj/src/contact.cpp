#include "footfix/contact.hpp"

#include "footfix/error.hpp"
#include "footfix/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace footfix {

double step_displacement_sq(const GlobalPositions& positions, int frame, int joint) {
  const int last = positions.frames() - 1;
  const int i = std::min(frame, last - 1);
  return (positions.at(i + 1, joint) - positions.at(i, joint)).squaredNorm();
}

ContactMask detect_contact(const GlobalPositions& positions, std::span<const int> feet,
                           std::span<const int> toes, const ContactThresholds& thresholds) {
  if (feet.empty()) throw ConfigError("feet", "foot joint set is empty");
  if (positions.frames() < 2) throw EmptyInputError("contact detection needs at least 2 frames");
  if (!(thresholds.velocity > 0.0)) throw ConfigError("v_th", "must be positive");
  if (!(thresholds.toe_height > 0.0)) throw ConfigError("h_th_toe", "must be positive");
  if (!(thresholds.ankle_height > 0.0)) throw ConfigError("h_th_ankle", "must be positive");

  ContactMask mask;
  mask.joints.assign(feet.begin(), feet.end());
  mask.velocity_threshold = thresholds.velocity;
  for (int j : feet) {
    const bool toe = std::find(toes.begin(), toes.end(), j) != toes.end();
    mask.height_limit.push_back(toe ? thresholds.toe_height : thresholds.ankle_height);
  }
  const int frames = positions.frames();
  mask.b = BinaryMatrix::Zero(frames, static_cast<Eigen::Index>(feet.size()));
  for (int i = 0; i < frames; ++i) {
    for (std::size_t k = 0; k < feet.size(); ++k) {
      const int j = feet[k];
      const bool slow = step_displacement_sq(positions, i, j) < thresholds.velocity;
      const bool low = positions.height(i, j) < mask.height_limit[k];
      mask.b(i, static_cast<Eigen::Index>(k)) = (slow && low) ? 1 : 0;
    }
  }
  return mask;
}

ContactMask detect_contact(const GlobalPositions& positions, const Skeleton& skeleton,
                           const ContactThresholds& thresholds) {
  return detect_contact(positions, skeleton.feet(), skeleton.toes(), thresholds);
}

double foot_skating_ratio(const GlobalPositions& positions, const ContactMask& mask,
                          const SkatingConfig& config) {
  const int frames = positions.frames();
  if (frames == 0) throw EmptyInputError("skating ratio of an empty sequence");
  if (mask.frames() != frames) throw ShapeError("contact mask and positions disagree on frame count");
  const double slide_sq = config.slide_threshold * config.slide_threshold;

  int skating = 0;
  int in_contact = 0;
  for (int i = 0; i < frames; ++i) {
    bool slides = false;
    bool any_contact = false;
    for (std::size_t k = 0; k < mask.joints.size(); ++k) {
      const int j = mask.joints[k];
      any_contact = any_contact || mask.contact(i, static_cast<int>(k));
      if (positions.height(i, j) >= mask.height_limit[k]) continue;
      const int a = std::min(i, frames - 2);
      const Vec3 d = positions.at(a + 1, j) - positions.at(a, j);
      if (d.x() * d.x() + d.z() * d.z() > slide_sq) slides = true;
    }
    skating += slides ? 1 : 0;
    in_contact += any_contact ? 1 : 0;
  }
  if (config.normalization == SkateNormalization::kContactFrames) {
    return in_contact == 0 ? 0.0 : std::min(1.0, static_cast<double>(skating) / in_contact);
  }
  return static_cast<double>(skating) / frames;
}

double jitter(const GlobalPositions& positions, double fps) {
  const int frames = positions.frames();
  if (frames < 4) throw EmptyInputError("jitter needs at least 4 frames");
  const int joints = static_cast<int>(positions.matrix().cols() / 3);
  double total = 0.0;
  for (int t = 0; t + 3 < frames; ++t) {
    for (int j = 0; j < joints; ++j) {
      const Vec3 jerk = positions.at(t + 3, j) - 3.0 * positions.at(t + 2, j) +
                        3.0 * positions.at(t + 1, j) - positions.at(t, j);
      total += jerk.norm();
    }
  }
  const double mean = total / (static_cast<double>(frames - 3) * joints);
  return mean * fps * fps * fps / 1000.0;
}

double penetration_rate(const GlobalPositions& positions, double margin) {
  const int frames = positions.frames();
  if (frames == 0) return 0.0;
  const int joints = static_cast<int>(positions.matrix().cols() / 3);
  int below = 0;
  for (int t = 0; t < frames; ++t) {
    double lowest = std::numeric_limits<double>::infinity();
    for (int j = 0; j < joints; ++j) lowest = std::min(lowest, positions.height(t, j));
    if (lowest < -margin) ++below;
  }
  return static_cast<double>(below) / frames;
}

MotionSequence smooth_baseline(const MotionSequence& m, int window) {
  if (window < 3 || window % 2 == 0) throw ValidationError("smoothing window must be odd and >= 3");
  if (window > m.length()) throw ValidationError("smoothing window exceeds sequence length");
  const Matrix& src = m.frames();
  Matrix out = src;
  const int half = window / 2;
  const int n = m.length();
  const int smooth_cols = layout::kRotOffset;  // root, velocity and position blocks
  for (int t = 0; t < n; ++t) {
    const int lo = std::max(0, t - half);
    const int hi = std::min(n - 1, t + half);
    out.row(t).head(smooth_cols) =
        src.block(lo, 0, hi - lo + 1, smooth_cols).colwise().sum() / static_cast<double>(hi - lo + 1);
  }
  return MotionSequence(std::move(out), m.fps());
}

SequenceQuality evaluate_quality(const MotionSequence& m, const Skeleton& skeleton, const MetricConfig& config) {
  const GlobalPositions p = global_positions(m);
  const ContactMask mask = detect_contact(p, skeleton, config.contact);
  SequenceQuality q;
  q.fsr = foot_skating_ratio(p, mask, config.skating);
  q.jitter = jitter(p, m.fps());
  q.penetration = penetration_rate(p, config.penetration_margin);
  return q;
}

QualityReport evaluate_corpus(std::span<const MotionSequence> corpus, const Skeleton& skeleton,
                              const MetricConfig& config, int jobs) {
  QualityReport report;
  report.sequences.resize(corpus.size());
  parallel_for(corpus.size(), jobs,
               [&](std::size_t i) { report.sequences[i] = evaluate_quality(corpus[i], skeleton, config); });

  if (!corpus.empty()) {
    for (const auto& q : report.sequences) {
      report.mean.fsr += q.fsr;
      report.mean.jitter += q.jitter;
      report.mean.penetration += q.penetration;
    }
    const double n = static_cast<double>(corpus.size());
    report.mean.fsr /= n;
    report.mean.jitter /= n;
    report.mean.penetration /= n;
  }
  return report;
}

}  // namespace footfix
