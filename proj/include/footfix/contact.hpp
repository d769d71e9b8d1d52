#pragma once

#include "footfix/kinematics.hpp"
#include "footfix/motion.hpp"
#include "footfix/skeleton.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace footfix {

struct ContactThresholds {
  double velocity = 0.001;     // squared displacement per frame, m^2
  double toe_height = 0.05;    // m
  double ankle_height = 0.08;  // m, used for every non-toe foot joint
};

using BinaryMatrix = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic>;

/// b(i, k) = 1 iff foot joint k is slow and low at frame i. The last frame
/// reuses the displacement of frame L-2.
struct ContactMask {
  BinaryMatrix b;                    // L x |F|
  std::vector<int> joints;           // column -> joint index
  std::vector<double> height_limit;  // column -> H_th used
  double velocity_threshold = 0.0;

  int frames() const noexcept { return static_cast<int>(b.rows()); }
  bool contact(int frame, int column) const { return b(frame, column) != 0; }
};

ContactMask detect_contact(const GlobalPositions& positions, std::span<const int> feet,
                           std::span<const int> toes, const ContactThresholds& thresholds);
ContactMask detect_contact(const GlobalPositions& positions, const Skeleton& skeleton,
                           const ContactThresholds& thresholds);

/// Squared displacement of joint between frame and frame+1 (frame L-1 reuses L-2).
double step_displacement_sq(const GlobalPositions& positions, int frame, int joint);

enum class SkateNormalization { kTotalFrames, kContactFrames };

struct SkatingConfig {
  double slide_threshold = 0.025;  // horizontal meters per frame
  SkateNormalization normalization = SkateNormalization::kTotalFrames;
};

/// Fraction of frames where some foot joint is below its height limit while
/// moving horizontally more than slide_threshold to the next frame.
double foot_skating_ratio(const GlobalPositions& positions, const ContactMask& mask,
                          const SkatingConfig& config = {});

/// Mean third-difference magnitude over frames and joints, times fps^3, in
/// units of 10^3 m/s^3.
double jitter(const GlobalPositions& positions, double fps);

/// Fraction of frames whose lowest joint is below -margin.
double penetration_rate(const GlobalPositions& positions, double margin);

/// Centered moving average (window shrinks at the ends) over the root,
/// velocity and position blocks. Rotations pass through untouched.
MotionSequence smooth_baseline(const MotionSequence& m, int window);

struct MetricConfig {
  ContactThresholds contact;
  SkatingConfig skating;
  double penetration_margin = 0.01;
};

struct SequenceQuality {
  double fsr = 0.0;
  double jitter = 0.0;
  double penetration = 0.0;
};

struct QualityReport {
  std::vector<SequenceQuality> sequences;
  SequenceQuality mean;
};

SequenceQuality evaluate_quality(const MotionSequence& m, const Skeleton& skeleton,
                                 const MetricConfig& config = {});
/// Per-sequence metrics plus their unweighted mean; independent of order of evaluation.
QualityReport evaluate_corpus(std::span<const MotionSequence> corpus, const Skeleton& skeleton,
                              const MetricConfig& config = {}, int jobs = 1);

}  // namespace footfix
