#include "footfix/synth.hpp"

#include "footfix/error.hpp"
#include "footfix/kinematics.hpp"
#include "footfix/parallel.hpp"
#include "footfix/random.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <numbers>

namespace footfix {

namespace {

using std::numbers::pi;

constexpr double kToeClearance = 0.02;  // planted toe height
constexpr double kLiftHeight = 0.12;
constexpr double kSwingShare = 0.7;     // fraction of a step spent in swing
constexpr double kFootLateral = 0.08;

double smooth01(double x) {
  x = std::clamp(x, 0.0, 1.0);
  return x * x * (3.0 - 2.0 * x);
}

Mat3 rot_x(double a) {
  Mat3 r;
  const double c = std::cos(a), s = std::sin(a);
  r << 1, 0, 0, 0, c, -s, 0, s, c;
  return r;
}

Mat3 rot_z(double a) {
  Mat3 r;
  const double c = std::cos(a), s = std::sin(a);
  r << c, -s, 0, s, c, 0, 0, 0, 1;
  return r;
}

/// Orthonormal frame with `primary` as first column and `secondary`
/// orthogonalized as the second.
Mat3 frame_from(const Vec3& primary, const Vec3& secondary) {
  const Vec3 a = primary.normalized();
  const Vec3 b = (secondary - secondary.dot(a) * a).normalized();
  Mat3 f;
  f.col(0) = a;
  f.col(1) = b;
  f.col(2) = a.cross(b);
  return f;
}

struct Footstep {
  int start = 0;  // first stance frame
  int end = 0;    // one past last stance frame
  Vec3 ankle;     // world ankle position during stance
  double yaw = 0.0;
};

struct LegPose {
  Vec3 ankle;  // world
  double yaw = 0.0;
};

/// Root path sampled on [first, last] so footsteps may be anchored outside the clip.
class RootPath {
 public:
  RootPath(int first, int last, double speed, double turn) : first_(first) {
    const int n = last - first + 1;
    yaw_.resize(static_cast<std::size_t>(n));
    x_.resize(static_cast<std::size_t>(n));
    z_.resize(static_cast<std::size_t>(n));
    const auto origin = static_cast<std::size_t>(-first);
    yaw_[origin] = 0.0;
    x_[origin] = 0.0;
    z_[origin] = 0.0;
    for (std::size_t i = origin + 1; i < yaw_.size(); ++i) {
      const double a = yaw_[i - 1];
      yaw_[i] = a + turn;
      x_[i] = x_[i - 1] + std::sin(a) * speed;
      z_[i] = z_[i - 1] + std::cos(a) * speed;
    }
    for (std::size_t i = origin; i-- > 0;) {
      const double a = turn * (static_cast<double>(i) + first_);
      yaw_[i] = a;
      x_[i] = x_[i + 1] - std::sin(a) * speed;
      z_[i] = z_[i + 1] - std::cos(a) * speed;
    }
  }

  double yaw(int t) const { return yaw_[index(t)]; }
  Vec3 planar(int t) const { return {x_[index(t)], 0.0, z_[index(t)]}; }

 private:
  std::size_t index(int t) const { return static_cast<std::size_t>(t - first_); }
  int first_;
  std::vector<double> yaw_, x_, z_;
};

std::vector<Footstep> plan_footsteps(const RootPath& path, int phase, int period, int swing, int first,
                                     int last, double lateral, double ankle_height) {
  std::vector<Footstep> steps;
  // Swing windows start at phase + 2*period*i.
  for (int s = phase - 4 * period; s <= last + 2 * period; s += 2 * period) {
    Footstep step;
    step.start = s + swing;
    step.end = s + 2 * period;
    const int mid = std::clamp((step.start + step.end) / 2, first, last);
    step.yaw = path.yaw(mid);
    step.ankle = path.planar(mid) + yaw_rotation(step.yaw) * Vec3(lateral, 0.0, 0.0);
    step.ankle.y() = ankle_height;
    steps.push_back(step);
  }
  return steps;
}

LegPose leg_pose(const std::vector<Footstep>& steps, int t, double lift) {
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const Footstep& s = steps[i];
    if (t >= s.start && t < s.end) return {s.ankle, s.yaw};
    if (i + 1 < steps.size() && t >= s.end && t < steps[i + 1].start) {
      const Footstep& n = steps[i + 1];
      const double u = static_cast<double>(t - s.end + 1) / static_cast<double>(n.start - s.end + 1);
      double h = 0.0;
      if (u < 0.25) {
        h = smooth01(u / 0.25);
      } else if (u > 0.75) {
        h = smooth01((1.0 - u) / 0.25);
      } else {
        h = 1.0;
      }
      const double progress = smooth01((u - 0.25) / 0.5);
      LegPose pose;
      pose.ankle = s.ankle + progress * (n.ankle - s.ankle);
      pose.ankle.y() += lift * h;
      pose.yaw = s.yaw + progress * (n.yaw - s.yaw);
      return pose;
    }
  }
  throw GenerationError("frame outside planned footsteps");
}

struct LegChain {
  int hip, knee, ankle, foot;
};

/// Local rotations of hip, knee and ankle placing the ankle at `ankle_local`
/// (root yaw frame) with the foot flat and yawed by `foot_yaw`.
void solve_leg(const Skeleton& skeleton, const LegChain& leg, const Vec3& ankle_local, double foot_yaw,
               std::array<Mat3, layout::kJoints>& local) {
  const Vec3 hip = skeleton.rest_offset(leg.hip);
  const Vec3 thigh_rest = skeleton.rest_offset(leg.knee);
  const Vec3 shank_rest = skeleton.rest_offset(leg.ankle);
  const double l1 = thigh_rest.norm();
  const double l2 = shank_rest.norm();

  const Vec3 to_ankle = ankle_local - hip;
  const double d = to_ankle.norm();
  if (d > 0.999 * (l1 + l2) || d < std::abs(l1 - l2) + 1e-6) {
    throw GenerationError("footstep outside leg reach (distance " + std::to_string(d) + " m)");
  }
  const Vec3 u = to_ankle / d;
  const Vec3 forward = yaw_rotation(foot_yaw) * Vec3::UnitZ();
  const Vec3 perp = (forward - forward.dot(u) * u).normalized();
  const double cos_a = (l1 * l1 + d * d - l2 * l2) / (2.0 * l1 * d);
  const double sin_a = std::sqrt(std::max(0.0, 1.0 - cos_a * cos_a));
  const Vec3 knee = hip + l1 * (cos_a * u + sin_a * perp);

  const Mat3 thigh = frame_from(knee - hip, perp) * frame_from(thigh_rest, Vec3::UnitZ()).transpose();
  const Mat3 shank = frame_from(ankle_local - knee, perp) * frame_from(shank_rest, Vec3::UnitZ()).transpose();
  const Mat3 foot = yaw_rotation(foot_yaw);

  local[static_cast<std::size_t>(leg.hip)] = thigh;
  local[static_cast<std::size_t>(leg.knee)] = thigh.transpose() * shank;
  local[static_cast<std::size_t>(leg.ankle)] = shank.transpose() * foot;
  local[static_cast<std::size_t>(leg.foot)] = Mat3::Identity();
}

}  // namespace

void validate(const GaitSpec& spec) {
  if (spec.step_period < 4) throw ConfigError("step_period", "must be at least 4 frames");
  if (!(spec.hip_height > 0.0)) throw ConfigError("hip_height", "must be positive");
  if (spec.duration < 2 * spec.step_period) throw ConfigError("duration", "must cover at least one gait cycle");
  if (!(spec.step_length >= 0.0)) throw ConfigError("step_length", "must be non-negative");
  if (!(spec.fps > 0.0)) throw ConfigError("fps", "must be positive");
  if (!std::isfinite(spec.turning_rate) || !std::isfinite(spec.arm_swing)) {
    throw ConfigError("turning_rate", "must be finite");
  }
}

MotionSequence generate_clean(const GaitSpec& spec, const Skeleton& skeleton) {
  validate(spec);
  namespace sj = smpl_joint;
  Rng rng(spec.seed);
  const int n = spec.duration;
  const int period = spec.step_period;
  const int swing = std::max(3, static_cast<int>(std::lround(kSwingShare * period)));
  const int phase = static_cast<int>(rng.below(static_cast<std::uint64_t>(2 * period)));
  const double speed = spec.step_length / period;
  const double spine_twist = rng.uniform(0.02, 0.08);
  const double nod = rng.uniform(0.0, 0.05);
  const double elbow_bend = rng.uniform(0.2, 0.5);
  const double bob = spec.step_length > 0.0 ? 0.012 : 0.004;

  const int first = -6 * period;
  const int last = n + 6 * period;
  const RootPath path(first, last, speed, spec.turning_rate);

  const double toe_drop = -skeleton.rest_offset(sj::kLeftFoot).y();
  const double ankle_height = kToeClearance + toe_drop;
  const LegChain left{sj::kLeftHip, sj::kLeftKnee, sj::kLeftAnkle, sj::kLeftFoot};
  const LegChain right{sj::kRightHip, sj::kRightKnee, sj::kRightAnkle, sj::kRightFoot};
  const auto left_steps = plan_footsteps(path, phase, period, swing, 0, n - 1, kFootLateral, ankle_height);
  const auto right_steps =
      plan_footsteps(path, phase + period, period, swing, 0, n - 1, -kFootLateral, ankle_height);

  std::vector<RootState> root(static_cast<std::size_t>(n));
  Matrix rotations(n, layout::kRotDims);
  std::array<Mat3, layout::kJoints> local;
  local.fill(Mat3::Identity());

  for (int t = 0; t < n; ++t) {
    const double step_phase = 2.0 * pi * static_cast<double>(t - phase) / period;
    const double cycle_phase = 0.5 * step_phase;
    const double height = spec.hip_height - bob * 0.5 * (1.0 + std::cos(step_phase));
    root[static_cast<std::size_t>(t)] = {spec.turning_rate, 0.0, speed, height};

    const double yaw = path.yaw(t);
    const Mat3 to_local = yaw_rotation(yaw).transpose();
    const Vec3 root_world = path.planar(t) + Vec3(0.0, height, 0.0);
    for (const auto& [leg, steps] : {std::pair{left, &left_steps}, std::pair{right, &right_steps}}) {
      const LegPose pose = leg_pose(*steps, t, kLiftHeight);
      solve_leg(skeleton, leg, to_local * (pose.ankle - root_world), pose.yaw - yaw, local);
    }

    const double swing_angle = spec.arm_swing * std::sin(cycle_phase);
    local[sj::kSpine1] = yaw_rotation(spine_twist * std::sin(cycle_phase));
    local[sj::kSpine2] = yaw_rotation(0.5 * spine_twist * std::sin(cycle_phase));
    local[sj::kSpine3] = Mat3::Identity();
    local[sj::kNeck] = rot_x(nod * std::sin(step_phase));
    local[sj::kHead] = yaw_rotation(-spine_twist * std::sin(cycle_phase));
    local[sj::kLeftShoulder] = rot_x(swing_angle) * rot_z(-1.3);
    local[sj::kRightShoulder] = rot_x(-swing_angle) * rot_z(1.3);
    local[sj::kLeftElbow] = yaw_rotation(elbow_bend);
    local[sj::kRightElbow] = yaw_rotation(-elbow_bend);

    for (int j = 1; j < layout::kJoints; ++j) {
      rotations.block<1, 6>(t, 6 * (j - 1)) = matrix_to_rot6d(local[static_cast<std::size_t>(j)]).transpose();
    }
  }
  return build_motion(root, rotations, skeleton, spec.fps);
}

GaitSpec random_gait(std::uint64_t corpus_seed, std::size_t index, int duration, double fps) {
  Rng rng(derive_seed(corpus_seed, index));
  GaitSpec spec;
  spec.duration = duration;
  spec.fps = fps;
  spec.step_period = 12 + static_cast<int>(rng.below(11));
  spec.step_length = rng.uniform() < 0.15 ? 0.0 : rng.uniform(0.1, 0.28);
  spec.hip_height = rng.uniform(0.86, 0.90);
  spec.arm_swing = rng.uniform(0.15, 0.5);
  spec.turning_rate = rng.uniform(-0.008, 0.008);
  spec.seed = rng.next();
  return spec;
}

std::vector<MotionSequence> generate_corpus(std::uint64_t corpus_seed, std::size_t count, int duration,
                                            double fps, int jobs) {
  std::vector<std::optional<MotionSequence>> slots(count);
  parallel_for(count, jobs, [&](std::size_t i) {
    slots[i].emplace(generate_clean(random_gait(corpus_seed, i, duration, fps)));
  });
  std::vector<MotionSequence> corpus;
  corpus.reserve(count);
  for (auto& s : slots) corpus.push_back(std::move(*s));
  return corpus;
}

// ---------------------------------------------------------------------------
// Corruption

void validate(const ArtifactSpec& spec) {
  auto fraction = [](double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0)) throw ConfigError(name, "must lie in [0, 1]");
  };
  fraction(spec.skate_fraction, "skate_fraction");
  fraction(spec.float_fraction, "float_fraction");
  fraction(spec.penetrate_fraction, "penetrate_fraction");
  if (!(spec.skate_drift >= 0.0)) throw ConfigError("skate_drift", "must be non-negative");
  if (!(spec.jitter_sigma >= 0.0)) throw ConfigError("jitter_sigma", "must be non-negative");
  if (!(spec.penetrate_depth >= 0.0)) throw ConfigError("penetrate_depth", "must be non-negative");
  if (!std::isfinite(spec.float_offset)) throw ConfigError("float_offset", "must be finite");
  for (int j : spec.jitter_joints) {
    if (j < 1 || j >= layout::kJoints) throw ConfigError("jitter_joints", "joint index outside 1..21");
  }
}

namespace {

/// Foot joints grouped per leg by their child-of-root ancestor.
std::vector<std::vector<int>> legs_of(const Skeleton& skeleton) {
  std::vector<std::pair<int, std::vector<int>>> groups;
  for (std::size_t k = 0; k < skeleton.feet().size(); ++k) {
    int a = skeleton.feet()[k];
    while (skeleton.parent(a) != 0) a = skeleton.parent(a);
    auto it = std::find_if(groups.begin(), groups.end(), [a](const auto& g) { return g.first == a; });
    if (it == groups.end()) {
      groups.push_back({a, {static_cast<int>(k)}});
    } else {
      it->second.push_back(static_cast<int>(k));
    }
  }
  std::vector<std::vector<int>> out;
  for (auto& g : groups) out.push_back(std::move(g.second));
  return out;
}

struct Run {
  int leg;
  int first;  // inclusive
  int last;   // inclusive
};

/// Adds a contiguous run of the given length, flagged in `labels`, and returns
/// its start. Runs are placed at random non-overlapping offsets where possible.
void place_runs(Rng& rng, int frames, int total, std::vector<std::uint8_t>& labels, std::uint8_t flag,
                std::vector<std::pair<int, int>>& runs) {
  int remaining = std::min(total, frames);
  int attempts = 0;
  while (remaining > 0 && attempts++ < 1000) {
    const int len = std::min(remaining, 4 + static_cast<int>(rng.below(8)));
    const int start = static_cast<int>(rng.below(static_cast<std::uint64_t>(frames - len + 1)));
    bool free = true;
    for (int t = start; t < start + len; ++t) free = free && !(labels[static_cast<std::size_t>(t)] & flag);
    if (!free) continue;
    for (int t = start; t < start + len; ++t) labels[static_cast<std::size_t>(t)] |= flag;
    runs.emplace_back(start, start + len);
    remaining -= len;
  }
}

}  // namespace

CorruptionResult corrupt(const MotionSequence& m, const ArtifactSpec& spec, const Skeleton& skeleton) {
  validate(spec);
  const int n = m.length();
  if (spec.empty()) {
    return {m, std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0), Matrix::Zero(n, layout::kFeatureDim),
            true};
  }
  Rng rng(spec.seed);
  FeatureParts parts = split_features(m);
  std::vector<std::uint8_t> labels(static_cast<std::size_t>(n), 0);

  if (spec.skate_fraction > 0.0 && spec.skate_drift > 0.0) {
    const GlobalPositions clean = global_positions(m);
    const ContactMask mask = detect_contact(clean, skeleton, ContactThresholds{});
    const RootTrajectory traj = integrate_root(parts.root);
    const auto legs = legs_of(skeleton);

    // Stance runs: every foot joint of the leg in contact.
    std::vector<Run> stances;
    for (std::size_t l = 0; l < legs.size(); ++l) {
      int start = -1;
      for (int t = 0; t <= n; ++t) {
        bool all = t < n;
        for (int k : legs[l]) all = all && mask.contact(t, k);
        if (all && start < 0) start = t;
        if (!all && start >= 0) {
          stances.push_back({static_cast<int>(l), start, t - 1});
          start = -1;
        }
      }
    }
    for (std::size_t i = stances.size(); i > 1; --i) {
      std::swap(stances[i - 1], stances[rng.below(i)]);
    }

    const double clear_height = 0.1;
    auto leg_low = [&](int leg, int t) {
      for (int k : legs[static_cast<std::size_t>(leg)]) {
        if (clean.height(t, mask.joints[static_cast<std::size_t>(k)]) < clear_height) return true;
      }
      return false;
    };

    int need = static_cast<int>(std::lround(spec.skate_fraction * n));
    std::vector<Matrix> offsets(legs.size(), Matrix::Zero(n, 3));  // world-frame offsets per leg
    for (const Run& stance : stances) {
      if (need <= 0) break;
      // Skating frame i moves the foot between i and i+1, so i+1 must stay in stance.
      int a = stance.first;
      const int b = stance.last - 1;
      while (a <= b && (labels[static_cast<std::size_t>(a)] & artifact::kSkate)) ++a;
      if (a > b) continue;
      int e = a;
      while (e + 1 <= b && !(labels[static_cast<std::size_t>(e + 1)] & artifact::kSkate) && e - a + 1 < need &&
             e - a + 1 < 12) {
        ++e;
      }
      const double heading = rng.uniform(0.0, 2.0 * std::numbers::pi);
      const Vec3 dir(std::cos(heading), 0.0, std::sin(heading));
      Matrix& off = offsets[static_cast<std::size_t>(stance.leg)];
      for (int t = a; t <= e; ++t) labels[static_cast<std::size_t>(t)] |= artifact::kSkate;
      need -= e - a + 1;

      // Ramp during the skate, hold for the rest of the stance and the low
      // part of the lift, then fade out while the foot is clear of the ground.
      const Vec3 hold = spec.skate_drift * static_cast<double>(e - a + 1) * dir;
      for (int t = a + 1; t <= e + 1; ++t) off.row(t) += (spec.skate_drift * (t - a) * dir).transpose();
      int t = e + 2;
      while (t < n && leg_low(stance.leg, t)) off.row(t++) += hold.transpose();
      int fade_end = t;
      while (fade_end < n && !leg_low(stance.leg, fade_end)) ++fade_end;
      if (fade_end >= n) {
        for (; t < n; ++t) off.row(t) += hold.transpose();
      } else {
        const int span = fade_end - t + 1;
        for (int k = 1; t < fade_end; ++t, ++k) {
          off.row(t) += (hold * (1.0 - static_cast<double>(k) / span)).transpose();
        }
      }
    }
    for (std::size_t l = 0; l < legs.size(); ++l) {
      for (int t = 0; t < n; ++t) {
        const Vec3 local = yaw_rotation(traj.yaw(t)).transpose() * offsets[l].row(t).transpose();
        for (int k : legs[l]) {
          const int joint = mask.joints[static_cast<std::size_t>(k)];
          parts.positions.block<1, 3>(t, 3 * (joint - 1)) += local.transpose();
        }
      }
    }
  }

  if (spec.jitter_sigma > 0.0) {
    const std::vector<int>& joints = spec.jitter_joints.empty() ? skeleton.knee_feet() : spec.jitter_joints;
    for (int t = 0; t < n; ++t) {
      labels[static_cast<std::size_t>(t)] |= artifact::kJitter;
      for (int j : joints) {
        for (int c = 0; c < 3; ++c) parts.positions(t, 3 * (j - 1) + c) += spec.jitter_sigma * rng.normal();
      }
    }
  }

  if (spec.float_offset != 0.0 && spec.float_fraction > 0.0) {
    const int len = std::max(1, static_cast<int>(std::lround(spec.float_fraction * n)));
    const int start = static_cast<int>(rng.below(static_cast<std::uint64_t>(n - len + 1)));
    for (int t = start; t < start + len; ++t) {
      parts.root[static_cast<std::size_t>(t)].height += spec.float_offset;
      labels[static_cast<std::size_t>(t)] |= artifact::kFloat;
    }
  }

  if (spec.penetrate_depth > 0.0 && spec.penetrate_fraction > 0.0) {
    std::vector<std::pair<int, int>> runs;
    place_runs(rng, n, static_cast<int>(std::lround(spec.penetrate_fraction * n)), labels, artifact::kPenetrate,
               runs);
    for (const auto& [a, b] : runs) {
      for (int t = a; t < b; ++t) parts.root[static_cast<std::size_t>(t)].height -= spec.penetrate_depth;
    }
  }

  parts.velocities = velocity_features(parts.root, parts.positions);
  MotionSequence out = join_features(parts, m.fps());
  Matrix delta = out.frames() - m.frames();
  return {std::move(out), std::move(labels), std::move(delta), false};
}

}  // namespace footfix
