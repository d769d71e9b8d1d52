#pragma once

#include "footfix/motion.hpp"

#include <array>
#include <string>
#include <vector>

namespace footfix {

/// 22-joint kinematic tree in SMPL body order. Offsets are in meters, Y-up.
class Skeleton {
 public:
  static constexpr int kJoints = layout::kJoints;

  /// Validates topology (parent[i] < i, single root at 0) and the joint sets
  /// (toes ⊆ feet ⊆ knee_feet ⊆ 1..21, feet non-empty).
  Skeleton(std::array<int, kJoints> parent, std::array<Vec3, kJoints> rest_offset,
           std::array<std::string, kJoints> names, std::vector<int> feet, std::vector<int> knee_feet,
           std::vector<int> toes);

  /// Default body: SMPL ordering, KF = {4,5,7,8,10,11}, F = {7,8,10,11}, toes = {10,11}.
  static Skeleton smpl();

  int parent(int joint) const { return parent_[static_cast<std::size_t>(joint)]; }
  const Vec3& rest_offset(int joint) const { return rest_offset_[static_cast<std::size_t>(joint)]; }
  const std::string& name(int joint) const { return names_[static_cast<std::size_t>(joint)]; }
  const std::array<int, kJoints>& parents() const { return parent_; }

  const std::vector<int>& feet() const { return feet_; }
  const std::vector<int>& knee_feet() const { return knee_feet_; }
  const std::vector<int>& toes() const { return toes_; }
  bool is_toe(int joint) const;
  bool in_knee_feet(int joint) const;

  /// Index of the named joint, or -1.
  int find(const std::string& name) const;

  bool operator==(const Skeleton&) const = default;

 private:
  std::array<int, kJoints> parent_;
  std::array<Vec3, kJoints> rest_offset_;
  std::array<std::string, kJoints> names_;
  std::vector<int> feet_;
  std::vector<int> knee_feet_;
  std::vector<int> toes_;
};

namespace smpl_joint {
inline constexpr int kPelvis = 0;
inline constexpr int kLeftHip = 1;
inline constexpr int kRightHip = 2;
inline constexpr int kSpine1 = 3;
inline constexpr int kLeftKnee = 4;
inline constexpr int kRightKnee = 5;
inline constexpr int kSpine2 = 6;
inline constexpr int kLeftAnkle = 7;
inline constexpr int kRightAnkle = 8;
inline constexpr int kSpine3 = 9;
inline constexpr int kLeftFoot = 10;
inline constexpr int kRightFoot = 11;
inline constexpr int kNeck = 12;
inline constexpr int kLeftCollar = 13;
inline constexpr int kRightCollar = 14;
inline constexpr int kHead = 15;
inline constexpr int kLeftShoulder = 16;
inline constexpr int kRightShoulder = 17;
inline constexpr int kLeftElbow = 18;
inline constexpr int kRightElbow = 19;
inline constexpr int kLeftWrist = 20;
inline constexpr int kRightWrist = 21;
}  // namespace smpl_joint

}  // namespace footfix
