#include "footfix/skeleton.hpp"

#include "footfix/error.hpp"

#include <algorithm>

namespace footfix {

namespace {

bool contains(const std::vector<int>& set, int value) {
  return std::find(set.begin(), set.end(), value) != set.end();
}

void check_joint_set(const std::vector<int>& set, const char* what) {
  for (int j : set) {
    if (j < 1 || j >= Skeleton::kJoints) {
      throw ValidationError(std::string(what) + " contains joint outside 1..21: " + std::to_string(j));
    }
  }
  auto sorted = set;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ValidationError(std::string(what) + " contains duplicates");
  }
}

}  // namespace

Skeleton::Skeleton(std::array<int, kJoints> parent, std::array<Vec3, kJoints> rest_offset,
                   std::array<std::string, kJoints> names, std::vector<int> feet,
                   std::vector<int> knee_feet, std::vector<int> toes)
    : parent_(parent),
      rest_offset_(rest_offset),
      names_(std::move(names)),
      feet_(std::move(feet)),
      knee_feet_(std::move(knee_feet)),
      toes_(std::move(toes)) {
  if (parent_[0] != -1) throw ValidationError("joint 0 must be the root (parent -1)");
  for (int i = 1; i < kJoints; ++i) {
    const int p = parent_[static_cast<std::size_t>(i)];
    if (p < 0 || p >= i) {
      throw ValidationError("parent of joint " + std::to_string(i) + " must lie in [0, " +
                            std::to_string(i) + ")");
    }
  }
  for (const auto& offset : rest_offset_) {
    if (!offset.allFinite()) throw ValidationError("rest offsets must be finite");
  }
  if (feet_.empty()) throw ConfigError("feet", "foot joint set is empty");
  check_joint_set(feet_, "feet");
  check_joint_set(knee_feet_, "knee_feet");
  check_joint_set(toes_, "toes");
  for (int j : feet_) {
    if (!contains(knee_feet_, j)) throw ValidationError("feet must be a subset of knee_feet");
  }
  for (int j : toes_) {
    if (!contains(feet_, j)) throw ValidationError("toes must be a subset of feet");
  }
}

Skeleton Skeleton::smpl() {
  std::array<int, kJoints> parent = {-1, 0, 0, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 9, 9, 12, 13, 14, 16, 17, 18, 19};
  std::array<Vec3, kJoints> offset = {
      Vec3(0.0, 0.0, 0.0),       // pelvis
      Vec3(0.06, -0.09, 0.0),    // left_hip
      Vec3(-0.06, -0.09, 0.0),   // right_hip
      Vec3(0.0, 0.11, -0.02),    // spine1
      Vec3(0.0, -0.38, 0.0),     // left_knee
      Vec3(0.0, -0.38, 0.0),     // right_knee
      Vec3(0.0, 0.13, 0.01),     // spine2
      Vec3(0.0, -0.42, 0.0),     // left_ankle
      Vec3(0.0, -0.42, 0.0),     // right_ankle
      Vec3(0.0, 0.06, 0.01),     // spine3
      Vec3(0.0, -0.05, 0.12),    // left_foot
      Vec3(0.0, -0.05, 0.12),    // right_foot
      Vec3(0.0, 0.21, -0.03),    // neck
      Vec3(0.07, 0.12, -0.02),   // left_collar
      Vec3(-0.07, 0.12, -0.02),  // right_collar
      Vec3(0.0, 0.09, 0.05),     // head
      Vec3(0.12, 0.04, -0.02),   // left_shoulder
      Vec3(-0.12, 0.04, -0.02),  // right_shoulder
      Vec3(0.26, 0.0, 0.0),      // left_elbow
      Vec3(-0.26, 0.0, 0.0),     // right_elbow
      Vec3(0.25, 0.0, 0.0),      // left_wrist
      Vec3(-0.25, 0.0, 0.0),     // right_wrist
  };
  std::array<std::string, kJoints> names = {
      "pelvis",     "left_hip",      "right_hip",      "spine1",     "left_knee",   "right_knee",
      "spine2",     "left_ankle",    "right_ankle",    "spine3",     "left_foot",   "right_foot",
      "neck",       "left_collar",   "right_collar",   "head",       "left_shoulder", "right_shoulder",
      "left_elbow", "right_elbow",   "left_wrist",     "right_wrist"};
  return Skeleton(parent, offset, names, {7, 8, 10, 11}, {4, 5, 7, 8, 10, 11}, {10, 11});
}

bool Skeleton::is_toe(int joint) const { return contains(toes_, joint); }

bool Skeleton::in_knee_feet(int joint) const { return contains(knee_feet_, joint); }

int Skeleton::find(const std::string& name) const {
  for (int i = 0; i < kJoints; ++i) {
    if (names_[static_cast<std::size_t>(i)] == name) return i;
  }
  return -1;
}

}  // namespace footfix
