#pragma once

// Closed-form inputs shared with tests/oracle/make_frozen.py. Any change here
// must be mirrored there and the frozen header regenerated.

#include "footfix/kinematics.hpp"
#include "footfix/motion.hpp"

#include <cmath>
#include <vector>

namespace fixtures {

using namespace footfix;

inline Vec6 rot6(int t, int j) {
  Vec6 r;
  r << 1.0 + 0.3 * std::sin(0.5 * j + 0.2 * t), 0.4 * std::cos(0.3 * j - 0.1 * t), 0.25 * std::sin(0.9 * j + 0.05 * t),
      0.3 * std::cos(0.7 * j + 0.15 * t), 1.0 + 0.2 * std::sin(0.4 * j), 0.35 * std::cos(1.1 * j - 0.3 * t);
  return r;
}

inline Matrix rotations(int frames) {
  Matrix m(frames, layout::kRotDims);
  for (int t = 0; t < frames; ++t) {
    for (int j = 1; j < layout::kJoints; ++j) m.block<1, 6>(t, 6 * (j - 1)) = rot6(t, j).transpose();
  }
  return m;
}

inline std::vector<RootState> root(int frames) {
  std::vector<RootState> r;
  for (int t = 0; t < frames; ++t) {
    r.push_back({0.05 * std::sin(0.3 * t), 0.01 * std::cos(0.2 * t), 0.03 + 0.005 * std::sin(0.5 * t),
                 0.9 + 0.02 * std::sin(0.4 * t)});
  }
  return r;
}

/// Signal for the spectral fixtures: N x C.
inline Matrix signal(int n, int channels) {
  Matrix x(n, channels);
  for (int t = 0; t < n; ++t) {
    for (int c = 0; c < channels; ++c) {
      x(t, c) = std::sin(0.9 * t + c) + 0.3 * std::cos(2.1 * t * (c + 1)) + 0.1 * c;
    }
  }
  return x;
}

/// Velocity/position pair for the L_vp fixture: L x 66 and L x 63.
inline Matrix vp_velocity(int frames) {
  Matrix v(frames, layout::kVelDims);
  for (int t = 0; t < frames; ++t) {
    for (int c = 0; c < layout::kVelDims; ++c) v(t, c) = 0.01 * std::sin(0.37 * c + 0.5 * t);
  }
  return v;
}

inline Matrix vp_position(int frames) {
  Matrix p(frames, layout::kPosDims);
  for (int t = 0; t < frames; ++t) {
    for (int c = 0; c < layout::kPosDims; ++c) p(t, c) = 0.02 * std::cos(0.21 * c - 0.3 * t);
  }
  return p;
}

}  // namespace fixtures
