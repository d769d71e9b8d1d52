#include "footfix/contact.hpp"
#include "footfix/error.hpp"
#include "footfix/synth.hpp"

#include <doctest.h>

#include <algorithm>

using namespace footfix;

TEST_SUITE("synth") {
  TEST_CASE("clean gait is kinematically consistent") {
    const Skeleton s = Skeleton::smpl();
    const MotionSequence m = generate_clean(GaitSpec{.duration = 90, .seed = 4}, s);
    const FeatureParts p = split_features(m);
    CHECK((forward_kinematics(p.rotations, s) - p.positions).cwiseAbs().maxCoeff() < 1e-9);
    CHECK((velocity_features(p.root, p.positions) - p.velocities).cwiseAbs().maxCoeff() < 1e-9);
  }

  TEST_CASE("generation is deterministic in the seed") {
    CHECK(generate_corpus(9, 3, 48) == generate_corpus(9, 3, 48, 30.0, 2));
    CHECK(!(generate_clean(random_gait(1, 0, 48)) == generate_clean(random_gait(2, 0, 48))));
  }

  TEST_CASE("invalid gait specs are rejected") {
    CHECK_THROWS_AS(validate(GaitSpec{.step_period = 0}), ValidationError);
    CHECK_THROWS_AS(validate(GaitSpec{.hip_height = -1.0}), ValidationError);
    CHECK_THROWS_AS(validate(GaitSpec{.duration = 1}), ValidationError);
  }

  TEST_CASE("empty artifact spec is the identity") {
    const MotionSequence m = generate_clean(GaitSpec{.duration = 60});
    const CorruptionResult r = corrupt(m, ArtifactSpec{});
    CHECK(r.identity);
    CHECK(r.motion == m);
    CHECK(std::all_of(r.labels.begin(), r.labels.end(), [](auto v) { return v == 0; }));
  }

  TEST_CASE("corruption delta and labels are set") {
    const MotionSequence m = generate_clean(GaitSpec{.seed = 2});
    ArtifactSpec a;
    a.skate_fraction = 0.2;
    a.jitter_sigma = 0.005;
    a.seed = 7;
    const CorruptionResult r = corrupt(m, a);
    CHECK(r.delta == r.motion.frames() - m.frames());
    const auto skating = std::count_if(r.labels.begin(), r.labels.end(),
                                       [](auto v) { return (v & artifact::kSkate) != 0; });
    CHECK(skating == doctest::Approx(0.2 * m.length()).epsilon(0.1));
    CHECK(corrupt(m, a).motion == r.motion);
  }

  TEST_CASE("upper body is untouched by skating and knee/foot jitter") {
    const Skeleton s = Skeleton::smpl();
    const MotionSequence m = generate_clean(GaitSpec{.seed = 5});
    ArtifactSpec a;
    a.skate_fraction = 0.2;
    a.jitter_sigma = 0.01;
    const CorruptionResult r = corrupt(m, a, s);
    for (int j = 1; j < 22; ++j) {
      if (s.in_knee_feet(j)) continue;
      CHECK(r.delta.middleCols(layout::pos_col(j), 3).isZero());
      CHECK(r.delta.middleCols(layout::rot_col(j), 6).isZero());
    }
  }

  TEST_CASE("planted penetration is measured") {
    const MotionSequence m = generate_clean(GaitSpec{});
    ArtifactSpec a;
    a.penetrate_depth = 0.1;
    a.penetrate_fraction = 0.25;
    const CorruptionResult r = corrupt(m, a);
    const double rate = evaluate_quality(r.motion, Skeleton::smpl()).penetration;
    CHECK(rate > 0.15);
    CHECK(rate <= 0.26);
  }

  TEST_CASE("artifact validation") {
    ArtifactSpec a;
    a.skate_fraction = 1.5;
    CHECK_THROWS_AS(validate(a), ValidationError);
    a = ArtifactSpec{};
    a.jitter_sigma = -1.0;
    CHECK_THROWS_AS(validate(a), ValidationError);
  }
}
