#include "format_cases.hpp"

#include "footfix/config.hpp"
#include "footfix/error.hpp"
#include "footfix/frdm/model.hpp"
#include "footfix/io.hpp"
#include "footfix/random.hpp"
#include "footfix/synth.hpp"

#include <doctest.h>

#include <filesystem>

using namespace footfix;

namespace {

io::MseqFile random_mseq(std::uint32_t frames, std::uint64_t seed) {
  Rng rng(seed);
  io::MseqFile f;
  f.fps = 29.97f;
  f.frames = frames;
  for (std::size_t i = 0; i < std::size_t{frames} * 259; ++i) f.payload.push_back(static_cast<float>(rng.normal()));
  return f;
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "footfix_unit";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("mseq header layout") {
    const io::Bytes b = io::encode_mseq(random_mseq(3, 1));
    REQUIRE(b.size() == 20 + 4 * 3 * 259);
    CHECK(std::string(b.begin(), b.begin() + 4) == "MSEQ");
    CHECK(b[4] == 1);
    CHECK(b[12] == 3);
    CHECK(b[16] == 259 % 256);
    CHECK(b[17] == 1);
  }

  TEST_CASE("mseq round-trip is bit-exact") {
    const io::MseqFile f = random_mseq(17, 2);
    const io::Bytes b = io::encode_mseq(f);
    CHECK(io::decode_mseq(b) == f);
    CHECK(io::encode_mseq(io::decode_mseq(b)) == b);
    const auto path = scratch("roundtrip.mseq");
    io::write_bytes(path, b);
    CHECK(io::read_bytes(path) == b);
    const MotionSequence m = io::read_motion(path);
    io::write_motion(path, m);
    CHECK(io::read_bytes(path) == b);
  }

  TEST_CASE("malformed mseq files report the offending offset") {
    const io::Bytes good = io::encode_mseq(random_mseq(2, 3));
    for (const auto& c : format_cases::mseq_cases(good)) {
      CAPTURE(c.name);
      try {
        io::decode_mseq(c.bytes);
        FAIL("decoder accepted a malformed file");
      } catch (const FormatError& e) {
        CHECK(e.offset() == c.offset);
      }
    }
    CHECK_THROWS_AS(io::read_bytes(scratch("does_not_exist.mseq")), FormatError);
  }

  TEST_CASE("checkpoint round-trip and validation") {
    const Skeleton s = Skeleton::smpl();
    frdm::DenoiserConfig dc;
    dc.width = 6;
    dc.depth = 2;
    dc.steps = 12;
    frdm::FrdmModel model = make_model(frdm::DiffusionSchedule::linear(12, 1e-3, 0.2), dc, s, 99);
    model.train_steps = 5;
    model.normalizer = frdm::FeatureNormalizer::fit(generate_corpus(1, 2, 64));
    const io::Bytes b = io::encode_checkpoint(model);
    const frdm::FrdmModel back = io::decode_checkpoint(b);
    CHECK(io::encode_checkpoint(back) == b);
    CHECK(back.seed == 99);
    CHECK(back.denoiser.parameters() == model.denoiser.parameters());
    CHECK(back.denoiser.conditioning() == model.denoiser.conditioning());

    io::Bytes bad = b;
    bad[0] = 'X';
    CHECK_THROWS_AS(io::decode_checkpoint(bad), FormatError);
    bad = b;
    bad.push_back(1);
    try {
      io::decode_checkpoint(bad);
      FAIL("trailing bytes accepted");
    } catch (const FormatError& e) {
      CHECK(e.offset() == b.size());
    }
    bad = b;
    bad.resize(b.size() - 8);
    CHECK_THROWS_AS(io::decode_checkpoint(bad), FormatError);
  }

  TEST_CASE("skeleton and labels text formats") {
    const Skeleton s = Skeleton::smpl();
    CHECK(io::parse_skeleton(io::format_skeleton(s)) == s);
    CHECK_THROWS_AS(io::parse_skeleton("{\"joints\": [}"), FormatError);
    const std::vector<std::uint8_t> labels = {0, 1, 3, 8};
    CHECK(io::parse_labels(io::format_labels(labels)) == labels);
  }

  TEST_CASE("fnv1a64 reference values") {
    CHECK(io::fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(io::fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  }
}

TEST_SUITE("config") {
  TEST_CASE("defaults carry the published thresholds") {
    const RunConfig c = parse_config("{}");
    CHECK(c.guidance.contact.velocity == 0.001);
    CHECK(c.guidance.contact.toe_height == 0.05);
    CHECK(c.guidance.contact.ankle_height == 0.08);
    CHECK(c.guidance.eps == 0.1);
    CHECK(c.diffusion_steps == 100);
  }

  TEST_CASE("document then environment overrides") {
    const std::map<std::string, std::string> env = {{"FOOTFIX_GUIDANCE_T_TH", "20"}, {"FOOTFIX_SEED", "7"}};
    const RunConfig c = parse_config(R"({"guidance": {"t_th": 30, "eps": 0.2}})", env);
    CHECK(c.guidance.t_threshold == 20);
    CHECK(c.guidance.eps == 0.2);
    CHECK(c.seed == 7);
    CHECK(c.train.seed == 7);
  }

  TEST_CASE("format then parse is stable") {
    RunConfig c = parse_config(R"({"spectral": {"b_bands": 3}, "train": {"steps": 50}})");
    const std::string text = format_config(c);
    CHECK(format_config(parse_config(text)) == text);
    CHECK(config_hash(c) == config_hash(parse_config(text)));
    CHECK(config_hash(c).size() == 16);
    c.b_bands = 4;
    CHECK(config_hash(c) != config_hash(parse_config(text)));
  }

  TEST_CASE("errors name the field") {
    auto field_of = [](const std::string& json, const std::map<std::string, std::string>& env = {}) {
      try {
        parse_config(json, env);
      } catch (const ConfigError& e) {
        return e.field();
      }
      return std::string("<none>");
    };
    CHECK(field_of(R"({"guidance": {"t_th": 500}})") == "guidance.t_th");
    CHECK(field_of(R"({"contact": {"h_th_toe": -1}})") == "contact.h_th_toe");
    CHECK(field_of(R"({"guidance": {"bogus": 1}})") == "guidance.bogus");
    CHECK(field_of(R"({"metrics": {"slide_threshold": "x"}})") == "metrics.slide_threshold");
    CHECK(field_of("{}", {{"FOOTFIX_SPECTRAL_B_BANDS", "0"}}) == "spectral.b_bands");
    CHECK(field_of("{}", {{"FOOTFIX_NOPE_KEY", "1"}}) == "FOOTFIX_NOPE_KEY");
    CHECK_THROWS_AS(parse_config("{not json"), FormatError);
  }
}
