#include "footfix/io.hpp"

#include "footfix/error.hpp"

#include <json.hpp>

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <optional>

namespace footfix::io {

namespace {

using nlohmann::json;

class Writer {
 public:
  void raw(std::string_view s) { bytes_.insert(bytes_.end(), s.begin(), s.end()); }
  void u8(std::uint8_t v) { bytes_.push_back(v); }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) bytes_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) bytes_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void f32(float v) { u32(std::bit_cast<std::uint32_t>(v)); }
  void f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }
  Bytes take() { return std::move(bytes_); }

 private:
  Bytes bytes_;
};

class Reader {
 public:
  explicit Reader(const Bytes& bytes) : bytes_(bytes) {}

  std::size_t offset() const { return pos_; }
  std::size_t remaining() const { return bytes_.size() - pos_; }

  void need(std::size_t n, const char* what) const {
    if (remaining() < n) throw FormatError(std::string("truncated ") + what, pos_);
  }
  bool tag(std::string_view expected) {
    need(expected.size(), "magic");
    const bool ok = std::memcmp(bytes_.data() + pos_, expected.data(), expected.size()) == 0;
    pos_ += expected.size();
    return ok;
  }
  std::uint8_t u8(const char* what) {
    need(1, what);
    return bytes_[pos_++];
  }
  std::uint32_t u32(const char* what) {
    need(4, what);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(bytes_[pos_ + i]) << (8 * i);
    pos_ += 4;
    return v;
  }
  std::uint64_t u64(const char* what) {
    need(8, what);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(bytes_[pos_ + i]) << (8 * i);
    pos_ += 8;
    return v;
  }
  float f32(const char* what) { return std::bit_cast<float>(u32(what)); }
  double f64(const char* what) { return std::bit_cast<double>(u64(what)); }

 private:
  const Bytes& bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

MseqFile decode_mseq(const Bytes& bytes) {
  Reader r(bytes);
  if (!r.tag("MSEQ")) throw FormatError("bad magic, expected MSEQ", 0);
  const std::size_t version_at = r.offset();
  if (r.u32("version") != kMseqVersion) throw FormatError("unsupported version", version_at);
  const std::size_t fps_at = r.offset();
  MseqFile f;
  f.fps = r.f32("fps");
  if (!(std::isfinite(f.fps) && f.fps > 0.0f)) throw FormatError("fps must be positive and finite", fps_at);
  const std::size_t frames_at = r.offset();
  f.frames = r.u32("frame count");
  if (f.frames < 2) throw FormatError("frame count must be at least 2", frames_at);
  const std::size_t dim_at = r.offset();
  if (r.u32("feature dim") != static_cast<std::uint32_t>(layout::kFeatureDim)) {
    throw FormatError("feature dim must be 259", dim_at);
  }
  const std::size_t count = static_cast<std::size_t>(f.frames) * layout::kFeatureDim;
  if (r.remaining() < 4 * count) throw FormatError("payload shorter than header declares", bytes.size());
  if (r.remaining() > 4 * count) throw FormatError("trailing bytes after payload", r.offset() + 4 * count);
  f.payload.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t at = r.offset();
    f.payload[i] = r.f32("payload");
    if (!std::isfinite(f.payload[i])) throw FormatError("non-finite payload value", at);
  }
  return f;
}

Bytes encode_mseq(const MseqFile& file) {
  if (file.payload.size() != static_cast<std::size_t>(file.frames) * layout::kFeatureDim) {
    throw ShapeError("payload size does not match frame count");
  }
  Writer w;
  w.raw("MSEQ");
  w.u32(kMseqVersion);
  w.f32(file.fps);
  w.u32(file.frames);
  w.u32(static_cast<std::uint32_t>(layout::kFeatureDim));
  for (float v : file.payload) w.f32(v);
  return w.take();
}

MseqFile to_mseq(const MotionSequence& m) {
  MseqFile f;
  f.fps = static_cast<float>(m.fps());
  f.frames = static_cast<std::uint32_t>(m.length());
  f.payload.reserve(static_cast<std::size_t>(m.length()) * layout::kFeatureDim);
  for (int t = 0; t < m.length(); ++t) {
    for (int c = 0; c < layout::kFeatureDim; ++c) f.payload.push_back(static_cast<float>(m.frames()(t, c)));
  }
  return f;
}

MotionSequence from_mseq(const MseqFile& f) {
  Matrix frames(f.frames, layout::kFeatureDim);
  for (std::uint32_t t = 0; t < f.frames; ++t) {
    for (int c = 0; c < layout::kFeatureDim; ++c) {
      frames(t, c) = f.payload[static_cast<std::size_t>(t) * layout::kFeatureDim + static_cast<std::size_t>(c)];
    }
  }
  return MotionSequence(std::move(frames), f.fps);
}

MotionSequence read_motion(const std::filesystem::path& path) { return from_mseq(decode_mseq(read_bytes(path))); }

void write_motion(const std::filesystem::path& path, const MotionSequence& m) {
  write_bytes(path, encode_mseq(to_mseq(m)));
}

Bytes encode_checkpoint(const frdm::FrdmModel& model) {
  Writer w;
  w.raw("FFCK");
  w.u32(kCheckpointVersion);
  w.u64(model.seed);
  w.u64(model.train_steps);
  w.u32(static_cast<std::uint32_t>(model.schedule.steps()));
  w.f64(model.schedule.beta_start());
  w.f64(model.schedule.beta_end());
  const auto& c = model.denoiser.config();
  for (int v : {c.feature_dim, c.width, c.depth, c.kernel, c.time_dim, c.steps}) w.u32(static_cast<std::uint32_t>(v));
  w.u8(c.learned_skip ? 1 : 0);
  const auto& mask = model.denoiser.conditioning();
  w.u32(static_cast<std::uint32_t>(mask.size()));
  for (auto b : mask) w.u8(b);
  const auto& n = model.normalizer;
  w.u32(static_cast<std::uint32_t>(n.mean.size()));
  for (const RowVector* v : {&n.mean, &n.std, &n.first_mean, &n.first_std}) {
    if (v->size() != n.mean.size()) throw ShapeError("normalizer vectors differ in length");
    for (Eigen::Index i = 0; i < v->size(); ++i) w.f64((*v)(i));
  }
  const Vector& p = model.denoiser.parameters();
  w.u64(static_cast<std::uint64_t>(p.size()));
  for (Eigen::Index i = 0; i < p.size(); ++i) w.f64(p(i));
  return w.take();
}

frdm::FrdmModel decode_checkpoint(const Bytes& bytes) {
  Reader r(bytes);
  if (!r.tag("FFCK")) throw FormatError("bad magic, expected FFCK", 0);
  const std::size_t version_at = r.offset();
  if (r.u32("version") != kCheckpointVersion) throw FormatError("unsupported checkpoint version", version_at);
  const std::uint64_t seed = r.u64("seed");
  const std::uint64_t train_steps = r.u64("train steps");

  const std::size_t schedule_at = r.offset();
  const auto steps = r.u32("diffusion steps");
  const double beta_start = r.f64("beta start");
  const double beta_end = r.f64("beta end");
  frdm::DiffusionSchedule schedule;
  try {
    schedule = frdm::DiffusionSchedule::linear(static_cast<int>(steps), beta_start, beta_end);
  } catch (const ValidationError& e) {
    throw FormatError(std::string("invalid schedule: ") + e.what(), schedule_at);
  }

  const std::size_t config_at = r.offset();
  frdm::DenoiserConfig config;
  for (int* v : {&config.feature_dim, &config.width, &config.depth, &config.kernel, &config.time_dim, &config.steps}) {
    const auto raw = r.u32("denoiser config");
    if (raw > 1u << 20) throw FormatError("denoiser dimension out of range", r.offset() - 4);
    *v = static_cast<int>(raw);
  }
  const auto skip_at = r.offset();
  const auto skip = r.u8("learned skip flag");
  if (skip > 1) throw FormatError("learned skip flag must be 0 or 1", skip_at);
  config.learned_skip = skip == 1;
  std::optional<frdm::Denoiser> denoiser;
  try {
    denoiser.emplace(config);
  } catch (const ValidationError& e) {
    throw FormatError(std::string("invalid denoiser config: ") + e.what(), config_at);
  }

  const std::size_t mask_at = r.offset();
  const auto mask_len = r.u32("conditioning size");
  if (mask_len != 0 && mask_len != static_cast<std::uint32_t>(config.feature_dim)) {
    throw FormatError("conditioning mask width mismatch", mask_at);
  }
  std::vector<std::uint8_t> mask(mask_len);
  for (auto& b : mask) {
    const auto at = r.offset();
    b = r.u8("conditioning mask");
    if (b > 1) throw FormatError("conditioning flags must be 0 or 1", at);
  }
  denoiser->set_conditioning(std::move(mask));

  const std::size_t dim_at = r.offset();
  const auto dim = r.u32("normalizer width");
  if (dim != static_cast<std::uint32_t>(config.feature_dim)) throw FormatError("normalizer width mismatch", dim_at);
  frdm::FeatureNormalizer normalizer;
  for (RowVector* v : {&normalizer.mean, &normalizer.std, &normalizer.first_mean, &normalizer.first_std}) {
    v->resize(dim);
    for (std::uint32_t i = 0; i < dim; ++i) (*v)(i) = r.f64("normalizer");
  }

  const std::size_t count_at = r.offset();
  const auto count = r.u64("parameter count");
  if (count != denoiser->parameter_count()) throw FormatError("parameter count does not match config", count_at);
  r.need(8 * count, "parameters");
  Vector& p = denoiser->parameters();
  for (Eigen::Index i = 0; i < p.size(); ++i) p(i) = r.f64("parameters");
  if (r.remaining() != 0) throw FormatError("trailing bytes after parameters", r.offset());
  return frdm::FrdmModel{schedule, std::move(normalizer), std::move(*denoiser), seed, train_steps};
}

frdm::FrdmModel read_checkpoint(const std::filesystem::path& path) { return decode_checkpoint(read_bytes(path)); }

void write_checkpoint(const std::filesystem::path& path, const frdm::FrdmModel& model) {
  write_bytes(path, encode_checkpoint(model));
}

Skeleton parse_skeleton(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("skeleton is not valid JSON: ") + e.what(), e.byte);
  }
  try {
    const auto& joints = doc.at("joints");
    if (!joints.is_array() || joints.size() != static_cast<std::size_t>(Skeleton::kJoints)) {
      throw ConfigError("joints", "expected 22 entries");
    }
    std::array<int, Skeleton::kJoints> parent{};
    std::array<Vec3, Skeleton::kJoints> offset{};
    std::array<std::string, Skeleton::kJoints> names{};
    for (std::size_t j = 0; j < joints.size(); ++j) {
      const auto& e = joints[j];
      names[j] = e.at("name").get<std::string>();
      parent[j] = e.at("parent").get<int>();
      const auto o = e.at("offset").get<std::vector<double>>();
      if (o.size() != 3) throw ConfigError("joints[" + std::to_string(j) + "].offset", "expected 3 values");
      offset[j] = Vec3(o[0], o[1], o[2]);
    }
    return Skeleton(parent, offset, names, doc.at("feet").get<std::vector<int>>(),
                    doc.at("knee_feet").get<std::vector<int>>(), doc.at("toes").get<std::vector<int>>());
  } catch (const json::exception& e) {
    throw ConfigError("skeleton", e.what());
  }
}

std::string format_skeleton(const Skeleton& s) {
  json joints = json::array();
  for (int j = 0; j < Skeleton::kJoints; ++j) {
    const Vec3& o = s.rest_offset(j);
    joints.push_back({{"name", s.name(j)}, {"parent", s.parent(j)}, {"offset", {o.x(), o.y(), o.z()}}});
  }
  json doc{{"joints", joints}, {"feet", s.feet()}, {"knee_feet", s.knee_feet()}, {"toes", s.toes()}};
  return doc.dump(2) + "\n";
}

Skeleton read_skeleton(const std::filesystem::path& path) { return parse_skeleton(read_text(path)); }

std::string format_labels(const std::vector<std::uint8_t>& labels) {
  json doc{{"frames", labels.size()},
           {"flags", {{"skate", 1}, {"jitter", 2}, {"float", 4}, {"penetrate", 8}}},
           {"labels", labels}};
  return doc.dump() + "\n";
}

std::vector<std::uint8_t> parse_labels(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("labels are not valid JSON: ") + e.what(), e.byte);
  }
  try {
    auto labels = doc.at("labels").get<std::vector<std::uint8_t>>();
    if (labels.size() != doc.at("frames").get<std::size_t>()) throw ConfigError("labels", "length mismatch");
    return labels;
  } catch (const json::exception& e) {
    throw ConfigError("labels", e.what());
  }
}

Bytes read_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string(), 0);
  return Bytes(std::istreambuf_iterator<char>(in), {});
}

void write_bytes(const std::filesystem::path& path, const Bytes& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error("cannot write " + path.string());
}

std::string read_text(const std::filesystem::path& path) {
  const Bytes b = read_bytes(path);
  return std::string(b.begin(), b.end());
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  write_bytes(path, Bytes(text.begin(), text.end()));
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace footfix::io
