#pragma once

#include "footfix/frdm/model.hpp"
#include "footfix/motion.hpp"
#include "footfix/skeleton.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace footfix::io {

using Bytes = std::vector<std::uint8_t>;

// .mseq layout (little-endian):
//   0  "MSEQ"
//   4  u32 version (1)
//   8  f32 fps
//  12  u32 frame count L (>= 2)
//  16  u32 feature dim (259)
//  20  L*259 f32, row-major
inline constexpr std::uint32_t kMseqVersion = 1;
inline constexpr std::size_t kMseqHeaderBytes = 20;

/// Raw file contents; payload values are kept as stored.
struct MseqFile {
  float fps = 30.0f;
  std::uint32_t frames = 0;
  std::vector<float> payload;  // frames * 259

  bool operator==(const MseqFile&) const = default;
};

/// Throws FormatError with the byte offset of the first invalid field.
MseqFile decode_mseq(const Bytes& bytes);
Bytes encode_mseq(const MseqFile& file);

/// Values are rounded to single precision on write.
MseqFile to_mseq(const MotionSequence& m);
MotionSequence from_mseq(const MseqFile& file);

MotionSequence read_motion(const std::filesystem::path& path);
void write_motion(const std::filesystem::path& path, const MotionSequence& m);

// Checkpoint layout (little-endian):
//   "FFCK", u32 version, u64 seed, u64 train_steps,
//   u32 T, f64 beta_start, f64 beta_end,
//   u32 feature_dim, width, depth, kernel, time_dim, steps, u8 learned_skip,
//   u32 n + n bytes conditioning mask,
//   u32 D + 4*D f64 normalizer (mean, std, first_mean, first_std),
//   u64 P + P f64 parameters.
inline constexpr std::uint32_t kCheckpointVersion = 1;

frdm::FrdmModel decode_checkpoint(const Bytes& bytes);
Bytes encode_checkpoint(const frdm::FrdmModel& model);
frdm::FrdmModel read_checkpoint(const std::filesystem::path& path);
void write_checkpoint(const std::filesystem::path& path, const frdm::FrdmModel& model);

/// JSON skeleton: {"joints": [{"name", "parent", "offset": [x,y,z]}, ...],
/// "feet": [...], "knee_feet": [...], "toes": [...]}.
Skeleton parse_skeleton(const std::string& text);
std::string format_skeleton(const Skeleton& skeleton);
Skeleton read_skeleton(const std::filesystem::path& path);

/// Per-frame artifact flags stored next to a corrupted file as <stem>.labels.json.
std::string format_labels(const std::vector<std::uint8_t>& labels);
std::vector<std::uint8_t> parse_labels(const std::string& text);

Bytes read_bytes(const std::filesystem::path& path);
void write_bytes(const std::filesystem::path& path, const Bytes& bytes);
std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view data);

}  // namespace footfix::io
