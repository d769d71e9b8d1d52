#pragma once

#include "footfix/contact.hpp"
#include "footfix/frdm/denoiser.hpp"
#include "footfix/frdm/model.hpp"
#include "footfix/frdm/trainer.hpp"
#include "footfix/synth.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>

namespace footfix {

/// Every tunable of the pipeline with its default.
struct RunConfig {
  std::uint64_t seed = 0;

  int diffusion_steps = 100;
  double beta_start = 1e-3;
  double beta_end = 0.2;
  frdm::DenoiserConfig denoiser;
  frdm::GuidanceConfig guidance;  // t_th, eps, loss weights, contact thresholds
  frdm::TrainConfig train;

  SkatingConfig skating;
  double penetration_margin = 0.01;

  int b_bands = 2;

  std::size_t corpus_size = 200;
  int frames = 256;
  double fps = 30.0;
  ArtifactSpec artifacts = default_artifacts();

  static ArtifactSpec default_artifacts() {
    ArtifactSpec a;
    a.skate_fraction = 0.2;
    a.jitter_sigma = 0.005;
    return a;
  }

  MetricConfig metrics() const;
  frdm::DiffusionSchedule schedule() const;
};

/// Throws ConfigError naming the first out-of-range field.
void validate(const RunConfig& config);

/// Effective configuration as JSON text (sorted keys, stable across runs).
std::string format_config(const RunConfig& config);

/// Defaults, then the JSON document (unknown keys rejected), then overrides
/// of the form FOOTFIX_<SECTION>_<KEY> (e.g. FOOTFIX_GUIDANCE_T_TH=20).
/// `env` maps variable names to values; pass the process environment in
/// production and a fixed map in tests.
RunConfig parse_config(const std::string& json_text, const std::map<std::string, std::string>& env = {});
RunConfig load_config(const std::filesystem::path& path, const std::map<std::string, std::string>& env);

/// FOOTFIX_* variables of the current process.
std::map<std::string, std::string> process_environment();

/// FNV-1a-64 of format_config, as 16 hex digits.
std::string config_hash(const RunConfig& config);

}  // namespace footfix
