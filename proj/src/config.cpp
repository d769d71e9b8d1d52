#include "footfix/config.hpp"

#include "footfix/error.hpp"
#include "footfix/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <set>

extern char** environ;

namespace footfix {

namespace {

using nlohmann::json;

json to_json(const RunConfig& c) {
  const auto& w = c.guidance.weights;
  const auto& a = c.artifacts;
  return json{
      {"seed", c.seed},
      {"diffusion", {{"steps", c.diffusion_steps}, {"beta_start", c.beta_start}, {"beta_end", c.beta_end}}},
      {"denoiser",
       {{"width", c.denoiser.width},
        {"depth", c.denoiser.depth},
        {"kernel", c.denoiser.kernel},
        {"time_dim", c.denoiser.time_dim},
        {"learned_skip", c.denoiser.learned_skip}}},
      {"guidance", {{"t_th", c.guidance.t_threshold}, {"eps", c.guidance.eps}}},
      {"loss_weights",
       {{"recon", w.recon}, {"root", w.root}, {"foot", w.foot}, {"vp", w.vp}, {"eps_insensitive", w.eps_insensitive}}},
      {"contact",
       {{"v_th", c.guidance.contact.velocity},
        {"h_th_toe", c.guidance.contact.toe_height},
        {"h_th_ankle", c.guidance.contact.ankle_height}}},
      {"metrics",
       {{"slide_threshold", c.skating.slide_threshold},
        {"fsr_per_contact_frame", c.skating.normalization == SkateNormalization::kContactFrames},
        {"penetration_margin", c.penetration_margin}}},
      {"train",
       {{"steps", c.train.steps},
        {"batch", c.train.batch},
        {"crop", c.train.crop},
        {"learning_rate", c.train.learning_rate},
        {"warmup", c.train.warmup},
        {"grad_clip", c.train.grad_clip},
        {"ema_decay", c.train.ema_decay}}},
      {"spectral", {{"b_bands", c.b_bands}}},
      {"synth", {{"count", c.corpus_size}, {"frames", c.frames}, {"fps", c.fps}}},
      {"artifacts",
       {{"skate_fraction", a.skate_fraction},
        {"skate_drift", a.skate_drift},
        {"jitter_sigma", a.jitter_sigma},
        {"jitter_joints", a.jitter_joints},
        {"float_offset", a.float_offset},
        {"float_fraction", a.float_fraction},
        {"penetrate_depth", a.penetrate_depth},
        {"penetrate_fraction", a.penetrate_fraction}}},
  };
}

template <typename T>
void read(const json& doc, const char* section, const char* key, T& out) {
  const json& v = section ? doc.at(section).at(key) : doc.at(key);
  const std::string field = section ? std::string(section) + "." + key : std::string(key);
  try {
    out = v.get<T>();
  } catch (const json::exception&) {
    throw ConfigError(field, "has the wrong type (" + v.dump() + ")");
  }
  if constexpr (std::is_floating_point_v<T>) {
    if (!std::isfinite(out)) throw ConfigError(field, "must be finite");
  }
}

RunConfig from_json(const json& d) {
  RunConfig c;
  read(d, nullptr, "seed", c.seed);
  read(d, "diffusion", "steps", c.diffusion_steps);
  read(d, "diffusion", "beta_start", c.beta_start);
  read(d, "diffusion", "beta_end", c.beta_end);
  read(d, "denoiser", "width", c.denoiser.width);
  read(d, "denoiser", "depth", c.denoiser.depth);
  read(d, "denoiser", "kernel", c.denoiser.kernel);
  read(d, "denoiser", "time_dim", c.denoiser.time_dim);
  read(d, "denoiser", "learned_skip", c.denoiser.learned_skip);
  c.denoiser.steps = c.diffusion_steps;
  read(d, "guidance", "t_th", c.guidance.t_threshold);
  read(d, "guidance", "eps", c.guidance.eps);
  auto& w = c.guidance.weights;
  read(d, "loss_weights", "recon", w.recon);
  read(d, "loss_weights", "root", w.root);
  read(d, "loss_weights", "foot", w.foot);
  read(d, "loss_weights", "vp", w.vp);
  read(d, "loss_weights", "eps_insensitive", w.eps_insensitive);
  read(d, "contact", "v_th", c.guidance.contact.velocity);
  read(d, "contact", "h_th_toe", c.guidance.contact.toe_height);
  read(d, "contact", "h_th_ankle", c.guidance.contact.ankle_height);
  read(d, "metrics", "slide_threshold", c.skating.slide_threshold);
  bool per_contact = false;
  read(d, "metrics", "fsr_per_contact_frame", per_contact);
  c.skating.normalization = per_contact ? SkateNormalization::kContactFrames : SkateNormalization::kTotalFrames;
  read(d, "metrics", "penetration_margin", c.penetration_margin);
  read(d, "train", "steps", c.train.steps);
  read(d, "train", "batch", c.train.batch);
  read(d, "train", "crop", c.train.crop);
  read(d, "train", "learning_rate", c.train.learning_rate);
  read(d, "train", "warmup", c.train.warmup);
  read(d, "train", "grad_clip", c.train.grad_clip);
  read(d, "train", "ema_decay", c.train.ema_decay);
  read(d, "spectral", "b_bands", c.b_bands);
  read(d, "synth", "count", c.corpus_size);
  read(d, "synth", "frames", c.frames);
  read(d, "synth", "fps", c.fps);
  auto& a = c.artifacts;
  read(d, "artifacts", "skate_fraction", a.skate_fraction);
  read(d, "artifacts", "skate_drift", a.skate_drift);
  read(d, "artifacts", "jitter_sigma", a.jitter_sigma);
  read(d, "artifacts", "jitter_joints", a.jitter_joints);
  read(d, "artifacts", "float_offset", a.float_offset);
  read(d, "artifacts", "float_fraction", a.float_fraction);
  read(d, "artifacts", "penetrate_depth", a.penetrate_depth);
  read(d, "artifacts", "penetrate_fraction", a.penetrate_fraction);
  c.train.seed = c.seed;
  c.train.losses = c.guidance;
  a.seed = c.seed;
  return c;
}

/// Overlays `patch` on `base`, rejecting keys `base` does not have.
void overlay(json& base, const json& patch, const std::string& path) {
  if (!patch.is_object()) throw ConfigError(path.empty() ? "config" : path, "expected an object");
  for (const auto& [key, value] : patch.items()) {
    const std::string field = path.empty() ? key : path + "." + key;
    if (!base.contains(key)) throw ConfigError(field, "unknown setting");
    if (base[key].is_object()) {
      overlay(base[key], value, field);
    } else {
      base[key] = value;
    }
  }
}

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return std::toupper(ch); });
  return s;
}

void apply_environment(json& doc, const std::map<std::string, std::string>& env) {
  std::set<std::string> used;
  auto apply = [&](json& slot, const std::string& name, const std::string& field) {
    const auto it = env.find(name);
    if (it == env.end()) return;
    used.insert(name);
    json value;
    try {
      value = json::parse(it->second);
    } catch (const json::parse_error&) {
      throw ConfigError(field, "environment override " + name + " is not a valid value");
    }
    slot = value;
  };
  for (auto& [key, value] : doc.items()) {
    if (value.is_object()) {
      for (auto& [sub, slot] : value.items()) {
        apply(slot, "FOOTFIX_" + upper(key) + "_" + upper(sub), key + "." + sub);
      }
    } else {
      apply(value, "FOOTFIX_" + upper(key), key);
    }
  }
  for (const auto& [name, value] : env) {
    if (name.rfind("FOOTFIX_", 0) == 0 && !used.contains(name)) {
      throw ConfigError(name, "environment override names no known setting");
    }
  }
}

}  // namespace

MetricConfig RunConfig::metrics() const { return MetricConfig{guidance.contact, skating, penetration_margin}; }

frdm::DiffusionSchedule RunConfig::schedule() const {
  return frdm::DiffusionSchedule::linear(diffusion_steps, beta_start, beta_end);
}

void validate(const RunConfig& c) {
  (void)c.schedule();
  frdm::validate(c.denoiser);
  frdm::validate(c.guidance, c.diffusion_steps);
  frdm::validate(c.train);
  if (!(c.skating.slide_threshold > 0.0)) throw ConfigError("metrics.slide_threshold", "must be positive");
  if (!(c.penetration_margin >= 0.0)) throw ConfigError("metrics.penetration_margin", "must be non-negative");
  if (c.b_bands < 1) throw ConfigError("spectral.b_bands", "must be at least 1");
  if (c.corpus_size < 1) throw ConfigError("synth.count", "must be at least 1");
  if (c.frames < 4) throw ConfigError("synth.frames", "must be at least 4");
  if (!(c.fps > 0.0)) throw ConfigError("synth.fps", "must be positive");
  validate(c.artifacts);
}

std::string format_config(const RunConfig& c) { return to_json(c).dump(2) + "\n"; }

RunConfig parse_config(const std::string& json_text, const std::map<std::string, std::string>& env) {
  json doc = to_json(RunConfig{});
  if (!json_text.empty()) {
    json patch;
    try {
      patch = json::parse(json_text);
    } catch (const json::parse_error& e) {
      throw FormatError(std::string("config is not valid JSON: ") + e.what(), e.byte);
    }
    overlay(doc, patch, "");
  }
  apply_environment(doc, env);
  RunConfig c = from_json(doc);
  validate(c);
  return c;
}

RunConfig load_config(const std::filesystem::path& path, const std::map<std::string, std::string>& env) {
  return parse_config(path.empty() ? std::string() : io::read_text(path), env);
}

std::map<std::string, std::string> process_environment() {
  std::map<std::string, std::string> out;
  for (char** e = environ; e && *e; ++e) {
    const std::string entry(*e);
    if (entry.rfind("FOOTFIX_", 0) != 0) continue;
    const auto eq = entry.find('=');
    if (eq != std::string::npos) out[entry.substr(0, eq)] = entry.substr(eq + 1);
  }
  return out;
}

std::string config_hash(const RunConfig& c) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(io::fnv1a64(format_config(c))));
  return buf;
}

}  // namespace footfix
