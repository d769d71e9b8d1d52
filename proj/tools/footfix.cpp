// footfix command-line front end: synth, corrupt, metrics, train, restore, bands.

#include "footfix/config.hpp"
#include "footfix/contact.hpp"
#include "footfix/error.hpp"
#include "footfix/frdm/trainer.hpp"
#include "footfix/io.hpp"
#include "footfix/parallel.hpp"
#include "footfix/random.hpp"
#include "footfix/spectral.hpp"
#include "footfix/synth.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

namespace fs = std::filesystem;
using namespace footfix;
using nlohmann::json;

namespace {

struct Common {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string skeleton_path;
  int jobs = 1;
};

RunConfig load(const Common& c) {
  RunConfig cfg = load_config(c.config_path, process_environment());
  if (c.seed) {
    cfg.seed = *c.seed;
    cfg.train.seed = *c.seed;
    cfg.artifacts.seed = *c.seed;
  }
  return cfg;
}

Skeleton skeleton_of(const Common& c) {
  return c.skeleton_path.empty() ? Skeleton::smpl() : io::read_skeleton(c.skeleton_path);
}

std::vector<fs::path> motion_files(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw FormatError("not a directory: " + dir.string(), 0);
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".mseq") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  if (out.empty()) throw EmptyInputError("no .mseq files in " + dir.string());
  return out;
}

std::vector<MotionSequence> read_all(const std::vector<fs::path>& files, int jobs) {
  std::vector<std::optional<MotionSequence>> slots(files.size());
  parallel_for(files.size(), jobs, [&](std::size_t i) { slots[i].emplace(io::read_motion(files[i])); });
  std::vector<MotionSequence> out;
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

void write_manifest(const fs::path& path, const std::string& command, const RunConfig& cfg,
                    const json& files) {
  json doc{{"command", command},
           {"config_hash", config_hash(cfg)},
           {"seed", cfg.seed},
           {"config", json::parse(format_config(cfg))},
           {"files", files}};
  io::write_text(path, doc.dump(2) + "\n");
}

std::string sequence_name(std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "seq_%05zu.mseq", i);
  return buf;
}

int cmd_synth(const Common& c, const fs::path& out, std::optional<std::size_t> count) {
  RunConfig cfg = load(c);
  if (count) cfg.corpus_size = *count;
  validate(cfg);
  fs::create_directories(out);
  const auto corpus = generate_corpus(cfg.seed, cfg.corpus_size, cfg.frames, cfg.fps, c.jobs);
  json files = json::array();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    io::write_motion(out / sequence_name(i), corpus[i]);
    files.push_back({{"name", sequence_name(i)}, {"seed", derive_seed(cfg.seed, i)}});
  }
  write_manifest(out / "manifest.json", "synth", cfg, files);
  std::cout << "wrote " << corpus.size() << " sequences to " << out.string() << "\n";
  return 0;
}

int cmd_corrupt(const Common& c, const fs::path& in, const fs::path& out) {
  const RunConfig cfg = load(c);
  const Skeleton skeleton = skeleton_of(c);
  const auto files = motion_files(in);
  fs::create_directories(out);
  std::vector<std::uint64_t> seeds(files.size());
  std::vector<int> identity(files.size(), 0);
  parallel_for(files.size(), c.jobs, [&](std::size_t i) {
    ArtifactSpec spec = cfg.artifacts;
    spec.seed = seeds[i] = derive_seed(cfg.seed, i);
    const auto result = corrupt(io::read_motion(files[i]), spec, skeleton);
    identity[i] = result.identity;
    io::write_motion(out / files[i].filename(), result.motion);
    io::write_text(out / (files[i].stem().string() + ".labels.json"), io::format_labels(result.labels));
  });
  if (std::any_of(identity.begin(), identity.end(), [](int v) { return v != 0; })) {
    std::cerr << "warning: artifact spec is empty; outputs equal inputs\n";
  }
  json list = json::array();
  for (std::size_t i = 0; i < files.size(); ++i) list.push_back({{"name", files[i].filename()}, {"seed", seeds[i]}});
  write_manifest(out / "manifest.json", "corrupt", cfg, list);
  std::cout << "corrupted " << files.size() << " sequences into " << out.string() << "\n";
  return 0;
}

int cmd_metrics(const Common& c, const fs::path& in, const fs::path& report_path) {
  const RunConfig cfg = load(c);
  const Skeleton skeleton = skeleton_of(c);
  const auto files = motion_files(in);
  const auto corpus = read_all(files, c.jobs);
  const QualityReport report = evaluate_corpus(corpus, skeleton, cfg.metrics(), c.jobs);
  json rows = json::array();
  for (std::size_t i = 0; i < files.size(); ++i) {
    const auto& q = report.sequences[i];
    std::printf("%s fsr=%.6f jitter=%.6f penetration=%.6f\n", files[i].filename().c_str(), q.fsr, q.jitter,
                q.penetration);
    rows.push_back({{"name", files[i].filename()}, {"fsr", q.fsr}, {"jitter", q.jitter}, {"penetration", q.penetration}});
  }
  std::printf("mean fsr=%.6f jitter=%.6f penetration=%.6f\n", report.mean.fsr, report.mean.jitter,
              report.mean.penetration);
  if (!report_path.empty()) {
    json doc{{"config_hash", config_hash(cfg)},
             {"count", files.size()},
             {"mean", {{"fsr", report.mean.fsr}, {"jitter", report.mean.jitter}, {"penetration", report.mean.penetration}}},
             {"sequences", rows}};
    io::write_text(report_path, doc.dump(2) + "\n");
  }
  return 0;
}

int cmd_train(const Common& c, const fs::path& in, const fs::path& checkpoint, const fs::path& log_path) {
  const RunConfig cfg = load(c);
  const Skeleton skeleton = skeleton_of(c);
  const auto corpus = read_all(motion_files(in), c.jobs);
  frdm::FrdmModel model = frdm::make_model(cfg.schedule(), cfg.denoiser, skeleton, cfg.seed);
  model.normalizer = frdm::FeatureNormalizer::fit(corpus);
  frdm::Trainer trainer(model, skeleton, cfg.train);
  std::ostringstream log;
  log << "step,total,recon,root,foot,vp,eps_insensitive,ema,learning_rate\n";
  for (int s = 0; s < cfg.train.steps; ++s) {
    const double lr = trainer.learning_rate();
    const auto l = trainer.step(corpus);
    log << s << ',' << l.total << ',' << l.recon << ',' << l.root << ',' << l.foot << ',' << l.vp << ','
        << l.eps_insensitive << ',' << trainer.ema_loss() << ',' << lr << '\n';
    if ((s + 1) % 500 == 0 || s + 1 == cfg.train.steps) {
      std::printf("step %d loss %.6f ema %.6f\n", s + 1, l.total, trainer.ema_loss());
      std::fflush(stdout);
    }
  }
  io::write_checkpoint(checkpoint, model);
  io::write_text(log_path.empty() ? fs::path(checkpoint.string() + ".log.csv") : log_path, log.str());
  write_manifest(checkpoint.string() + ".manifest.json", "train", cfg,
                 json::array({{{"name", checkpoint.filename()}, {"seed", cfg.seed}}}));
  return 0;
}

int cmd_restore(const Common& c, const fs::path& in, const fs::path& checkpoint, const fs::path& out) {
  const RunConfig cfg = load(c);
  const Skeleton skeleton = skeleton_of(c);
  const frdm::FrdmModel model = io::read_checkpoint(checkpoint);
  const auto files = motion_files(in);
  fs::create_directories(out);
  std::vector<std::uint64_t> seeds(files.size());
  parallel_for(files.size(), c.jobs, [&](std::size_t i) {
    seeds[i] = derive_seed(cfg.seed, i);
    const auto restored = frdm::restore(io::read_motion(files[i]), model, skeleton, cfg.guidance, seeds[i]);
    io::write_motion(out / files[i].filename(), restored);
  });
  json list = json::array();
  for (std::size_t i = 0; i < files.size(); ++i) list.push_back({{"name", files[i].filename()}, {"seed", seeds[i]}});
  write_manifest(out / "manifest.json", "restore", cfg, list);
  std::cout << "restored " << files.size() << " sequences into " << out.string() << "\n";
  return 0;
}

int cmd_bands(const Common& c, const fs::path& in, std::optional<int> bands, const std::string& prefix) {
  const RunConfig cfg = load(c);
  const MotionSequence m = io::read_motion(in);
  const auto split = spectral::band_split(m.frames(), bands.value_or(cfg.b_bands));
  const auto energy = spectral::band_energy(split);
  const auto fraction = spectral::band_energy_fractions(split);
  std::printf("band first_row rows energy fraction\n");
  for (std::size_t b = 0; b < split.bands.size(); ++b) {
    std::printf("%zu %d %d %.9g %.6f\n", b, split.bands[b].first, split.bands[b].rows, energy[b], fraction[b]);
  }
  if (!prefix.empty()) {
    const auto signals = spectral::band_signals(split);
    for (std::size_t b = 0; b < signals.size(); ++b) {
      io::write_motion(prefix + "_band" + std::to_string(b) + ".mseq", MotionSequence(signals[b], m.fps()));
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Foot artifact synthesis, metrics and diffusion-based restoration"};
  app.require_subcommand(1);
  Common common;
  std::uint64_t seed_value = 0;
  app.add_option("--config", common.config_path, "JSON run configuration");
  auto* seed_opt = app.add_option("--seed", seed_value, "Base seed (overrides the config)");
  app.add_option("--skeleton", common.skeleton_path, "JSON skeleton (default: built-in SMPL body)");
  app.add_option("--jobs", common.jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::string in, out, checkpoint, report, log, prefix;
  std::optional<std::size_t> count;
  std::optional<int> bands;

  auto* synth = app.add_subcommand("synth", "Generate a clean corpus");
  synth->add_option("--out", out, "Output directory")->required();
  synth->add_option("--count", count, "Number of sequences (overrides synth.count)");

  auto* corrupt_cmd = app.add_subcommand("corrupt", "Inject artifacts into a corpus");
  corrupt_cmd->add_option("--in", in, "Input directory")->required();
  corrupt_cmd->add_option("--out", out, "Output directory")->required();

  auto* metrics = app.add_subcommand("metrics", "Evaluate FSR, jitter and penetration");
  metrics->add_option("--in", in, "Input directory")->required();
  metrics->add_option("--report", report, "Summary JSON file");

  auto* train = app.add_subcommand("train", "Train the restoration model on a clean corpus");
  train->add_option("--in", in, "Clean corpus directory")->required();
  train->add_option("--checkpoint", checkpoint, "Checkpoint to write")->required();
  train->add_option("--log", log, "Loss curve CSV (default: <checkpoint>.log.csv)");

  auto* restore_cmd = app.add_subcommand("restore", "Restore a corpus with a trained model");
  restore_cmd->add_option("--in", in, "Input directory")->required();
  restore_cmd->add_option("--checkpoint", checkpoint, "Trained checkpoint")->required();
  restore_cmd->add_option("--out", out, "Output directory")->required();

  auto* bands_cmd = app.add_subcommand("bands", "Per-band spectral energy of one sequence");
  bands_cmd->add_option("--in", in, "Input .mseq file")->required();
  bands_cmd->add_option("--bands", bands, "Band count (overrides spectral.b_bands)");
  bands_cmd->add_option("--out-prefix", prefix, "Write band-filtered sequences as <prefix>_bandN.mseq");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (*seed_opt) common.seed = seed_value;

  try {
    if (*synth) return cmd_synth(common, out, count);
    if (*corrupt_cmd) return cmd_corrupt(common, in, out);
    if (*metrics) return cmd_metrics(common, in, report);
    if (*train) return cmd_train(common, in, checkpoint, log);
    if (*restore_cmd) return cmd_restore(common, in, checkpoint, out);
    if (*bands_cmd) return cmd_bands(common, in, bands, prefix);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const SingularInputError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const FormatError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return 3;
  } catch (const NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
