#include <atomic>
#include <csignal>
#include <cstdio>
#include <fstream>
#include <iostream>

#include <nlohmann/json.hpp>

#include "bubble/checkpoint.hpp"
#include "bubble/errors.hpp"
#include "bubble/profile_io.hpp"
#include "bubble/train_config.hpp"
#include "bubble/trainer.hpp"
#include "commands.hpp"
#include "common.hpp"
#include "svg.hpp"

namespace bubble::cli {

namespace {

std::atomic<bool> g_stop{false};

extern "C" void on_sigint(int) { g_stop.store(true); }

struct TrainOptions {
  std::string config;
  std::vector<std::string> overrides;
  std::filesystem::path out;
  std::size_t epochs = 0;
  std::uint64_t seed = 0;
  double threshold = 0.1;
  bool svg = false;
  std::size_t progress = 1000;
  std::size_t profile_n = 1001;
};

void write_history(const std::filesystem::path& dir, const pinn::TrainingTrace& trace) {
  std::ofstream out(dir / "loss_history.csv");
  pinn::write_loss_history(out, trace);
}

int run_train(const TrainOptions& o, CLI::Option* epochs_opt, CLI::Option* seed_opt) {
  using namespace pinn;
  TrainConfig cfg = o.config.empty() ? TrainConfig{} : load_train_config(o.config);
  for (const auto& kv : o.overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw InputError("--set expects key=value, got '" + kv + "'");
    apply_config_entry(cfg, std::string_view(kv).substr(0, eq), std::string_view(kv).substr(eq + 1));
  }
  if (epochs_opt->count()) cfg.epochs = o.epochs;
  if (seed_opt->count()) cfg.seed = o.seed;
  cfg.validate();
  prepare_out_dir(o.out);
  {
    std::ofstream out(o.out / "config_used.cfg");
    write_train_config(out, cfg);
  }

  const double C = cfg.target_C();
  if (cfg.epochs == 0) {
    const auto net = initial_network(cfg);
    write_checkpoint(o.out / "checkpoint.txt", net);
    std::printf("epochs = 0: wrote the initialized checkpoint to %s\n", (o.out / "checkpoint.txt").c_str());
    return kOk;
  }

  std::printf("training N=%zu epochs=%zu lr=%g seed=%llu, target C = %.10e m\n", cfg.N, cfg.epochs,
              cfg.learning_rate, static_cast<unsigned long long>(cfg.seed), C);
  g_stop.store(false);
  const auto previous = std::signal(SIGINT, on_sigint);
  TrainHooks hooks;
  hooks.stop = &g_stop;
  hooks.on_epoch = [&](std::size_t epoch, const LossBreakdown& l) {
    if (o.progress && (epoch % o.progress == 0 || epoch == 1))
      std::fprintf(stderr, "epoch %6zu  total %.6e  L_SB %.3e  L_V %.3e  L_B %.3e  L_S %.3e\n", epoch, l.total,
                   l.L_SB, l.L_V, l.L_B, l.L_S);
  };
  TrainResult result = [&] {
    try {
      return train(cfg, hooks);
    } catch (...) {
      std::signal(SIGINT, previous);
      throw;
    }
  }();
  std::signal(SIGINT, previous);

  const auto& trace = result.trace;
  write_history(o.out, trace);
  write_checkpoint(o.out / "checkpoint.txt", result.net);
  const auto profile = export_profile(result.net, o.profile_n);
  write_profile(o.out / "profile.csv", profile);
  if (o.svg) write_polar_svg(o.out / "profile.svg", profile, C);

  const auto& last = trace.history.empty() ? LossBreakdown{} : trace.history.back();
  nlohmann::ordered_json summary = {
      {"rrmse", trace.final_rrmse},      {"C", C},
      {"epochs_run", trace.history.size()}, {"epochs_requested", cfg.epochs},
      {"interrupted", trace.interrupted}, {"seed", cfg.seed},
      {"N", cfg.N},                      {"wall_seconds", trace.wall_seconds},
      {"final_loss", {{"L_SB", last.L_SB}, {"L_V", last.L_V}, {"L_B", last.L_B}, {"L_S", last.L_S}, {"total", last.total}}}};
  {
    std::ofstream out(o.out / "summary.json");
    out << summary.dump(2) << '\n';
  }

  std::printf("final rRMSE = %.6e (%zu epochs, %.1f s)\n", trace.final_rrmse, trace.history.size(),
              trace.wall_seconds);
  if (trace.interrupted) {
    std::printf("interrupted: partial trace written to %s\n", o.out.c_str());
    return kCheckFailed;
  }
  if (o.threshold > 0.0 && !(trace.final_rrmse <= o.threshold)) {
    std::printf("rRMSE above threshold %g\n", o.threshold);
    return kCheckFailed;
  }
  return kOk;
}

}  // namespace

Action register_train(CLI::App& app) {
  auto o = std::make_shared<TrainOptions>();
  o->out = default_out_dir();
  auto* sub = app.add_subcommand("train", "Train the collocation network for the horn-torus profile");
  sub->add_option("--config", o->config, "key = value configuration file")->check(CLI::ExistingFile);
  sub->add_option("--set", o->overrides, "override a config key, key=value (repeatable)");
  sub->add_option("--out", o->out, "output directory ($BUBBLE_OUT_DIR)");
  auto* epochs = sub->add_option("--epochs", o->epochs, "override the epoch count");
  auto* seed = sub->add_option("--seed", o->seed, "override the seed");
  sub->add_option("--rrmse-threshold", o->threshold, "exit 1 above this rRMSE; 0 disables")->capture_default_str();
  sub->add_option("--progress", o->progress, "print losses every this many epochs; 0 silences")
      ->capture_default_str();
  sub->add_option("--profile-n", o->profile_n, "nodes of the exported profile")->check(CLI::Range(3, 10000000))
      ->capture_default_str();
  sub->add_flag("--svg", o->svg, "also render profile.svg");
  return [o, epochs, seed] { return run_train(*o, epochs, seed); };
}

}  // namespace bubble::cli
