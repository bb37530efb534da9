#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "idnc/graph.hpp"
#include "idnc/harness.hpp"
#include "idnc/json_io.hpp"

namespace {

using idnc::harness::ExperimentConfig;

ExperimentConfig resolve_config(const std::string& config_path, const std::string& preset,
                                std::optional<std::uint64_t> seed,
                                const std::string& erasure_mode) {
  ExperimentConfig config;
  if (!config_path.empty())
    config = idnc::json_io::load_config_file(config_path);
  else if (!preset.empty())
    config = ExperimentConfig::preset(preset);
  if (seed) config.master_seed = *seed;
  if (!erasure_mode.empty())
    config.erasure_mode = idnc::channel::erasure_mode_from_string(erasure_mode);
  config.validate();
  return config;
}

int run_simulate(const std::string& config_path, const std::string& preset,
                 const std::string& erasure_mode, const std::string& policy,
                 std::optional<std::uint64_t> seed, std::uint64_t episode, bool trace,
                 const std::string& out_path) {
  const ExperimentConfig config = resolve_config(config_path, preset, seed, erasure_mode);
  if (!idnc::policy::is_registered(policy)) {
    std::cerr << "unknown policy: " << policy << '\n';
    return 2;
  }

  const auto record = idnc::harness::run_episode(config, policy, episode, trace);
  const auto j = idnc::json_io::to_json(record);
  if (trace) {
    for (std::size_t s = 0; s < record.trace.size(); ++s) {
      const auto& slot = record.trace[s];
      std::cout << "slot " << (s + 1) << ": " << slot.combo.to_string() << "  erased=";
      for (bool e : slot.erased) std::cout << (e ? '1' : '0');
      std::cout << '\n';
    }
  }
  std::cout << "policy=" << record.policy << " overall_delivery=" << record.overall_delivery_time
            << " completion=" << record.completion_time
            << " truncated=" << (record.truncated ? "yes" : "no") << '\n';
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write " << out_path << '\n';
      return 2;
    }
    out << j.dump(2) << '\n';
  } else {
    std::cout << j.dump(2) << '\n';
  }
  return 0;
}

int run_sweep(const std::string& config_path, const std::string& preset,
              const std::string& erasure_mode, const std::string& axis,
              std::vector<double> values, std::optional<std::uint64_t> seed,
              const std::string& out_dir) {
  const ExperimentConfig config = resolve_config(config_path, preset, seed, erasure_mode);
  const auto sweep_axis = idnc::harness::axis_from_string(axis);

  std::filesystem::create_directories(out_dir);
  const auto rows = idnc::harness::sweep(config, sweep_axis, values);
  const auto csv = (std::filesystem::path(out_dir) / "sweep.csv").string();
  const auto svg = (std::filesystem::path(out_dir) / "sweep.svg").string();
  const auto manifest = (std::filesystem::path(out_dir) / "manifest.json").string();
  idnc::harness::emit_csv(rows, csv);
  idnc::harness::emit_svg_plot(rows, svg);
  idnc::harness::write_manifest(config, sweep_axis, values, manifest);

  for (const auto& row : rows)
    std::cout << idnc::harness::axis_name(row.axis) << '=' << row.axis_value << ' '
              << row.stats.policy << " delivery=" << row.stats.mean_delivery << "±"
              << row.stats.ci_delivery << " completion=" << row.stats.mean_completion << "±"
              << row.stats.ci_completion << " episodes=" << row.stats.episodes
              << " truncated=" << row.stats.truncated << '\n';
  std::cout << "wrote " << csv << ", " << svg << ", " << manifest << '\n';
  return 0;
}

int run_graph(const std::string& config_path, const std::string& preset,
              const std::string& dot_path) {
  const ExperimentConfig config = resolve_config(config_path, preset, std::nullopt, "");
  idnc::channel::RandomStream stream({config.master_seed, 0});
  const auto state = idnc::harness::initial_state(config, stream);
  const auto g = idnc::build_graph(state);
  if (dot_path.empty()) {
    std::cout << g.to_dot();
  } else {
    std::ofstream out(dot_path);
    if (!out) {
      std::cerr << "cannot write " << dot_path << '\n';
      return 2;
    }
    out << g.to_dot();
    std::cout << "wrote " << dot_path << " (" << g.size() << " vertices)\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"idnc: delivery-time-aware XOR broadcast scheduling simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::string preset;
  std::string erasure_mode;
  std::string policy = "min-adt";
  std::optional<std::uint64_t> seed;
  std::uint64_t episode = 0;
  bool trace = false;
  std::string out_path;
  std::string axis = "U";
  std::vector<double> values;
  std::string out_dir;
  std::string dot_path;

  auto* simulate = app.add_subcommand("simulate", "run one episode");
  simulate->add_option("--config", config_path, "experiment config JSON");
  simulate->add_option("--preset", preset, "named preset (paper-scale, small)");
  simulate->add_option("--policy", policy, "policy name");
  simulate->add_option("--seed", seed, "master seed override");
  simulate->add_option("--erasure-mode", erasure_mode, "homogeneous or heterogeneous");
  simulate->add_option("--episode", episode, "episode index");
  simulate->add_flag("--trace", trace, "print per-slot transmissions");
  simulate->add_option("--out", out_path, "write the run record JSON here");

  auto* sweep_cmd = app.add_subcommand("sweep", "Monte Carlo sweep over U, M or P");
  sweep_cmd->add_option("--config", config_path, "experiment config JSON");
  sweep_cmd->add_option("--preset", preset, "named preset (paper-scale, small)");
  sweep_cmd->add_option("--axis", axis, "sweep axis: U, M or P")->required();
  sweep_cmd->add_option("--values", values, "axis values")->required()->delimiter(',');
  sweep_cmd->add_option("--seed", seed, "master seed override");
  sweep_cmd->add_option("--erasure-mode", erasure_mode, "homogeneous or heterogeneous");
  sweep_cmd->add_option("--out", out_dir, "output directory")->required();

  auto* verify_cmd = app.add_subcommand("verify", "run the built-in consistency checks");

  auto* graph_cmd = app.add_subcommand("graph", "dump the slot-0 coding graph as DOT");
  graph_cmd->add_option("--config", config_path, "experiment config JSON");
  graph_cmd->add_option("--preset", preset, "named preset (paper-scale, small)");
  graph_cmd->add_option("--dot", dot_path, "output DOT file (stdout when absent)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (simulate->parsed())
      return run_simulate(config_path, preset, erasure_mode, policy, seed, episode, trace,
                          out_path);
    if (sweep_cmd->parsed())
      return run_sweep(config_path, preset, erasure_mode, axis, values, seed, out_dir);
    if (verify_cmd->parsed()) return idnc::harness::verify(std::cout) ? 0 : 1;
    if (graph_cmd->parsed()) return run_graph(config_path, preset, dot_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
