#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "skyplace/config.hpp"
#include "skyplace/engine.hpp"

namespace {

using namespace skyplace;

struct CommonFlags {
  std::string config_path;
  std::string out_dir = "out";
  std::string algo;
  int users = -1;
  int uavs = -1;
  int steps = -1;
};

void add_common_flags(CLI::App* sub, CommonFlags* flags) {
  sub->add_option("--config", flags->config_path,
                  "Configuration file (INI); flags override its values");
  sub->add_option("--out", flags->out_dir, "Output directory")
      ->capture_default_str();
  sub->add_option("--algo", flags->algo,
                  "Placement algorithm: learning|strategic|random_fixed|random");
  sub->add_option("--users", flags->users, "Number of users");
  sub->add_option("--uavs", flags->uavs, "Number of UAVs");
  sub->add_option("--steps", flags->steps, "Number of timesteps");
}

SimConfig build_config(const CommonFlags& flags) {
  SimConfig cfg;
  if (!flags.config_path.empty()) cfg = load_config(flags.config_path);
  if (!flags.algo.empty()) cfg.algorithm = parse_algorithm(flags.algo);
  if (flags.users >= 0) cfg.n_users = flags.users;
  if (flags.uavs >= 0) cfg.n_uavs = flags.uavs;
  if (flags.steps >= 0) cfg.timesteps = flags.steps;
  return cfg;
}

std::string out_path(const CommonFlags& flags, const std::string& name) {
  std::filesystem::create_directories(flags.out_dir);
  return (std::filesystem::path(flags.out_dir) / name).string();
}

void emit(const CommonFlags& flags, const std::string& name,
          const std::string& content) {
  const std::string path = out_path(flags, name);
  write_text_file(path, content);
  std::cout << "wrote " << path << "\n";
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) out.push_back(std::stoi(item));
  return out;
}

int cmd_run(const CommonFlags& flags, std::optional<std::uint64_t> seed) {
  SimConfig cfg = build_config(flags);
  cfg.seeds = {seed ? *seed : cfg.seeds.front()};
  const RunResult result = run_episode(cfg, cfg.seeds.front());
  ReplicationSummary summary = run_replications(cfg);
  emit(flags, "timeseries.csv", timeseries_csv(result));
  emit(flags, "summary.json", summary_json(summary));
  emit(flags, "manifest.ini", manifest_ini(cfg));
  std::cout << "algorithm " << algorithm_name(cfg.algorithm) << ", seed "
            << cfg.seeds.front() << ": throughput/bs "
            << format_double(result.aggregates.throughput_per_bs_tail)
            << " bps, dropped/bs "
            << format_double(result.aggregates.dropped_per_bs_tail)
            << " (tail means)\n";
  return 0;
}

int cmd_replicate(const CommonFlags& flags, const std::string& seeds_text) {
  SimConfig cfg = build_config(flags);
  if (!seeds_text.empty()) cfg.seeds = parse_seed_list(seeds_text);
  const ReplicationSummary summary = run_replications(cfg);
  emit(flags, "summary.json", summary_json(summary));
  emit(flags, "manifest.ini", manifest_ini(cfg));
  std::cout << "algorithm " << algorithm_name(cfg.algorithm) << ", "
            << cfg.seeds.size() << " seeds: throughput/bs "
            << format_double(summary.throughput_per_bs.mean) << " +/- "
            << format_double(summary.throughput_per_bs.stddev)
            << " bps, dropped/bs "
            << format_double(summary.dropped_per_bs.mean) << " +/- "
            << format_double(summary.dropped_per_bs.stddev) << " (tail means)\n";
  return 0;
}

int cmd_sweep(const CommonFlags& flags, const std::string& seeds_text,
              const std::string& axis, const std::string& values_text,
              const std::string& algos_text) {
  SimConfig cfg = build_config(flags);
  if (!seeds_text.empty()) cfg.seeds = parse_seed_list(seeds_text);
  const std::vector<int> values = parse_int_list(values_text);
  std::vector<Algorithm> algos;
  {
    std::string item;
    std::istringstream in(algos_text);
    while (std::getline(in, item, ',')) algos.push_back(parse_algorithm(item));
  }
  const std::vector<SweepRow> rows = run_sweep(cfg, axis, values, algos);
  emit(flags, "sweep.csv", sweep_csv(rows));
  std::string manifest = "# sweep axis=" + axis + " values=" + values_text +
                         " algos=" + algos_text + "\n" + manifest_ini(cfg);
  emit(flags, "manifest.ini", manifest);
  std::cout << rows.size() << " sweep cells, " << cfg.seeds.size()
            << " seeds each\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulator of UAV-assisted downlink cellular coverage"};
  app.require_subcommand(1);

  CommonFlags run_flags;
  std::optional<std::uint64_t> run_seed;
  CLI::App* run = app.add_subcommand("run", "Simulate one seeded episode");
  add_common_flags(run, &run_flags);
  run->add_option("--seed", run_seed, "Episode seed");

  CommonFlags rep_flags;
  std::string rep_seeds;
  CLI::App* replicate =
      app.add_subcommand("replicate", "Aggregate one scenario across seeds");
  add_common_flags(replicate, &rep_flags);
  replicate->add_option("--seeds", rep_seeds,
                        "Seed list, e.g. 1:20 or 3,5,8");

  CommonFlags sweep_flags;
  std::string sweep_seeds;
  std::string axis = "users";
  std::string values_text;
  std::string algos_text = "learning,strategic,random_fixed,random";
  CLI::App* sweep =
      app.add_subcommand("sweep", "Replicate over an axis of scenario sizes");
  add_common_flags(sweep, &sweep_flags);
  sweep->add_option("--seeds", sweep_seeds, "Seed list, e.g. 1:20 or 3,5,8");
  sweep->add_option("--axis", axis, "Sweep axis: users|uavs")
      ->capture_default_str();
  sweep->add_option("--values", values_text, "Axis values, e.g. 70,140,210")
      ->required();
  sweep->add_option("--algos", algos_text, "Algorithms to compare")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
    if (run->parsed()) return cmd_run(run_flags, run_seed);
    if (replicate->parsed()) return cmd_replicate(rep_flags, rep_seeds);
    if (sweep->parsed())
      return cmd_sweep(sweep_flags, sweep_seeds, axis, values_text, algos_text);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
