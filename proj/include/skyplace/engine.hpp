#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skyplace/config.hpp"
#include "skyplace/game.hpp"
#include "skyplace/network.hpp"
#include "skyplace/rng.hpp"

namespace skyplace {

// Time-means of the headline metrics, over the full run and over the tail
// window (the final quarter of the horizon, at least one step).
struct RunAggregates {
  double throughput_per_bs_tail = 0.0;
  double throughput_per_bs_full = 0.0;
  double rate_sum_per_bs_tail = 0.0;
  double rate_sum_per_bs_full = 0.0;
  double user_rate_tail = 0.0;
  double user_rate_full = 0.0;
  double dropped_per_bs_tail = 0.0;
  double dropped_per_bs_full = 0.0;
  double dropped_total_tail = 0.0;
  double dropped_total_full = 0.0;
  double satisfied_uavs_tail = 0.0;
  double mean_utility_tail = 0.0;
};

struct RunResult {
  SimConfig config;
  std::uint64_t seed = 0;
  std::vector<MetricsRow> series;
  std::vector<Position3D> final_positions;  // one per UAV
  std::optional<int> equilibrium_timestep;  // first step with all satisfied
  RunAggregates aggregates;
};

struct Stat {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation
};

Stat stat_of(const std::vector<double>& values);

struct SeedSummary {
  std::uint64_t seed = 0;
  RunAggregates aggregates;
  std::optional<int> equilibrium_timestep;
  std::vector<Position3D> final_positions;
};

struct ReplicationSummary {
  SimConfig config;
  std::vector<SeedSummary> per_seed;
  // Across-seed statistics of the tail aggregates.
  Stat throughput_per_bs;
  Stat rate_sum_per_bs;
  Stat user_rate;
  Stat dropped_per_bs;
  Stat dropped_total;
  Stat mean_utility;
  double equilibrium_fraction = 0.0;
};

// One simulated episode. Copies are independent and a copy stepped forward
// produces the same trajectory as the original.
class Episode {
 public:
  Episode(const SimConfig& cfg, std::uint64_t seed);

  void step();
  void run_to_end();
  bool done() const { return t_ >= cfg_.timesteps; }
  int t() const { return t_; }

  const SimConfig& config() const { return cfg_; }
  std::uint64_t seed() const { return seed_; }
  const std::vector<BaseStation>& stations() const { return stations_; }
  const std::vector<UserTerminal>& users() const { return users_; }
  const std::vector<UavAgent>& agents() const { return agents_; }
  const std::vector<MetricsRow>& series() const { return series_; }
  std::optional<int> equilibrium_timestep() const { return equilibrium_t_; }

  std::vector<Position3D> uav_positions() const;
  RunResult result() const;

 private:
  void place_uavs(Rng init_rng);
  void move_uavs();
  void refresh_link_budgets();
  void fill_rx_powers();
  void associate_and_serve();
  void update_game();
  void record_metrics();

  SimConfig cfg_;
  std::uint64_t seed_ = 0;
  GameWeights weights_;
  HexRegion region_;
  double noise_w_ = 0.0;
  std::vector<BaseStation> stations_;
  std::vector<UserTerminal> users_;
  std::vector<UavAgent> agents_;
  std::vector<Rng> agent_rngs_;
  Rng channel_rng_;
  std::vector<LinkBudget> budgets_;     // user-major, n_users * n_stations
  std::vector<char> budget_current_;    // per station
  std::vector<double> rx_w_;            // user-major
  std::vector<double> rates_bps_;       // per user
  std::vector<double> served_demand_bps_;  // per station
  std::vector<MetricsRow> series_;
  int t_ = 0;
  std::optional<int> equilibrium_t_;
};

RunResult run_episode(const SimConfig& cfg, std::uint64_t seed);
ReplicationSummary run_replications(const SimConfig& cfg);

struct SweepRow {
  std::string axis;
  double value = 0.0;
  Algorithm algorithm = Algorithm::learning;
  int n_seeds = 0;
  Stat throughput_per_bs;
  Stat rate_sum_per_bs;
  Stat user_rate;
  Stat dropped_per_bs;
  Stat dropped_total;
};

// axis is "users" or "uavs"; runs every (value, algorithm) cell.
std::vector<SweepRow> run_sweep(const SimConfig& base, const std::string& axis,
                                const std::vector<int>& values,
                                const std::vector<Algorithm>& algos);

std::string timeseries_csv(const RunResult& result);
std::string summary_json(const ReplicationSummary& summary);
std::string sweep_csv(const std::vector<SweepRow>& rows);
std::string manifest_ini(const SimConfig& cfg);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace skyplace
