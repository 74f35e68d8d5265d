#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "skyplace/channel.hpp"
#include "skyplace/game.hpp"
#include "skyplace/geometry.hpp"

namespace skyplace {

enum class Algorithm { learning, strategic, random_fixed, random_full };
enum class ChannelMode { expected, bernoulli };

const char* algorithm_name(Algorithm a);
Algorithm parse_algorithm(const std::string& s);
const char* channel_mode_name(ChannelMode m);
ChannelMode parse_channel_mode(const std::string& s);

// Full experiment parameterization. Field defaults are the documented
// defaults of the config file; `auto` fields resolve from the scenario.
struct SimConfig {
  // [scenario]
  double region_radius_m = 250.0;
  int n_users = 100;
  int n_uavs = 8;
  Algorithm algorithm = Algorithm::learning;
  int timesteps = 2000;
  double load_eta_exponent = 0.9;

  // [radio]
  double carrier_freq_ghz = 2.0;
  double bandwidth_hz = 10.0e6;
  double noise_psd_dbm_hz = -174.0;
  double demand_bps = 1.8e6;
  double tx_power_terrestrial_dbm = 46.0;
  double tx_power_uav_dbm = 24.0;
  double terrestrial_altitude_m = 25.0;
  double user_altitude_m = 1.5;
  ChannelMode channel_mode = ChannelMode::expected;

  // [environment]
  EnvironmentParams environment;

  // [uav]
  AltitudeBounds altitude{22.5, 300.0};
  double step_xy_m = 10.0;
  double step_h_m = 10.27;
  std::vector<Position3D> initial_positions;  // empty = sampled

  // [game]
  double phi = 1.0;
  double varphi = 1.0;
  std::optional<double> norm_bps;         // auto: max(1, n_users) * demand_bps
  std::optional<double> f_max;            // auto: phi
  double d_min_m = 10.0;
  double learning_rate = 0.1;
  std::optional<double> threshold_init;   // auto: 0.5 * f_max
  int threshold_window = 100;
  double threshold_decay = 0.9;
  std::optional<double> threshold_floor;  // auto: 0.05 * f_max

  // [baselines]
  int candidate_points = 79;
  int altitude_levels = 28;
  double fixed_altitude_m = 100.0;

  // [run]
  std::vector<std::uint64_t> seeds = default_seeds();

  static std::vector<std::uint64_t> default_seeds();

  HexRegion region() const { return {0.0, 0.0, region_radius_m}; }
  double resolved_norm_bps() const;
  double resolved_f_max() const;
  double resolved_threshold_init() const;
  double resolved_threshold_floor() const;
  GameWeights resolved_weights() const;

  // Throws std::invalid_argument on the first violated constraint.
  void validate() const;
};

// Flat key/value file with [section] headers; '#' and ';' start comments.
// Unknown keys are rejected.
SimConfig load_config(const std::string& path);
void apply_config_text(SimConfig& cfg, std::istream& in,
                       const std::string& origin);

// Serialization used for the reproducibility manifest; output parses back
// through load_config. `resolved` freezes the auto fields to their values.
std::string config_to_ini(const SimConfig& cfg, bool resolved);

// "1:20" (inclusive range), "3,5,8", or a single integer.
std::vector<std::uint64_t> parse_seed_list(const std::string& text);
std::string format_seed_list(const std::vector<std::uint64_t>& seeds);

// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

}  // namespace skyplace
