#pragma once

#include <optional>
#include <span>
#include <vector>

#include "skyplace/channel.hpp"
#include "skyplace/geometry.hpp"

namespace skyplace {

enum class BsKind { terrestrial, uav };

struct BaseStation {
  int id = 0;
  BsKind kind = BsKind::terrestrial;
  Position3D position;
  double tx_power_w = 0.0;
  RadioProfile profile;
  double load = 0.0;           // rho, post-enforcement, in [0, 1]
  double load_estimate = 0.0;  // rho_hat, broadcast for association
};

struct UserTerminal {
  int id = 0;
  Position3D position;
  double demand_bps = 0.0;  // traffic influx rate
  std::optional<int> serving_bs;
  bool dropped = false;
};

// Network KPIs for one timestep.
struct MetricsRow {
  int t = 0;
  std::vector<double> bs_throughput_bps;  // served demand per BS
  std::vector<double> bs_rate_sum_bps;    // Shannon-rate sum of non-dropped users
  std::vector<double> user_rate_bps;      // serving-link rate, 0 when dropped
  std::vector<int> dropped_per_bs;
  int satisfied_uavs = 0;
  double mean_utility = 0.0;
  bool equilibrium = false;
};

// Load of one BS: sum over served users of demand / rate, the fraction of
// time needed to carry the aggregate traffic. May exceed 1 before capacity
// enforcement. Throws std::domain_error when a user has demand but zero rate.
double bs_load(std::span<const double> demands_bps,
               std::span<const double> rates_bps);

// Load-estimate learning rate eta(t) = t^-exponent.
double eta_learning_rate(int t, double exponent);

// rho_hat(t) = eta * rho(t-1) + (1 - eta) * rho_hat(t-1).
double updated_load_estimate(double load_prev, double estimate_prev, double eta);

// Load-aware association: each user picks argmax_b rx_power * (1 - rho_hat_b),
// ties broken by the lowest BS index. rx_powers_w is row-major
// [user * n_bs + bs]. Returns the serving BS index per user.
std::vector<int> associate_users(std::span<const double> rx_powers_w,
                                 std::size_t n_users,
                                 std::span<const double> load_estimates);

// Drops users, largest time fraction first (ties: lowest user id), until the
// residual load is <= 1. Returns indices into `fractions` of dropped users.
std::vector<std::size_t> enforce_capacity(std::span<const double> fractions,
                                          std::span<const int> user_ids);

}  // namespace skyplace
