#pragma once

#include <span>

#include "skyplace/geometry.hpp"

namespace skyplace {

// dB / linear conversions. Everything inside the simulator works in linear
// watts; conversions happen at the module boundary only.
double db_to_linear(double db);
double linear_to_db(double v);
double dbm_to_watts(double dbm);
double watts_to_dbm(double w);

// Statistical built-up environment for the LoS probability model:
// alpha = built-up land ratio, beta = buildings per km^2, gamma = building
// height scale in meters.
struct EnvironmentParams {
  double alpha = 0.3;
  double beta = 500.0;
  double gamma = 15.0;
};

// Path loss exponent as an affine function of log10(altitude); slope 0
// gives a constant exponent.
struct ExponentRule {
  double intercept = 2.0;
  double log10_slope = 0.0;

  double at(double h) const;
};

enum class LinkCondition { los, nlos };

// Reference loss plus exponent rule for each propagation condition.
struct RadioProfile {
  double ref_loss_los_db = 0.0;
  double ref_loss_nlos_db = 0.0;
  ExponentRule exponent_los;
  ExponentRule exponent_nlos;
};

// Table values for a 3GPP-style height-dependent channel. fc in GHz.
RadioProfile terrestrial_profile(double fc_ghz);
RadioProfile uav_profile(double fc_ghz);

// Probability of a LoS link between a transmitter at altitude h_b and a
// receiver at altitude h_k separated by horizontal distance r:
//
//   prod over n = 0 .. floor(r*sqrt(alpha*beta)/1000 - 1) of
//     1 - exp( -(h_b - (n+1/2)(h_b-h_k)/(n+1))^2 / (2 gamma^2) )
//
// The empty product (r small) is 1. Requires h_b > h_k: the obstruction
// model presumes an elevated transmitter.
double los_probability(const EnvironmentParams& env, double h_b, double h_k,
                       double r);

// A + 10 * delta(h_b) * log10(d), with d the 3D distance in meters.
double path_loss_db(const RadioProfile& profile, LinkCondition condition,
                    double d, double h_b);

struct LinkBudget {
  double pr_los = 1.0;
  double loss_los_db = 0.0;
  double loss_nlos_db = 0.0;
  // E[g] = pr_los * 10^(-L_los/10) + (1 - pr_los) * 10^(-L_nlos/10)
  double expected_gain = 1.0;
};

LinkBudget link_budget(const EnvironmentParams& env, const RadioProfile& profile,
                       const Position3D& bs, const Position3D& user);

// Channel gain realization: gain under the given condition.
double condition_gain(const LinkBudget& budget, LinkCondition condition);

// Thermal noise in watts for the given bandwidth and noise PSD in dBm/Hz.
double noise_power_watts(double bandwidth_hz, double psd_dbm_per_hz);

// Linear SINR of the link at rx_powers_w[serving]; every other entry of
// rx_powers_w interferes.
double sinr_linear(std::span<const double> rx_powers_w, std::size_t serving,
                   double noise_w);

// Shannon rate omega * log2(1 + sinr), bits per second.
double achievable_rate_bps(double sinr, double bandwidth_hz);

}  // namespace skyplace
