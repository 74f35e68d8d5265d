#include "skyplace/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace skyplace {

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double v) { return 10.0 * std::log10(v); }
double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
double watts_to_dbm(double w) { return 10.0 * std::log10(w) + 30.0; }

double ExponentRule::at(double h) const {
  if (log10_slope == 0.0) return intercept;
  return intercept + log10_slope * std::log10(h);
}

RadioProfile terrestrial_profile(double fc_ghz) {
  RadioProfile p;
  p.ref_loss_los_db = 28.0 + 20.0 * std::log10(fc_ghz);
  p.ref_loss_nlos_db = 13.54 + 20.0 * std::log10(fc_ghz);
  p.exponent_los = {2.2, 0.0};
  p.exponent_nlos = {3.9, 0.0};
  return p;
}

RadioProfile uav_profile(double fc_ghz) {
  RadioProfile p;
  p.ref_loss_los_db = 30.9 + 20.0 * std::log10(fc_ghz);
  p.ref_loss_nlos_db = 32.4 + 20.0 * std::log10(fc_ghz);
  p.exponent_los = {2.225, -0.05};
  p.exponent_nlos = {4.32, -0.76};
  return p;
}

double los_probability(const EnvironmentParams& env, double h_b, double h_k,
                       double r) {
  if (!(h_b > h_k)) {
    throw std::domain_error("los_probability requires h_b > h_k");
  }
  const double limit = std::floor(r * std::sqrt(env.alpha * env.beta) / 1000.0 - 1.0);
  if (limit < 0.0) return 1.0;
  const int m = static_cast<int>(limit);
  const double inv_2g2 = 1.0 / (2.0 * env.gamma * env.gamma);
  double p = 1.0;
  for (int n = 0; n <= m; ++n) {
    const double obstacle = h_b - (n + 0.5) * (h_b - h_k) / (n + 1);
    p *= 1.0 - std::exp(-obstacle * obstacle * inv_2g2);
  }
  return p;
}

double path_loss_db(const RadioProfile& profile, LinkCondition condition,
                    double d, double h_b) {
  if (!(d > 0.0)) throw std::domain_error("path_loss_db requires d > 0");
  const bool los = condition == LinkCondition::los;
  const double a = los ? profile.ref_loss_los_db : profile.ref_loss_nlos_db;
  const ExponentRule& rule = los ? profile.exponent_los : profile.exponent_nlos;
  return a + 10.0 * rule.at(h_b) * std::log10(d);
}

LinkBudget link_budget(const EnvironmentParams& env, const RadioProfile& profile,
                       const Position3D& bs, const Position3D& user) {
  const double r = horizontal_distance(bs, user);
  const double d = distance_3d(bs, user);
  LinkBudget b;
  b.pr_los = los_probability(env, bs.h, user.h, r);
  b.loss_los_db = path_loss_db(profile, LinkCondition::los, d, bs.h);
  b.loss_nlos_db = path_loss_db(profile, LinkCondition::nlos, d, bs.h);
  b.expected_gain = b.pr_los * db_to_linear(-b.loss_los_db) +
                    (1.0 - b.pr_los) * db_to_linear(-b.loss_nlos_db);
  return b;
}

double condition_gain(const LinkBudget& budget, LinkCondition condition) {
  return db_to_linear(condition == LinkCondition::los ? -budget.loss_los_db
                                                      : -budget.loss_nlos_db);
}

double noise_power_watts(double bandwidth_hz, double psd_dbm_per_hz) {
  if (!(bandwidth_hz > 0.0)) throw std::domain_error("bandwidth must be > 0");
  return dbm_to_watts(psd_dbm_per_hz + 10.0 * std::log10(bandwidth_hz));
}

double sinr_linear(std::span<const double> rx_powers_w, std::size_t serving,
                   double noise_w) {
  double interference = 0.0;
  for (std::size_t i = 0; i < rx_powers_w.size(); ++i) {
    if (i != serving) interference += rx_powers_w[i];
  }
  return rx_powers_w[serving] / (interference + noise_w);
}

double achievable_rate_bps(double sinr, double bandwidth_hz) {
  return bandwidth_hz * std::log2(1.0 + sinr);
}

}  // namespace skyplace
